use std::path::PathBuf;
use std::process::Command;

use gappy::cli::{run, Outcome, EXIT_DOMAIN, EXIT_OK, EXIT_USAGE};

fn invoke(args: &[&str]) -> Outcome {
    run(std::iter::once("gappy").chain(args.iter().copied()))
}

fn render(o: &Outcome) -> String {
    format!("exit: {}\n--- stdout\n{}--- stderr\n{}", o.code, o.stdout, o.stderr)
}

fn golden_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name)
}

/// Compares against `tests/golden/<name>`; `UPDATE_GOLDEN=1` rewrites it.
fn check_golden(name: &str, args: &[&str]) -> Outcome {
    let first = invoke(args);
    let second = invoke(args);
    assert_eq!(first, second, "{args:?} is not deterministic");
    let path = golden_path(name);
    let actual = render(&first);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::create_dir_all(path.parent().unwrap()).unwrap();
        std::fs::write(&path, &actual).unwrap();
    }
    let expected = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    assert_eq!(actual, expected, "golden {name} differs");
    first
}

#[test]
fn epr_run_population_contrast() {
    let o = check_golden(
        "epr_run_contrast.txt",
        &["epr-run", "--axis", "z", "--query", "B.z.down,B.x.up", "--semantics", "both"],
    );
    assert_eq!(o.code, EXIT_OK);
    let line = |prefix: &str| o.stdout.lines().find(|l| l.starts_with(prefix)).unwrap().to_string();
    assert!(line("supervaluation").ends_with(" ∅"));
    assert!(line("classical").ends_with("{(1,1),(1,0)}"));
}

#[test]
fn epr_run_single_atom() {
    let o = check_golden("epr_run_single.txt", &["epr-run", "--axis", "z", "--query", "B.z.down"]);
    assert_eq!(o.code, EXIT_OK);
    assert!(o.stdout.lines().any(|l| l.starts_with("supervaluation") && l.ends_with("{(1)}")));
    assert!(o.stdout.lines().any(|l| l.starts_with("classical") && l.ends_with("{(1)}")));
}

#[test]
fn epr_run_rejects_unknown_axis() {
    let o = check_golden("epr_run_bad_axis.txt", &["epr-run", "--axis", "w"]);
    assert_eq!(o.code, EXIT_USAGE);
    assert!(o.stdout.is_empty());
}

#[test]
fn valuate_diff_in_singlet() {
    let o = check_golden("valuate_diff.txt", &["valuate", "--prop", "A.z.up & B.z.down ^ A.z.down & B.z.up"]);
    assert_eq!(o.stdout, "true\n");
}

#[test]
fn valuate_constituent_in_singlet() {
    let o = check_golden("valuate_constituent.txt", &["valuate", "--prop", "A.z.up & B.z.down"]);
    assert_eq!(o.stdout, "gap\n");
}

#[test]
fn valuate_in_eigenstate() {
    let o = check_golden("valuate_eigenstate.txt", &["valuate", "--prop", "A.z.up & B.z.down", "--state", "0,1,0,0"]);
    assert_eq!(o.stdout, "true\n");
}

#[test]
fn paper_check_table() {
    let o = check_golden("paper_check.txt", &["paper-check"]);
    assert_eq!(o.code, EXIT_OK);
    let status = |label: &str| {
        o.stdout
            .lines()
            .find(|l| l.split_whitespace().next() == Some(label))
            .and_then(|l| l.split_whitespace().nth(1))
            .unwrap()
            .to_string()
    };
    assert_eq!(status("eq25"), "MATCH");
    assert_eq!(status("eq37.final"), "MISMATCH");
}

#[test]
fn paper_check_json() {
    let o = check_golden("paper_check.json", &["paper-check", "--output", "json"]);
    let v: serde_json::Value = serde_json::from_str(&o.stdout).unwrap();
    let records = v["fixtures"].as_array().unwrap();
    assert_eq!(v["summary"]["total"].as_u64().unwrap() as usize, records.len());
    let diff_y_final = records.iter().find(|r| r["label"] == "eq37.final").unwrap();
    assert_eq!(diff_y_final["status"], "MISMATCH");
}

#[test]
fn json_reports_round_trip_byte_for_byte() {
    for args in [
        &["epr-run", "--output", "json"][..],
        &["epr-run", "--axis", "y", "--query", "B.y.down,B.z.up", "--semantics", "classical", "--output", "json"],
        &["paper-check", "--output", "json"],
        &["valuate", "--prop", "A.x.up", "--output", "json"],
        &["lattice", "--op", "join", "--left", "A.z.up & B.z.down", "--right", "A.z.down & B.z.up", "--output", "json"],
    ] {
        let o = invoke(args);
        assert_eq!(o.code, EXIT_OK, "{args:?}: {}", o.stderr);
        let parsed: serde_json::Value = serde_json::from_str(&o.stdout).unwrap();
        assert_eq!(gappy::report::to_json_text(&parsed), o.stdout, "{args:?}");
    }
}

#[test]
fn epr_json_schema_fields() {
    let o = invoke(&["epr-run", "--query", "B.z.down,B.x.up", "--output", "json"]);
    let v: serde_json::Value = serde_json::from_str(&o.stdout).unwrap();
    for key in ["state", "valuations", "populations", "fixtures"] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
    assert_eq!(v["populations"]["labels"], serde_json::json!(["B.z.down", "B.x.up"]));
    assert_eq!(v["populations"]["supervaluation"]["tuples"], serde_json::json!([]));
    assert_eq!(v["populations"]["classical"]["tuples"], serde_json::json!([[1, 1], [1, 0]]));
    assert_eq!(v["populations"]["classical"]["components"], serde_json::json!(["true", "indeterminate"]));
    assert_eq!(v["state"]["post"], serde_json::json!(["0", "1", "0", "0"]));
}

#[test]
fn semantics_filter() {
    let super_only = invoke(&["epr-run", "--semantics", "super"]);
    assert!(super_only.stdout.contains("supervaluation"));
    assert!(!super_only.stdout.lines().any(|l| l.starts_with("classical")));
    let classical_only = invoke(&["epr-run", "--semantics", "classical", "--output", "json"]);
    let v: serde_json::Value = serde_json::from_str(&classical_only.stdout).unwrap();
    assert!(v["populations"].get("supervaluation").is_none());
}

#[test]
fn usage_and_domain_errors_are_distinguished() {
    for args in [
        &["valuate", "--prop", "A.z.up |"][..],
        &["valuate", "--prop", "A.z.up", "--state", "0,0,0,0"],
        &["valuate", "--prop", "A.z.up", "--state", "1,0"],
        &["epr-run", "--query", "B.q.up"],
        &["epr-run", "--bogus"],
        &["lattice", "--op", "meet", "--left", "A.z.up"],
        &["lattice", "--op", "orthocomplement", "--left", "A.z.up", "--right", "A.z.up"],
        &["paper-check", "--fixtures", "/nonexistent/fixtures.json"],
    ] {
        let o = invoke(args);
        assert_eq!(o.code, EXIT_USAGE, "{args:?}");
        assert!(o.stdout.is_empty());
        assert!(!o.stderr.is_empty());
    }
    let o = invoke(&["valuate", "--prop", "A.z.up & A.x.up"]);
    assert_eq!(o.code, EXIT_DOMAIN);
    assert!(o.stderr.contains("non-commuting"));
}

#[test]
fn lattice_queries() {
    let out = |args: &[&str]| {
        let o = invoke(args);
        assert_eq!(o.code, EXIT_OK, "{args:?}: {}", o.stderr);
        o.stdout
    };
    assert_eq!(
        out(&["lattice", "--op", "join", "--left", "A.z.up & B.z.down", "--right", "A.z.down & B.z.up"]),
        "span{[0,1,0,0],[0,0,1,0]}\n"
    );
    assert_eq!(out(&["lattice", "--op", "meet", "--left", "A.z.up", "--right", "B.z.down"]), "span{[0,1,0,0]}\n");
    assert_eq!(out(&["lattice", "--op", "meet", "--left", "A.z.up", "--right", "A.z.down"]), "span{}\n");
    assert_eq!(out(&["lattice", "--op", "leq", "--left", "span{[0,1,0,0]}", "--right", "A.z.up"]), "true\n");
    assert_eq!(
        out(&["lattice", "--op", "contains", "--left", "0,1,-1,0", "--right", "A.x.up & B.x.down ^ A.x.down & B.x.up"]),
        "true\n"
    );
    assert_eq!(
        out(&["lattice", "--op", "orthocomplement", "--left", "[1,0,0,0],[0,1,0,0],[0,0,1,0]"]),
        "span{[0,0,0,1]}\n"
    );
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_gappy");
    let status = |args: &[&str]| Command::new(bin).args(args).output().unwrap();
    let ok = status(&["valuate", "--prop", "A.z.up & B.z.down"]);
    assert_eq!(ok.status.code(), Some(EXIT_OK));
    assert_eq!(String::from_utf8(ok.stdout).unwrap(), "gap\n");
    assert_eq!(status(&["epr-run", "--axis", "w"]).status.code(), Some(EXIT_USAGE));
    assert_eq!(status(&["valuate", "--prop", "A.z.up & A.x.up"]).status.code(), Some(EXIT_DOMAIN));
    assert_eq!(status(&["paper-check"]).status.code(), Some(EXIT_OK));
}

#[test]
fn custom_fixture_file() {
    let dir = std::env::temp_dir().join(format!("gappy-fixtures-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("f.json");
    std::fs::write(
        &path,
        r#"{"version":1,"fixtures":[{"label":"ud","derive":"pair_state(z,up,down)","ray":["0","2","0","0"]}]}"#,
    )
    .unwrap();
    let o = invoke(&["paper-check", "--fixtures", path.to_str().unwrap()]);
    assert_eq!(o.code, EXIT_OK);
    assert!(o.stdout.contains("1 fixtures: 1 MATCH, 0 MISMATCH"));
    std::fs::remove_dir_all(dir).unwrap();
}
