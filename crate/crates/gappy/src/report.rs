//! JSON and plain-text renderings of scenario runs and fixture audits.
//!
//! JSON objects are built as `serde_json::Value`, whose maps keep keys
//! sorted, so serializing a parsed report reproduces it byte for byte.

use gappy_core::audit::{AuditReport, FixtureOutcome, Status};
use gappy_core::epr::{JointValuation, ScenarioReport, Valuation, CROSS_RUN_NOTE};
use gappy_core::{Population, StateVector};
use serde_json::{json, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Semantics {
    Super,
    Classical,
    Both,
}

impl Semantics {
    pub fn as_str(self) -> &'static str {
        match self {
            Semantics::Super => "super",
            Semantics::Classical => "classical",
            Semantics::Both => "both",
        }
    }

    fn shows_super(self) -> bool {
        self != Semantics::Classical
    }

    fn shows_classical(self) -> bool {
        self != Semantics::Super
    }
}

/// Pretty-printed JSON with a trailing newline.
pub fn to_json_text(value: &Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("values always serialize");
    s.push('\n');
    s
}

pub fn state_json(v: &StateVector) -> Value {
    Value::Array(v.entries().iter().map(|x| Value::String(x.to_string())).collect())
}

fn tuples_json(p: &Population) -> Value {
    p.tuples().iter().map(|t| t.iter().map(|&b| u8::from(b)).collect::<Vec<_>>()).collect()
}

fn joint_json(j: &JointValuation) -> Value {
    json!({
        "components": j.components.iter().map(|c| c.as_str()).collect::<Vec<_>>(),
        "tuples": tuples_json(&j.population),
    })
}

fn valuations_json(rows: &[Valuation]) -> Value {
    rows.iter().map(|v| json!({ "proposition": v.proposition.to_string(), "value": v.value.as_str() })).collect()
}

fn fixture_summary_json(audit: &AuditReport) -> Value {
    json!({
        "total": audit.outcomes.len(),
        "match": audit.count(Status::Match),
        "mismatch": audit.count(Status::Mismatch),
    })
}

pub fn scenario_json(report: &ScenarioReport, semantics: Semantics, audit: &AuditReport) -> Value {
    let mut populations = json!({
        "labels": report.query.iter().map(ToString::to_string).collect::<Vec<_>>(),
    });
    if semantics.shows_super() {
        populations["supervaluation"] = joint_json(&report.supervaluation);
    }
    if semantics.shows_classical() {
        populations["classical"] = joint_json(&report.classical);
    }
    json!({
        "axis": report.axis.as_str(),
        "verified": report.verified.to_string(),
        "semantics": semantics.as_str(),
        "state": { "prepared": state_json(&report.prepared), "post": state_json(&report.post) },
        "valuations": { "before": valuations_json(&report.before), "after": valuations_json(&report.after) },
        "populations": populations,
        "fixtures": fixture_summary_json(audit),
        "note": CROSS_RUN_NOTE,
    })
}

fn outcome_json(o: &FixtureOutcome, derive: &str) -> Value {
    json!({
        "label": o.label,
        "status": o.status.as_str(),
        "derive": derive,
        "derived": o.derived.to_string(),
        "printed": o.printed.to_string(),
        "detail": o.detail,
    })
}

/// `derive` lists the derivation key of each outcome, in order.
pub fn audit_json(audit: &AuditReport, derive: &[String]) -> Value {
    json!({
        "fixtures": audit.outcomes.iter().zip(derive).map(|(o, d)| outcome_json(o, d)).collect::<Vec<_>>(),
        "summary": fixture_summary_json(audit),
    })
}

/// Left-aligned columns separated by two spaces; trailing blanks trimmed.
pub fn table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: Vec<&str>| {
        let padded: Vec<String> = cells.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
        let mut s = padded.join("  ").trim_end().to_string();
        s.push('\n');
        s
    };
    let mut out = line(header.to_vec());
    out.push_str(&line(widths.iter().map(|w| "-".repeat(*w)).collect::<Vec<_>>().iter().map(String::as_str).collect()));
    for row in rows {
        out.push_str(&line(row.iter().map(String::as_str).collect()));
    }
    out
}

fn components_text(j: &JointValuation) -> String {
    j.components.iter().map(|c| c.as_set_str()).collect::<Vec<_>>().join(" × ")
}

pub fn scenario_text(report: &ScenarioReport, semantics: Semantics, audit: &AuditReport) -> String {
    let mut out = format!(
        "singlet prepared along {}, verified {}\nprepared state  {}\npost state      {}\n\n",
        report.axis.as_str(),
        report.verified,
        report.prepared,
        report.post
    );
    let rows: Vec<Vec<String>> = report
        .before
        .iter()
        .zip(&report.after)
        .map(|(b, a)| vec![b.proposition.to_string(), b.value.as_str().into(), a.value.as_str().into()])
        .collect();
    out.push_str(&table(&["proposition", "before", "after"], &rows));

    out.push_str(&format!("\njoint query: {}\n", report.query_label()));
    let mut rows = Vec::new();
    if semantics.shows_super() {
        let j = &report.supervaluation;
        rows.push(vec!["supervaluation".into(), components_text(j), j.population.to_string()]);
    }
    if semantics.shows_classical() {
        let j = &report.classical;
        rows.push(vec!["classical".into(), components_text(j), j.population.to_string()]);
    }
    out.push_str(&table(&["semantics", "components", "population"], &rows));

    out.push_str(&format!(
        "\nfixtures: {} checked, {} MATCH, {} MISMATCH\nnote: {}\n",
        audit.outcomes.len(),
        audit.count(Status::Match),
        audit.count(Status::Mismatch),
        CROSS_RUN_NOTE
    ));
    out
}

pub fn audit_text(audit: &AuditReport, derive: &[String]) -> String {
    let rows: Vec<Vec<String>> = audit
        .outcomes
        .iter()
        .zip(derive)
        .map(|(o, d)| vec![o.label.clone(), o.status.as_str().into(), d.clone(), o.detail.clone()])
        .collect();
    let mut out = table(&["label", "status", "derivation", "detail"], &rows);
    out.push_str(&format!(
        "\n{} fixtures: {} MATCH, {} MISMATCH\n",
        audit.outcomes.len(),
        audit.count(Status::Match),
        audit.count(Status::Mismatch)
    ));
    out
}
