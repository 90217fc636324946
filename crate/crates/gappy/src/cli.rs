//! Command-line front end. `run` is pure: it returns the exit code and both
//! output streams so tests can drive it in-process.

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use gappy_core::audit::audit_fixtures;
use gappy_core::epr::{self, run_epr};
use gappy_core::logic::valuate;
use gappy_core::{Atom, Axis, Direction, Particle, StateVector, Subspace};
use serde_json::json;

use crate::fixtures;
use crate::report::{self, Semantics};
use crate::syntax::{parse_atom_list, parse_proposition, parse_span, parse_state};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;

const PAIR_DIM: usize = 4;

#[derive(Debug, Parser)]
#[command(name = "gappy", version, about = "Supervaluationist quantum logic for a spin-½ singlet pair")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Output {
    Table,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum AxisArg {
    X,
    Y,
    Z,
}

impl From<AxisArg> for Axis {
    fn from(a: AxisArg) -> Axis {
        match a {
            AxisArg::X => Axis::X,
            AxisArg::Y => Axis::Y,
            AxisArg::Z => Axis::Z,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum LatticeOp {
    Meet,
    Join,
    Sum,
    Leq,
    Orthocomplement,
    Contains,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Prepare the singlet, verify A up along an axis, and compare the joint
    /// query under both semantics.
    EprRun {
        #[arg(long, value_enum, default_value = "z")]
        axis: AxisArg,
        /// Comma-separated atoms, e.g. B.z.down,B.x.up. Defaults to B.<axis>.down
        /// and one B atom along another axis.
        #[arg(long, value_parser = atoms)]
        query: Option<AtomList>,
        #[arg(long, value_enum, default_value = "both")]
        semantics: Semantics,
        #[arg(long, value_enum, default_value = "table")]
        output: Output,
    },
    /// Valuate one proposition in the singlet or a given state.
    Valuate {
        #[arg(long)]
        prop: String,
        /// Comma-separated exact entries, e.g. 0,1,-1/2,i.
        #[arg(long)]
        state: Option<String>,
        #[arg(long, value_enum, default_value = "table")]
        output: Output,
    },
    /// Lattice operations on ranges. Operands are propositions or span
    /// literals such as span{[0,1,0,0],[0,0,1,0]}; `contains` takes a state
    /// on the left.
    Lattice {
        #[arg(long, value_enum)]
        op: LatticeOp,
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: Option<String>,
        #[arg(long, value_enum, default_value = "table")]
        output: Output,
    },
    /// Compare transcribed reference values with rebuilt ones.
    PaperCheck {
        #[arg(long)]
        fixtures: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "table")]
        output: Output,
    },
}

#[derive(Debug, Clone)]
struct AtomList(Vec<Atom>);

fn atoms(s: &str) -> Result<AtomList, String> {
    parse_atom_list(s).map(AtomList).map_err(|e| e.to_string())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { code: EXIT_OK, stdout, stderr: String::new() }
    }

    fn usage(message: impl std::fmt::Display) -> Self {
        Outcome { code: EXIT_USAGE, stdout: String::new(), stderr: format!("error: {message}\n") }
    }

    fn domain(message: impl std::fmt::Display) -> Self {
        Outcome { code: EXIT_DOMAIN, stdout: String::new(), stderr: format!("error: {message}\n") }
    }
}

/// Runs one invocation. `args` includes the program name.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code: EXIT_USAGE, stdout: String::new(), stderr: text }
            } else {
                Outcome::ok(text)
            };
        }
    };
    match cli.command {
        Command::EprRun { axis, query, semantics, output } => {
            epr_run(axis.into(), query.map(|q| q.0), semantics, output)
        }
        Command::Valuate { prop, state, output } => valuate_cmd(&prop, state.as_deref(), output),
        Command::Lattice { op, left, right, output } => lattice(op, &left, right.as_deref(), output),
        Command::PaperCheck { fixtures, output } => paper_check(fixtures, output),
    }
}

fn default_query(axis: Axis) -> Vec<Atom> {
    let other = if axis == Axis::X { Axis::Z } else { Axis::X };
    vec![Atom::new(Particle::B, axis, Direction::Down), Atom::new(Particle::B, other, Direction::Up)]
}

fn epr_run(axis: Axis, query: Option<Vec<Atom>>, semantics: Semantics, output: Output) -> Outcome {
    let query = query.unwrap_or_else(|| default_query(axis));
    let report = match run_epr(axis, &query) {
        Ok(r) => r,
        Err(e) => return Outcome::domain(e),
    };
    let audit = audit_fixtures(&fixtures::builtin());
    Outcome::ok(match output {
        Output::Table => report::scenario_text(&report, semantics, &audit),
        Output::Json => report::to_json_text(&report::scenario_json(&report, semantics, &audit)),
    })
}

fn valuate_cmd(prop: &str, state: Option<&str>, output: Output) -> Outcome {
    let prop = match parse_proposition(prop) {
        Ok(p) => p,
        Err(e) => return Outcome::usage(e),
    };
    let state = match state {
        None => epr::singlet(Axis::Z),
        Some(s) => match parse_state(s) {
            Ok(v) if v.dim() == PAIR_DIM => v,
            Ok(v) => return Outcome::usage(format!("state has {} entries, expected {PAIR_DIM}", v.dim())),
            Err(e) => return Outcome::usage(e),
        },
    };
    let value = match epr::compile(&prop).and_then(|p| valuate(&state, &p)) {
        Ok(v) => v,
        Err(e) => return Outcome::domain(e),
    };
    Outcome::ok(match output {
        Output::Table => format!("{}\n", value.as_str()),
        Output::Json => report::to_json_text(&json!({
            "proposition": prop.to_string(),
            "state": report::state_json(&state),
            "value": value.as_str(),
        })),
    })
}

enum Operand {
    Range(Subspace),
    Failed(Outcome),
}

fn operand(text: &str) -> Operand {
    let t = text.trim();
    if t.starts_with('[') || t.starts_with("span{") {
        return match parse_span(t, PAIR_DIM) {
            Ok(s) => Operand::Range(s),
            Err(e) => Operand::Failed(Outcome::usage(e)),
        };
    }
    let prop = match parse_proposition(t) {
        Ok(p) => p,
        Err(e) => return Operand::Failed(Outcome::usage(e)),
    };
    match epr::compile(&prop) {
        Ok(p) => Operand::Range(p.range()),
        Err(e) => Operand::Failed(Outcome::domain(e)),
    }
}

fn lattice(op: LatticeOp, left: &str, right: Option<&str>, output: Output) -> Outcome {
    let needs_right = op != LatticeOp::Orthocomplement;
    let right = match (needs_right, right) {
        (true, None) => return Outcome::usage("this operation needs --right"),
        (false, Some(_)) => return Outcome::usage("orthocomplement takes only --left"),
        (_, r) => r,
    };
    let rhs = match right.map(operand) {
        Some(Operand::Failed(o)) => return o,
        Some(Operand::Range(s)) => Some(s),
        None => None,
    };
    let result: Result<String, gappy_core::Error> = if op == LatticeOp::Contains {
        let state: StateVector = match parse_state(left) {
            Ok(v) => v,
            Err(e) => return Outcome::usage(e),
        };
        rhs.expect("checked above").contains(&state).map(|b| b.to_string())
    } else {
        let lhs = match operand(left) {
            Operand::Range(s) => s,
            Operand::Failed(o) => return o,
        };
        match (op, rhs) {
            (LatticeOp::Orthocomplement, _) => Ok(lhs.orthocomplement().to_string()),
            (LatticeOp::Meet, Some(r)) => lhs.meet(&r).map(|s| s.to_string()),
            (LatticeOp::Join, Some(r)) => lhs.join(&r).map(|s| s.to_string()),
            (LatticeOp::Sum, Some(r)) => lhs.sum(&r).map(|s| s.to_string()),
            (LatticeOp::Leq, Some(r)) => lhs.leq(&r).map(|b| b.to_string()),
            _ => unreachable!("right operand presence checked above"),
        }
    };
    let result = match result {
        Ok(r) => r,
        Err(e) => return Outcome::domain(e),
    };
    Outcome::ok(match output {
        Output::Table => format!("{result}\n"),
        Output::Json => report::to_json_text(&json!({
            "op": op.to_possible_value().expect("no skipped variants").get_name(),
            "result": result,
        })),
    })
}

fn paper_check(path: Option<PathBuf>, output: Output) -> Outcome {
    let fixtures = match path {
        None => fixtures::builtin(),
        Some(p) => match fixtures::load(&p) {
            Ok(f) => f,
            Err(e) => return Outcome::usage(e),
        },
    };
    let derive: Vec<String> = fixtures.iter().map(|f| f.derivation.to_string()).collect();
    let audit = audit_fixtures(&fixtures);
    Outcome::ok(match output {
        Output::Table => report::audit_text(&audit, &derive),
        Output::Json => report::to_json_text(&report::audit_json(&audit, &derive)),
    })
}
