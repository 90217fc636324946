//! The versioned reference-value file consumed by `paper-check`.
//!
//! ```json
//! {
//!   "version": 1,
//!   "fixtures": [
//!     { "label": "eq25", "derive": "pair_projector(z,up,down)",
//!       "matrix": { "scale": "1", "rows": [["0","0","0","0"], ...] } },
//!     { "label": "eq31.range", "derive": "diff_range(z)",
//!       "range": [["0","1","0","0"], ["0","0","1","0"]] },
//!     { "label": "eq30", "derive": "singlet(z)", "ray": ["0","1","-1","0"] },
//!     { "label": "eq39", "derive": "chain(diff_range(z),diff_range(x))",
//!       "chain": [[[...]], [[...]]] }
//!   ]
//! }
//! ```
//!
//! Entries are exact scalar strings (`-1/4`, `i`, `1/2-1/2*i`). A parametrized
//! family is transcribed as the span of one vector per free parameter.

use std::path::Path;

use gappy_core::audit::{Derivation, PrintedFixture, Value};
use gappy_core::{GaussianRational, Matrix, StateVector, Subspace};
use serde::Deserialize;

use crate::syntax::{parse_axis, parse_direction};

pub const SUPPORTED_VERSION: u32 = 1;

/// The reference values shipped with the binary.
pub const BUILTIN: &str = include_str!("../fixtures/printed_values.json");

#[derive(Debug, thiserror::Error)]
pub enum FixtureError {
    #[error("cannot read fixture file: {0}")]
    Io(#[from] std::io::Error),
    #[error("malformed fixture file: {0}")]
    Json(#[from] serde_json::Error),
    #[error("unsupported fixture file version {0}")]
    Version(u32),
    #[error("fixture {label}: {message}")]
    Invalid { label: String, message: String },
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct FixtureFile {
    version: u32,
    fixtures: Vec<FixtureRecord>,
}

#[derive(Debug, Deserialize)]
struct FixtureRecord {
    label: String,
    derive: String,
    #[serde(flatten)]
    printed: PrintedRecord,
}

type Row = Vec<String>;

#[derive(Debug, Deserialize)]
#[serde(rename_all = "lowercase")]
enum PrintedRecord {
    Matrix {
        #[serde(default)]
        scale: Option<String>,
        rows: Vec<Row>,
    },
    Range(Vec<Row>),
    Ray(Row),
    Chain(Vec<Vec<Row>>),
}

pub fn builtin() -> Vec<PrintedFixture> {
    parse(BUILTIN).expect("bundled fixture file is valid")
}

pub fn load(path: &Path) -> Result<Vec<PrintedFixture>, FixtureError> {
    parse(&std::fs::read_to_string(path)?)
}

pub fn parse(text: &str) -> Result<Vec<PrintedFixture>, FixtureError> {
    let file: FixtureFile = serde_json::from_str(text)?;
    if file.version != SUPPORTED_VERSION {
        return Err(FixtureError::Version(file.version));
    }
    file.fixtures.into_iter().map(convert).collect()
}

fn convert(record: FixtureRecord) -> Result<PrintedFixture, FixtureError> {
    let label = record.label;
    let invalid = |message: String| FixtureError::Invalid { label: label.clone(), message };
    let derivation = parse_derivation(&record.derive).map_err(&invalid)?;
    let printed = match record.printed {
        PrintedRecord::Matrix { scale, rows } => {
            let scale = match scale {
                Some(s) => scalar(&s).map_err(&invalid)?,
                None => GaussianRational::one(),
            };
            let rows = rows.iter().map(|r| scalars(r)).collect::<Result<Vec<_>, _>>().map_err(&invalid)?;
            let m = Matrix::from_rows(rows).map_err(|e| invalid(e.to_string()))?;
            Value::Matrix(m.scale(&scale))
        }
        PrintedRecord::Range(rows) => Value::Range(span(&rows).map_err(&invalid)?),
        PrintedRecord::Ray(row) => {
            let v = StateVector::new(scalars(&row).map_err(&invalid)?).map_err(|e| invalid(e.to_string()))?;
            Value::Ray(v)
        }
        PrintedRecord::Chain(links) => {
            Value::Chain(links.iter().map(|rows| span(rows)).collect::<Result<_, _>>().map_err(&invalid)?)
        }
    };
    Ok(PrintedFixture { label, derivation, printed })
}

fn scalar(s: &str) -> Result<GaussianRational, String> {
    s.parse().map_err(|e: gappy_core::Error| e.to_string())
}

fn scalars(row: &[String]) -> Result<Vec<GaussianRational>, String> {
    row.iter().map(|s| scalar(s)).collect()
}

fn span(rows: &[Row]) -> Result<Subspace, String> {
    let Some(first) = rows.first() else {
        return Err("a range needs at least one vector to fix its dimension".into());
    };
    let dim = first.len();
    let vectors =
        rows.iter().map(|r| StateVector::new(scalars(r)?).map_err(|e| e.to_string())).collect::<Result<Vec<_>, _>>()?;
    Subspace::span(dim, &vectors).map_err(|e| e.to_string())
}

/// Parses derivation keys such as `diff_range(x)` or
/// `chain(diff_range(z),diff_range(x))`.
pub fn parse_derivation(s: &str) -> Result<Derivation, String> {
    let s = s.trim();
    let (name, args) = s
        .strip_suffix(')')
        .and_then(|body| body.split_once('('))
        .ok_or_else(|| format!("malformed derivation {s:?}"))?;
    if name == "chain" {
        return split_top_level(args)
            .iter()
            .map(|a| parse_derivation(a))
            .collect::<Result<_, _>>()
            .map(Derivation::RangeChain);
    }
    let parts: Vec<&str> = args.split(',').map(str::trim).collect();
    let axis = |i: usize| parts.get(i).and_then(|a| parse_axis(a)).ok_or_else(|| format!("bad axis in {s:?}"));
    let dir = |i: usize| parts.get(i).and_then(|d| parse_direction(d)).ok_or_else(|| format!("bad direction in {s:?}"));
    let arity = |n: usize| if parts.len() == n { Ok(()) } else { Err(format!("{name} takes {n} arguments")) };
    match name {
        "pauli_square" => arity(1).and(Ok(Derivation::PauliSquare(axis(0)?))),
        "singlet" => arity(1).and(Ok(Derivation::Singlet(axis(0)?))),
        "diff_projector" => arity(1).and(Ok(Derivation::DiffProjector(axis(0)?))),
        "diff_range" => arity(1).and(Ok(Derivation::DiffRange(axis(0)?))),
        "pair_state" => arity(3).and(Ok(Derivation::PairState(axis(0)?, dir(1)?, dir(2)?))),
        "pair_projector" => arity(3).and(Ok(Derivation::PairProjector(axis(0)?, dir(1)?, dir(2)?))),
        "pair_range" => arity(3).and(Ok(Derivation::PairRange(axis(0)?, dir(1)?, dir(2)?))),
        _ => Err(format!("unknown derivation {name:?}")),
    }
}

fn split_top_level(s: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let (mut depth, mut start) = (0usize, 0usize);
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth = depth.saturating_sub(1),
            ',' if depth == 0 => {
                out.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(&s[start..]);
    out
}
