//! Cross-checks of transcribed reference values against objects rebuilt from
//! first principles (spin eigenvectors, outer products, tensor products and
//! sums). Discrepancies are reported, never raised.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::epr::{diff_projector, pair_projector, pair_state, pauli_square, singlet};
use crate::lattice::Subspace;
use crate::linalg::{Matrix, StateVector};
use crate::logic::{Axis, Direction};

/// Recipe for rebuilding a reference object.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Derivation {
    /// `σ ⊗ σ` for one axis.
    PauliSquare(Axis),
    /// `|a⟩ ⊗ |b⟩`, compared as a ray.
    PairState(Axis, Direction, Direction),
    /// The singlet prepared along an axis, compared as a ray.
    Singlet(Axis),
    /// `|a⟩⟨a| ⊗ |b⟩⟨b|`.
    PairProjector(Axis, Direction, Direction),
    /// Sum of the two anti-aligned pair projectors.
    DiffProjector(Axis),
    PairRange(Axis, Direction, Direction),
    DiffRange(Axis),
    /// A claimed inclusion chain `first ⊆ second ⊆ ...` between ranges.
    RangeChain(Vec<Derivation>),
}

impl Derivation {
    pub fn evaluate(&self) -> Value {
        match self {
            Derivation::PauliSquare(axis) => Value::Matrix(pauli_square(*axis)),
            Derivation::PairState(axis, a, b) => Value::Ray(pair_state(*axis, *a, *b)),
            Derivation::Singlet(axis) => Value::Ray(singlet(*axis)),
            Derivation::PairProjector(axis, a, b) => Value::Matrix(pair_projector(*axis, *a, *b).into_matrix()),
            Derivation::DiffProjector(axis) => Value::Matrix(diff_projector(*axis).into_matrix()),
            Derivation::PairRange(axis, a, b) => Value::Range(pair_projector(*axis, *a, *b).range()),
            Derivation::DiffRange(axis) => Value::Range(diff_projector(*axis).range()),
            Derivation::RangeChain(links) => Value::Chain(links.iter().map(|d| d.evaluate().as_subspace()).collect()),
        }
    }
}

impl fmt::Display for Derivation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Derivation::PauliSquare(x) => write!(f, "pauli_square({})", x.as_str()),
            Derivation::PairState(x, a, b) => write!(f, "pair_state({},{},{})", x.as_str(), a.as_str(), b.as_str()),
            Derivation::Singlet(x) => write!(f, "singlet({})", x.as_str()),
            Derivation::PairProjector(x, a, b) => {
                write!(f, "pair_projector({},{},{})", x.as_str(), a.as_str(), b.as_str())
            }
            Derivation::DiffProjector(x) => write!(f, "diff_projector({})", x.as_str()),
            Derivation::PairRange(x, a, b) => write!(f, "pair_range({},{},{})", x.as_str(), a.as_str(), b.as_str()),
            Derivation::DiffRange(x) => write!(f, "diff_range({})", x.as_str()),
            Derivation::RangeChain(links) => {
                f.write_str("chain(")?;
                for (i, d) in links.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{d}")?;
                }
                f.write_str(")")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Value {
    Matrix(Matrix),
    Ray(StateVector),
    Range(Subspace),
    Chain(Vec<Subspace>),
}

impl Value {
    pub fn kind(&self) -> &'static str {
        match self {
            Value::Matrix(_) => "matrix",
            Value::Ray(_) => "ray",
            Value::Range(_) => "range",
            Value::Chain(_) => "chain",
        }
    }

    fn as_subspace(&self) -> Subspace {
        match self {
            Value::Range(s) => s.clone(),
            Value::Matrix(m) => Subspace::column_space(m),
            Value::Ray(v) => Subspace::span(v.dim(), core::slice::from_ref(v)).expect("own dimension"),
            Value::Chain(links) => links.last().cloned().unwrap_or_else(|| Subspace::zero(0)),
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Matrix(m) => write!(f, "{m}"),
            Value::Ray(v) => write!(f, "{v}"),
            Value::Range(s) => write!(f, "{s}"),
            Value::Chain(links) => {
                for (i, s) in links.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" ⊆ ")?;
                    }
                    write!(f, "{s}")?;
                }
                Ok(())
            }
        }
    }
}

/// A value as printed in the reference text, keyed by its display label.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrintedFixture {
    pub label: String,
    pub derivation: Derivation,
    pub printed: Value,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Match,
    Mismatch,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Match => "MATCH",
            Status::Mismatch => "MISMATCH",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixtureOutcome {
    pub label: String,
    pub status: Status,
    pub derived: Value,
    pub printed: Value,
    /// Empty on a match; otherwise what differs.
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct AuditReport {
    pub outcomes: Vec<FixtureOutcome>,
}

impl AuditReport {
    pub fn get(&self, label: &str) -> Option<&FixtureOutcome> {
        self.outcomes.iter().find(|o| o.label == label)
    }

    pub fn count(&self, status: Status) -> usize {
        self.outcomes.iter().filter(|o| o.status == status).count()
    }
}

/// Rebuilds every fixture and compares it with the printed value.
pub fn audit_fixtures(fixtures: &[PrintedFixture]) -> AuditReport {
    AuditReport { outcomes: fixtures.iter().map(check).collect() }
}

fn check(fixture: &PrintedFixture) -> FixtureOutcome {
    let derived = fixture.derivation.evaluate();
    let detail = compare(&derived, &fixture.printed);
    FixtureOutcome {
        label: fixture.label.clone(),
        status: if detail.is_empty() { Status::Match } else { Status::Mismatch },
        derived,
        printed: fixture.printed.clone(),
        detail,
    }
}

fn compare(derived: &Value, printed: &Value) -> String {
    match (derived, printed) {
        (Value::Matrix(d), Value::Matrix(p)) => compare_matrices(d, p),
        (Value::Ray(d), Value::Ray(p)) => {
            if d.same_ray(p) {
                String::new()
            } else {
                format!("derived ray {d} is not a multiple of printed {p}")
            }
        }
        (Value::Range(d), Value::Range(p)) => compare_ranges(d, p),
        (Value::Chain(d), Value::Chain(_)) => {
            let broken: Vec<String> = d
                .windows(2)
                .enumerate()
                .filter(|(_, w)| !w[0].leq(&w[1]).unwrap_or(false))
                .map(|(i, w)| format!("link {}: {} ⊄ {}", i + 1, w[0], w[1]))
                .collect();
            broken.join("; ")
        }
        (d, p) => format!("kind mismatch: derived {} vs printed {}", d.kind(), p.kind()),
    }
}

fn compare_matrices(derived: &Matrix, printed: &Matrix) -> String {
    if derived.shape() != printed.shape() {
        return format!("shape {:?} vs printed {:?}", derived.shape(), printed.shape());
    }
    let mut diffs = Vec::new();
    for r in 0..derived.rows() {
        for c in 0..derived.cols() {
            let (d, p) = (derived.get(r, c), printed.get(r, c));
            if d != p {
                diffs.push(format!("({},{}) derived {d} printed {p}", r + 1, c + 1));
            }
        }
    }
    if diffs.is_empty() {
        return String::new();
    }
    let verb = if diffs.len() == 1 { "entry differs" } else { "entries differ" };
    let mut out = format!("{} {verb}: {}", diffs.len(), diffs.join(", "));
    if printed.is_square() && !printed.is_hermitian() {
        out.push_str("; printed matrix is not Hermitian");
    }
    out
}

fn compare_ranges(derived: &Subspace, printed: &Subspace) -> String {
    if derived == printed {
        return String::new();
    }
    if derived.ambient_dim() != printed.ambient_dim() {
        return format!("ambient dimension {} vs printed {}", derived.ambient_dim(), printed.ambient_dim());
    }
    let relation = match (derived.leq(printed), printed.leq(derived)) {
        (Ok(true), _) => "derived is a proper subspace of printed",
        (_, Ok(true)) => "printed is a proper subspace of derived",
        _ => "neither contains the other",
    };
    format!("derived dimension {} vs printed {}; {relation}", derived.dim(), printed.dim())
}
