//! Spin propositions and their two competing semantics.
//!
//! *Supervaluation*: a proposition compiles to a projector and is true in a
//! state lying in its range, false in a state lying in its kernel, and has no
//! truth value at all (a gap) otherwise.
//!
//! *Classical*: every atom carries a preexisting value in `{0, 1}` and compound
//! propositions are evaluated truth-functionally.

use alloc::boxed::Box;
use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::linalg::StateVector;
use crate::projector::Projector;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Particle {
    A,
    B,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Axis {
    X,
    Y,
    Z,
}

impl Axis {
    pub const ALL: [Axis; 3] = [Axis::X, Axis::Y, Axis::Z];

    pub fn as_str(self) -> &'static str {
        match self {
            Axis::X => "x",
            Axis::Y => "y",
            Axis::Z => "z",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Direction {
    Up,
    Down,
}

impl Direction {
    pub fn flip(self) -> Direction {
        match self {
            Direction::Up => Direction::Down,
            Direction::Down => Direction::Up,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Direction::Up => "up",
            Direction::Down => "down",
        }
    }
}

impl Particle {
    pub fn as_str(self) -> &'static str {
        match self {
            Particle::A => "A",
            Particle::B => "B",
        }
    }
}

/// "Particle `particle` has spin projection +½ (up) or −½ (down) along `axis`."
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Atom {
    pub particle: Particle,
    pub axis: Axis,
    pub direction: Direction,
}

impl Atom {
    pub const fn new(particle: Particle, axis: Axis, direction: Direction) -> Self {
        Self { particle, axis, direction }
    }

    /// All twelve atoms in lexicographic order.
    pub fn all() -> impl Iterator<Item = Atom> {
        [Particle::A, Particle::B].into_iter().flat_map(|p| {
            Axis::ALL
                .into_iter()
                .flat_map(move |a| [Direction::Up, Direction::Down].into_iter().map(move |d| Atom::new(p, a, d)))
        })
    }

    /// The mutually exclusive alternative on the same particle and axis.
    pub fn opposite(self) -> Atom {
        Atom { direction: self.direction.flip(), ..self }
    }
}

/// Renders as `A.z.up`.
impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}.{}.{}", self.particle.as_str(), self.axis.as_str(), self.direction.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Proposition {
    Atom(Atom),
    And(Box<Proposition>, Box<Proposition>),
    Xor(Box<Proposition>, Box<Proposition>),
}

impl Proposition {
    pub fn atom(particle: Particle, axis: Axis, direction: Direction) -> Self {
        Proposition::Atom(Atom::new(particle, axis, direction))
    }

    pub fn and(self, rhs: Proposition) -> Self {
        Proposition::And(Box::new(self), Box::new(rhs))
    }

    pub fn xor(self, rhs: Proposition) -> Self {
        Proposition::Xor(Box::new(self), Box::new(rhs))
    }

    /// `A.axis.a & B.axis.b`.
    pub fn pair(axis: Axis, a: Direction, b: Direction) -> Self {
        Self::atom(Particle::A, axis, a).and(Self::atom(Particle::B, axis, b))
    }

    /// Spins agree along `axis`: `↑↑ ⊻ ↓↓`.
    pub fn same(axis: Axis) -> Self {
        use Direction::*;
        Self::pair(axis, Up, Up).xor(Self::pair(axis, Down, Down))
    }

    /// Spins differ along `axis`: `↑↓ ⊻ ↓↑`.
    pub fn diff(axis: Axis) -> Self {
        use Direction::*;
        Self::pair(axis, Up, Down).xor(Self::pair(axis, Down, Up))
    }

    pub fn atoms(&self) -> BTreeSet<Atom> {
        let mut out = BTreeSet::new();
        self.collect_atoms(&mut out);
        out
    }

    fn collect_atoms(&self, out: &mut BTreeSet<Atom>) {
        match self {
            Proposition::Atom(a) => {
                out.insert(*a);
            }
            Proposition::And(l, r) | Proposition::Xor(l, r) => {
                l.collect_atoms(out);
                r.collect_atoms(out);
            }
        }
    }
}

impl From<Atom> for Proposition {
    fn from(a: Atom) -> Self {
        Proposition::Atom(a)
    }
}

/// Infix form with `&` binding tighter than `^`; both are left-associative.
impl fmt::Display for Proposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Proposition::Atom(a) => write!(f, "{a}"),
            Proposition::And(l, r) => {
                let wrap_l = matches!(**l, Proposition::Xor(..));
                let wrap_r = !matches!(**r, Proposition::Atom(_));
                write_operand(f, l, wrap_l)?;
                f.write_str(" & ")?;
                write_operand(f, r, wrap_r)
            }
            Proposition::Xor(l, r) => {
                let wrap_r = matches!(**r, Proposition::Xor(..));
                write_operand(f, l, false)?;
                f.write_str(" ^ ")?;
                write_operand(f, r, wrap_r)
            }
        }
    }
}

fn write_operand(f: &mut fmt::Formatter<'_>, p: &Proposition, wrap: bool) -> fmt::Result {
    if wrap {
        write!(f, "({p})")
    } else {
        write!(f, "{p}")
    }
}

/// The set of admissible truth values of a proposition in a circumstance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TruthValueSet {
    /// `∅`: neither true nor false.
    Gap,
    /// `{0}`
    FalseOnly,
    /// `{1}`
    TrueOnly,
    /// `{0, 1}`: bivalent but not yet known.
    Indeterminate,
}

impl TruthValueSet {
    pub fn from_flags(can_be_true: bool, can_be_false: bool) -> Self {
        match (can_be_true, can_be_false) {
            (true, true) => TruthValueSet::Indeterminate,
            (true, false) => TruthValueSet::TrueOnly,
            (false, true) => TruthValueSet::FalseOnly,
            (false, false) => TruthValueSet::Gap,
        }
    }

    /// Members, listed true before false.
    pub fn values(self) -> &'static [bool] {
        match self {
            TruthValueSet::Gap => &[],
            TruthValueSet::FalseOnly => &[false],
            TruthValueSet::TrueOnly => &[true],
            TruthValueSet::Indeterminate => &[true, false],
        }
    }

    pub fn len(self) -> usize {
        self.values().len()
    }

    pub fn is_empty(self) -> bool {
        self == TruthValueSet::Gap
    }

    pub fn as_str(self) -> &'static str {
        match self {
            TruthValueSet::Gap => "gap",
            TruthValueSet::FalseOnly => "false",
            TruthValueSet::TrueOnly => "true",
            TruthValueSet::Indeterminate => "indeterminate",
        }
    }

    /// Set notation: `{1}`, `{0}`, `{0,1}` or `∅`.
    pub fn as_set_str(self) -> &'static str {
        match self {
            TruthValueSet::Gap => "∅",
            TruthValueSet::FalseOnly => "{0}",
            TruthValueSet::TrueOnly => "{1}",
            TruthValueSet::Indeterminate => "{0,1}",
        }
    }
}

impl fmt::Display for TruthValueSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Preexisting classical values for a set of atoms.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Assignment(BTreeMap<Atom, bool>);

impl Assignment {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, atom: Atom, value: bool) -> Self {
        self.0.insert(atom, value);
        self
    }

    pub fn insert(&mut self, atom: Atom, value: bool) {
        self.0.insert(atom, value);
    }

    pub fn get(&self, atom: Atom) -> Option<bool> {
        self.0.get(&atom).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Atom, bool)> + '_ {
        self.0.iter().map(|(a, v)| (*a, *v))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl FromIterator<(Atom, bool)> for Assignment {
    fn from_iter<I: IntoIterator<Item = (Atom, bool)>>(iter: I) -> Self {
        Self(iter.into_iter().collect())
    }
}

/// The statistical population of a tuple of propositions: the Cartesian
/// product of their admissible value sets.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Population {
    labels: Vec<String>,
    tuples: Vec<Vec<bool>>,
}

impl Population {
    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn tuples(&self) -> &[Vec<bool>] {
        &self.tuples
    }

    pub fn len(&self) -> usize {
        self.tuples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tuples.is_empty()
    }

    pub fn contains(&self, tuple: &[bool]) -> bool {
        self.tuples.iter().any(|t| t == tuple)
    }
}

/// `{(1,1),(1,0)}`, or `∅` when empty.
impl fmt::Display for Population {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.tuples.is_empty() {
            return f.write_str("∅");
        }
        f.write_str("{")?;
        for (i, t) in self.tuples.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            f.write_str("(")?;
            for (j, v) in t.iter().enumerate() {
                if j > 0 {
                    f.write_str(",")?;
                }
                f.write_str(if *v { "1" } else { "0" })?;
            }
            f.write_str(")")?;
        }
        f.write_str("}")
    }
}

/// Cartesian product of the component sets. A gap anywhere annihilates the
/// product; `Indeterminate` contributes both values, true first.
pub fn population(components: &[TruthValueSet], labels: Vec<String>) -> Result<Population> {
    if components.len() != labels.len() {
        return Err(Error::LengthMismatch { labels: labels.len(), components: components.len() });
    }
    let mut tuples: Vec<Vec<bool>> = vec![Vec::new()];
    for set in components {
        tuples = tuples
            .iter()
            .flat_map(|prefix| {
                set.values().iter().map(move |&v| {
                    let mut t = prefix.clone();
                    t.push(v);
                    t
                })
            })
            .collect();
    }
    Ok(Population { labels, tuples })
}

/// Source of the projector attached to each atom.
pub trait ProjectorContext {
    fn projector(&self, atom: Atom) -> Option<Projector>;
}

impl ProjectorContext for BTreeMap<Atom, Projector> {
    fn projector(&self, atom: Atom) -> Option<Projector> {
        self.get(&atom).cloned()
    }
}

/// Compiles a proposition to its projector: conjunction is the lattice meet
/// and is only accepted for commuting operands; exclusive-or is the lattice
/// join and is only accepted for orthogonal operands, where it equals the sum.
pub fn compile(p: &Proposition, context: &impl ProjectorContext) -> Result<Projector> {
    match p {
        Proposition::Atom(a) => context.projector(*a).ok_or(Error::MissingAtom(*a)),
        Proposition::And(l, r) => {
            let (pl, pr) = (compile(l, context)?, compile(r, context)?);
            if !pl.commutes_with(&pr)? {
                return Err(Error::UnsupportedConnective(alloc::format!(
                    "conjunction of non-commuting operands in `{p}`"
                )));
            }
            pl.meet(&pr)
        }
        Proposition::Xor(l, r) => {
            let (pl, pr) = (compile(l, context)?, compile(r, context)?);
            if !pl.is_orthogonal_to(&pr)? {
                return Err(Error::UnsupportedConnective(alloc::format!(
                    "exclusive-or of non-orthogonal operands in `{p}`"
                )));
            }
            pl.join(&pr)
        }
    }
}

/// Supervaluationist value of the proposition represented by `p` in `state`.
/// Never returns `Indeterminate`.
pub fn valuate(state: &StateVector, p: &Projector) -> Result<TruthValueSet> {
    if state.dim() != p.dim() {
        return Err(Error::Shape { op: "valuate", left: p.matrix().shape(), right: (state.dim(), 1) });
    }
    if p.range().contains(state)? {
        Ok(TruthValueSet::TrueOnly)
    } else if p.kernel().contains(state)? {
        Ok(TruthValueSet::FalseOnly)
    } else {
        Ok(TruthValueSet::Gap)
    }
}

/// `⟨ψ|P|ψ⟩ / ⟨ψ|ψ⟩`, a rational in `[0, 1]`.
pub fn expectation(state: &StateVector, p: &Projector) -> Result<BigRational> {
    let image = StateVector::new(p.matrix().apply(state)?);
    let numer = match image {
        Ok(img) => state.inner(&img)?,
        Err(Error::ZeroState) => return Ok(BigRational::from_integer(0.into())),
        Err(e) => return Err(e),
    };
    let denom = state.inner(state)?;
    debug_assert!(numer.is_real() && denom.is_real());
    Ok(numer.re() / denom.re())
}

/// Truth-functional value: conjunction is the product, exclusive-or is
/// `x + y − 2xy`.
pub fn classical_valuate(p: &Proposition, assignment: &Assignment) -> Result<bool> {
    match p {
        Proposition::Atom(a) => assignment.get(*a).ok_or(Error::IncompleteAssignment(*a)),
        Proposition::And(l, r) => Ok(classical_valuate(l, assignment)? & classical_valuate(r, assignment)?),
        Proposition::Xor(l, r) => Ok(classical_valuate(l, assignment)? ^ classical_valuate(r, assignment)?),
    }
}

/// Every assignment over `atoms` (plus any atom mentioned by a constraint)
/// that satisfies all constraints, with exactly one of up/down true for each
/// particle-axis pair present. Enumeration is exhaustive and ordered: pairs
/// in lexicographic order, "up" chosen before "down", earlier pairs varying
/// slowest.
pub fn classical_solutions(constraints: &[(Proposition, bool)], atoms: &[Atom]) -> Vec<Assignment> {
    let mut all: BTreeSet<Atom> = atoms.iter().copied().collect();
    for (p, _) in constraints {
        all.extend(p.atoms());
    }
    let pairs: Vec<(Particle, Axis)> =
        all.iter().map(|a| (a.particle, a.axis)).collect::<BTreeSet<_>>().into_iter().collect();

    let n = pairs.len();
    let mut out = Vec::new();
    for code in 0u64..(1u64 << n) {
        let mut assignment = Assignment::new();
        for (k, &(particle, axis)) in pairs.iter().enumerate() {
            let down = (code >> (n - 1 - k)) & 1 == 1;
            let up_atom = Atom::new(particle, axis, Direction::Up);
            for atom in [up_atom, up_atom.opposite()] {
                if all.contains(&atom) {
                    assignment.insert(atom, (atom.direction == Direction::Down) == down);
                }
            }
        }
        let satisfied = constraints.iter().all(|(p, want)| classical_valuate(p, &assignment).is_ok_and(|v| v == *want));
        if satisfied {
            out.push(assignment);
        }
    }
    out
}

/// Collapses the values an atom takes across a family of assignments into a
/// truth-value set: both values seen gives `Indeterminate`.
pub fn marginal(solutions: &[Assignment], atom: Atom) -> TruthValueSet {
    let seen = |v: bool| solutions.iter().any(|s| s.get(atom) == Some(v));
    TruthValueSet::from_flags(seen(true), seen(false))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Matrix;
    use alloc::format;
    use alloc::string::ToString;
    use Axis::*;
    use Direction::*;
    use Particle::*;

    fn atom(p: Particle, a: Axis, d: Direction) -> Atom {
        Atom::new(p, a, d)
    }

    fn diag_projector(d: [i64; 4]) -> Projector {
        let rows: Vec<[i64; 4]> = (0..4)
            .map(|i| {
                let mut r = [0; 4];
                r[i] = d[i];
                r
            })
            .collect();
        Projector::new(Matrix::from_i64_rows(&rows).unwrap()).unwrap()
    }

    /// z-axis atoms as diagonal projectors; enough for compile tests that do
    /// not depend on the spin module.
    fn z_context() -> BTreeMap<Atom, Projector> {
        let mut ctx = BTreeMap::new();
        ctx.insert(atom(A, Z, Up), diag_projector([1, 1, 0, 0]));
        ctx.insert(atom(A, Z, Down), diag_projector([0, 0, 1, 1]));
        ctx.insert(atom(B, Z, Up), diag_projector([1, 0, 1, 0]));
        ctx.insert(atom(B, Z, Down), diag_projector([0, 1, 0, 1]));
        ctx
    }

    #[test]
    fn atom_display_and_order() {
        assert_eq!(atom(A, Z, Up).to_string(), "A.z.up");
        assert_eq!(atom(B, X, Down).to_string(), "B.x.down");
        let all: Vec<Atom> = Atom::all().collect();
        assert_eq!(all.len(), 12);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn proposition_display() {
        assert_eq!(Proposition::diff(Z).to_string(), "A.z.up & B.z.down ^ A.z.down & B.z.up");
        let nested = Proposition::from(atom(A, Z, Up)).and(Proposition::diff(X));
        assert_eq!(nested.to_string(), "A.z.up & (A.x.up & B.x.down ^ A.x.down & B.x.up)");
    }

    #[test]
    fn compile_diff_z_is_diagonal_sum() {
        let p = compile(&Proposition::diff(Z), &z_context()).unwrap();
        assert_eq!(p, diag_projector([0, 1, 1, 0]));
    }

    #[test]
    fn compile_conjunction_is_product() {
        let p = compile(&Proposition::pair(Z, Up, Down), &z_context()).unwrap();
        assert_eq!(p, diag_projector([0, 1, 0, 0]));
    }

    #[test]
    fn compile_rejects_self_xor() {
        let ud = Proposition::pair(Z, Up, Down);
        let err = compile(&ud.clone().xor(ud), &z_context()).unwrap_err();
        assert!(matches!(err, Error::UnsupportedConnective(_)));
    }

    #[test]
    fn compile_reports_missing_atom() {
        let err = compile(&Proposition::pair(X, Up, Down), &z_context()).unwrap_err();
        assert_eq!(err, Error::MissingAtom(atom(A, X, Up)));
    }

    #[test]
    fn valuate_super_truth_and_falsity() {
        let psi = StateVector::from_i64(&[3, -1, 2, 7]).unwrap();
        assert_eq!(valuate(&psi, &Projector::identity(4)).unwrap(), TruthValueSet::TrueOnly);
        assert_eq!(valuate(&psi, &Projector::zero(4)).unwrap(), TruthValueSet::FalseOnly);
        assert!(valuate(&psi, &Projector::identity(2)).is_err());
    }

    #[test]
    fn expectation_values() {
        let s = StateVector::from_i64(&[0, 1, -1, 0]).unwrap();
        let half = BigRational::new(1.into(), 2.into());
        assert_eq!(expectation(&s, &diag_projector([0, 1, 0, 0])).unwrap(), half);
        assert_eq!(expectation(&s, &diag_projector([1, 0, 0, 0])).unwrap(), BigRational::from_integer(0.into()));
    }

    #[test]
    fn classical_valuate_cases() {
        let diff = Proposition::diff(Z);
        let a1 = Assignment::new()
            .with(atom(A, Z, Up), true)
            .with(atom(A, Z, Down), false)
            .with(atom(B, Z, Up), false)
            .with(atom(B, Z, Down), true);
        assert!(classical_valuate(&diff, &a1).unwrap());
        let a2 = Assignment::new()
            .with(atom(A, Z, Up), true)
            .with(atom(A, Z, Down), false)
            .with(atom(B, Z, Up), true)
            .with(atom(B, Z, Down), false);
        assert!(!classical_valuate(&diff, &a2).unwrap());

        let x = Proposition::from(atom(B, X, Up));
        for v in [true, false] {
            let a = Assignment::new().with(atom(B, X, Up), v);
            assert!(!classical_valuate(&x.clone().xor(x.clone()), &a).unwrap());
        }
        assert_eq!(classical_valuate(&diff, &Assignment::new()), Err(Error::IncompleteAssignment(atom(A, Z, Up))));
    }

    #[test]
    fn classical_solutions_for_diff() {
        let z_atoms: Vec<Atom> = Atom::all().filter(|a| a.axis == Z).collect();
        let sols = classical_solutions(&[(Proposition::diff(Z), true)], &z_atoms);
        assert_eq!(sols.len(), 2);
        for s in &sols {
            assert_eq!(s.get(atom(B, Z, Down)), s.get(atom(A, Z, Up)));
            assert_eq!(s.get(atom(B, Z, Up)), s.get(atom(A, Z, Down)));
        }
        assert_ne!(sols[0], sols[1]);
    }

    #[test]
    fn same_and_diff_are_jointly_unsatisfiable() {
        let sols = classical_solutions(&[(Proposition::diff(Z), true), (Proposition::same(Z), true)], &[]);
        assert!(sols.is_empty());
    }

    #[test]
    fn exclusivity_alone() {
        let sols = classical_solutions(&[], &[atom(B, X, Up), atom(B, X, Down)]);
        assert_eq!(sols.len(), 2);
        for s in &sols {
            assert_ne!(s.get(atom(B, X, Up)), s.get(atom(B, X, Down)));
        }
    }

    #[test]
    fn population_cases() {
        use TruthValueSet::*;
        let labels = |n: usize| (0..n).map(|i| format!("p{i}")).collect::<Vec<_>>();
        let p = population(&[TrueOnly, Indeterminate], labels(2)).unwrap();
        assert_eq!(p.tuples(), &[vec![true, true], vec![true, false]]);
        assert_eq!(p.to_string(), "{(1,1),(1,0)}");
        let empty = population(&[TrueOnly, Gap], labels(2)).unwrap();
        assert!(empty.is_empty());
        assert_eq!(empty.to_string(), "∅");
        assert_eq!(population(&[Indeterminate, Indeterminate], labels(2)).unwrap().len(), 4);
        assert!(population(&[TrueOnly], labels(2)).is_err());
    }

    #[test]
    fn marginal_sets() {
        let sols = [Assignment::new().with(atom(B, X, Up), true), Assignment::new().with(atom(B, X, Up), false)];
        assert_eq!(marginal(&sols, atom(B, X, Up)), TruthValueSet::Indeterminate);
        assert_eq!(marginal(&sols[..1], atom(B, X, Up)), TruthValueSet::TrueOnly);
        assert_eq!(marginal(&[], atom(B, X, Up)), TruthValueSet::Gap);
    }
}
