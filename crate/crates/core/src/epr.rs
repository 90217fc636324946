//! Two spin-½ particles prepared in the singlet state.
//!
//! The pair lives in `ℂ² ⊗ ℂ²` with particle A as the left tensor factor.
//! Eigenvectors are kept unnormalized with fixed phases:
//!
//! | axis | up       | down      |
//! |------|----------|-----------|
//! | z    | `[1, 0]` | `[0, 1]`  |
//! | x    | `[1, 1]` | `[1, -1]` |
//! | y    | `[1, i]` | `[1, -i]` |

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::linalg::{Matrix, StateVector};
use crate::logic::{
    self, classical_solutions, marginal, population, valuate, Atom, Axis, Direction, Particle, Population,
    ProjectorContext, Proposition, TruthValueSet,
};
use crate::projector::Projector;
use crate::scalar::GaussianRational;

/// Per-run populations are never aggregated across experimental runs.
pub const CROSS_RUN_NOTE: &str = "populations are per run: a verification along another axis \
belongs to a separate run and is not aggregated into these products";

pub fn pauli(axis: Axis) -> Matrix {
    let (o, z, i) = (GaussianRational::one(), GaussianRational::zero(), GaussianRational::i());
    let rows = match axis {
        Axis::X => vec![vec![z.clone(), o.clone()], vec![o, z]],
        Axis::Y => vec![vec![z.clone(), -&i], vec![i, z]],
        Axis::Z => vec![vec![o.clone(), z.clone()], vec![z, -o]],
    };
    Matrix::from_rows(rows).expect("2x2")
}

/// `σ_axis ⊗ σ_axis`.
pub fn pauli_square(axis: Axis) -> Matrix {
    let s = pauli(axis);
    s.tensor(&s)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpinBasis {
    pub axis: Axis,
    pub up: StateVector,
    pub down: StateVector,
}

impl SpinBasis {
    pub fn ket(&self, direction: Direction) -> &StateVector {
        match direction {
            Direction::Up => &self.up,
            Direction::Down => &self.down,
        }
    }
}

pub fn spin_basis(axis: Axis) -> SpinBasis {
    let (o, i) = (GaussianRational::one(), GaussianRational::i());
    let (up, down) = match axis {
        Axis::Z => (vec![o.clone(), GaussianRational::zero()], vec![GaussianRational::zero(), o]),
        Axis::X => (vec![o.clone(), o.clone()], vec![o.clone(), -o]),
        Axis::Y => (vec![o.clone(), i.clone()], vec![o, -i]),
    };
    let basis =
        SpinBasis { axis, up: StateVector::new(up).expect("nonzero"), down: StateVector::new(down).expect("nonzero") };
    debug_assert!(eigencheck(&pauli(axis), &basis.up, &GaussianRational::one()).unwrap_or(false));
    debug_assert!(eigencheck(&pauli(axis), &basis.down, &GaussianRational::from_integer(-1)).unwrap_or(false));
    basis
}

/// True iff `observable · candidate == eigenvalue · candidate`, exactly.
pub fn eigencheck(observable: &Matrix, candidate: &StateVector, eigenvalue: &GaussianRational) -> Result<bool> {
    if !observable.is_square() {
        return Err(Error::Shape { op: "eigencheck", left: observable.shape(), right: observable.shape() });
    }
    let image = observable.apply(candidate)?;
    Ok(image.iter().zip(candidate.entries()).all(|(y, x)| *y == x * eigenvalue))
}

/// `|a⟩ ⊗ |b⟩` along one axis, A on the left.
pub fn pair_state(axis: Axis, a: Direction, b: Direction) -> StateVector {
    let basis = spin_basis(axis);
    basis.ket(a).tensor(basis.ket(b))
}

/// Projector of a single-particle statement embedded in the pair space:
/// `|k⟩⟨k| ⊗ 1` for particle A, `1 ⊗ |k⟩⟨k|` for particle B.
pub fn atom_projector(atom: Atom) -> Projector {
    let basis = spin_basis(atom.axis);
    let single = Projector::from_span(2, core::slice::from_ref(basis.ket(atom.direction))).expect("dim 2");
    let id = Matrix::identity(2);
    let embedded = match atom.particle {
        Particle::A => single.matrix().tensor(&id),
        Particle::B => id.tensor(single.matrix()),
    };
    Projector::new(embedded).expect("tensor product of projectors is a projector")
}

/// Supplies [`atom_projector`] for every atom.
#[derive(Debug, Clone, Copy, Default)]
pub struct SpinPairContext;

impl ProjectorContext for SpinPairContext {
    fn projector(&self, atom: Atom) -> Option<Projector> {
        Some(atom_projector(atom))
    }
}

pub fn compile(p: &Proposition) -> Result<Projector> {
    logic::compile(p, &SpinPairContext)
}

/// Projector of `A.axis.a & B.axis.b`.
pub fn pair_projector(axis: Axis, a: Direction, b: Direction) -> Projector {
    compile(&Proposition::pair(axis, a, b)).expect("atoms on different particles commute")
}

pub fn diff_projector(axis: Axis) -> Projector {
    compile(&Proposition::diff(axis)).expect("constituents are orthogonal")
}

pub fn same_projector(axis: Axis) -> Projector {
    compile(&Proposition::same(axis)).expect("constituents are orthogonal")
}

/// `up ⊗ down − down ⊗ up` in the basis of `axis`. Every axis gives a
/// nonzero multiple of `[0, 1, -1, 0]`.
pub fn singlet(axis: Axis) -> StateVector {
    let entries = pair_state(axis, Direction::Up, Direction::Down)
        .sub(&pair_state(axis, Direction::Down, Direction::Up))
        .expect("same dimension");
    StateVector::new(entries).expect("singlet is nonzero")
}

/// A pair state together with the verifications that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoParticleSystem {
    state: StateVector,
    history: Vec<Atom>,
}

impl TwoParticleSystem {
    pub fn new(state: StateVector) -> Result<Self> {
        if state.dim() != 4 {
            return Err(Error::Shape { op: "two-particle state", left: (4, 1), right: (state.dim(), 1) });
        }
        Ok(Self { state, history: Vec::new() })
    }

    pub fn singlet(axis: Axis) -> Self {
        Self { state: singlet(axis), history: Vec::new() }
    }

    pub fn state(&self) -> &StateVector {
        &self.state
    }

    pub fn history(&self) -> &[Atom] {
        &self.history
    }

    /// Records `atom` as verified true (and its opposite false): the state is
    /// replaced by its unnormalized projection onto the range of the atom's
    /// projector.
    pub fn verify(&self, atom: Atom) -> Result<TwoParticleSystem> {
        let image = atom_projector(atom).matrix().apply(&self.state)?;
        let state = StateVector::new(image).map_err(|_| Error::ImpossibleOutcome(atom))?;
        let mut history = self.history.clone();
        history.push(atom);
        Ok(Self { state, history })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Valuation {
    pub proposition: Proposition,
    pub value: TruthValueSet,
}

/// Per-component value sets and their product for one semantics.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JointValuation {
    pub components: Vec<TruthValueSet>,
    pub population: Population,
}

/// One singlet run: preparation, a single verification by A, and the joint
/// query evaluated under both semantics.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScenarioReport {
    pub axis: Axis,
    pub verified: Atom,
    pub prepared: StateVector,
    pub post: StateVector,
    pub before: Vec<Valuation>,
    pub after: Vec<Valuation>,
    pub query: Vec<Atom>,
    pub supervaluation: JointValuation,
    pub classical: JointValuation,
}

/// The propositions tabulated before and after verification: for every axis
/// Diff, Same and their four constituent conjunctions, then all twelve atoms.
pub fn tracked_propositions() -> Vec<Proposition> {
    use Direction::*;
    let mut out = Vec::new();
    for axis in Axis::ALL {
        out.push(Proposition::diff(axis));
        out.push(Proposition::same(axis));
        for (a, b) in [(Up, Down), (Down, Up), (Up, Up), (Down, Down)] {
            out.push(Proposition::pair(axis, a, b));
        }
    }
    out.extend(Atom::all().map(Proposition::Atom));
    out
}

fn valuation_table(state: &StateVector, props: &[Proposition]) -> Result<Vec<Valuation>> {
    props.iter().map(|p| Ok(Valuation { proposition: p.clone(), value: valuate(state, &compile(p)?)? })).collect()
}

/// Classical branch: preexisting bivalent values constrained by the singlet
/// (`Diff = 1` on every axis involved) and by the verified atom, then
/// marginalized per query atom.
pub fn classical_components(verified: Atom, query: &[Atom]) -> Vec<TruthValueSet> {
    let axes: BTreeSet<Axis> = query.iter().map(|a| a.axis).chain([verified.axis]).collect();
    let mut constraints: Vec<(Proposition, bool)> = axes.iter().map(|&ax| (Proposition::diff(ax), true)).collect();
    constraints.push((Proposition::Atom(verified), true));
    let solutions = classical_solutions(&constraints, query);
    query.iter().map(|&a| marginal(&solutions, a)).collect()
}

pub fn run_epr(axis: Axis, query: &[Atom]) -> Result<ScenarioReport> {
    let verified = Atom::new(Particle::A, axis, Direction::Up);
    let prepared = TwoParticleSystem::singlet(axis);
    let collapsed = prepared.verify(verified)?;

    let props = tracked_propositions();
    let before = valuation_table(prepared.state(), &props)?;
    let after = valuation_table(collapsed.state(), &props)?;

    let labels: Vec<String> = query.iter().map(ToString::to_string).collect();
    let super_components =
        query.iter().map(|&a| valuate(collapsed.state(), &atom_projector(a))).collect::<Result<Vec<_>>>()?;
    let supervaluation =
        JointValuation { population: population(&super_components, labels.clone())?, components: super_components };
    let classical_comps = classical_components(verified, query);
    let classical = JointValuation { population: population(&classical_comps, labels)?, components: classical_comps };

    Ok(ScenarioReport {
        axis,
        verified,
        prepared: prepared.state().clone(),
        post: collapsed.state().clone(),
        before,
        after,
        query: query.to_vec(),
        supervaluation,
        classical,
    })
}

impl ScenarioReport {
    /// Label for a joint query, e.g. `B.z.down × B.x.up`.
    pub fn query_label(&self) -> String {
        self.query.iter().map(ToString::to_string).collect::<Vec<_>>().join(" × ")
    }

    pub fn value_after(&self, p: &Proposition) -> Option<TruthValueSet> {
        self.after.iter().find(|v| &v.proposition == p).map(|v| v.value)
    }

    pub fn value_before(&self, p: &Proposition) -> Option<TruthValueSet> {
        self.before.iter().find(|v| &v.proposition == p).map(|v| v.value)
    }

    /// Short summary for logs and errors.
    pub fn summary(&self) -> String {
        format!(
            "verified {} on singlet({}): super {} / classical {}",
            self.verified,
            self.axis.as_str(),
            self.supervaluation.population,
            self.classical.population
        )
    }
}
