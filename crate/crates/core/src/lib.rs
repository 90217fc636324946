//! Exact supervaluationist quantum logic for a pair of spin-½ particles.
//!
//! Propositions about spin components compile to projectors on `ℂ²⊗ℂ²`.
//! A proposition is true in a state inside its projector's range, false in a
//! state inside its kernel, and has a truth-value gap otherwise. All
//! arithmetic is exact over the Gaussian rationals, so every predicate is
//! decided without tolerances.
//!
//! The crate is `no_std` and needs only `alloc`.

#![no_std]

extern crate alloc;

pub mod audit;
pub mod epr;
pub mod error;
pub mod lattice;
pub mod linalg;
pub mod logic;
pub mod projector;
pub mod scalar;

pub use error::{Error, Result};
pub use lattice::Subspace;
pub use linalg::{Matrix, StateVector};
pub use logic::{Assignment, Atom, Axis, Direction, Particle, Population, Proposition, TruthValueSet};
pub use projector::Projector;
pub use scalar::GaussianRational;
