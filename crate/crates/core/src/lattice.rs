//! The lattice of subspaces of a finite-dimensional complex space.
//!
//! A [`Subspace`] stores the nonzero rows of the reduced row-echelon form of
//! any spanning set. That form is unique per subspace, so structural equality
//! is subspace equality and the type can be hashed.

use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::linalg::{Matrix, StateVector};
use crate::scalar::GaussianRational;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Vec<StateVector>,
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Self { ambient_dim, basis: Vec::new() }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Self::from_reduced(&Matrix::identity(ambient_dim))
    }

    /// Span of arbitrary vectors of dimension `ambient_dim`.
    pub fn span(ambient_dim: usize, vectors: &[StateVector]) -> Result<Self> {
        if let Some(v) = vectors.iter().find(|v| v.dim() != ambient_dim) {
            return Err(Error::Shape { op: "span", left: (ambient_dim, 1), right: (v.dim(), 1) });
        }
        let rows: Vec<&[GaussianRational]> = vectors.iter().map(StateVector::entries).collect();
        Ok(Self::from_rows(ambient_dim, &rows))
    }

    /// Row space of `m`.
    pub fn row_space(m: &Matrix) -> Self {
        Self::from_reduced(&m.rref())
    }

    /// Column space of `m`.
    pub fn column_space(m: &Matrix) -> Self {
        Self::row_space(&m.transpose())
    }

    /// Null space of `m`.
    pub fn null_space(m: &Matrix) -> Self {
        let kernel = m.kernel_basis();
        let rows: Vec<&[GaussianRational]> = kernel.iter().map(StateVector::entries).collect();
        Self::from_rows(m.cols(), &rows)
    }

    fn from_rows(ambient_dim: usize, rows: &[&[GaussianRational]]) -> Self {
        if rows.is_empty() {
            return Self::zero(ambient_dim);
        }
        Self::from_reduced(&Matrix::stack(ambient_dim, rows).rref())
    }

    fn from_reduced(reduced: &Matrix) -> Self {
        let basis = reduced
            .row_iter()
            .filter(|row| row.iter().any(|x| !x.is_zero()))
            .map(|row| StateVector::new(row.to_vec()).expect("nonzero row"))
            .collect();
        Self { ambient_dim: reduced.cols(), basis }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Canonical basis rows, in order of increasing pivot column.
    pub fn basis(&self) -> &[StateVector] {
        &self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.basis.len() == self.ambient_dim
    }

    fn check_dim(&self, op: &'static str, other_dim: usize) -> Result<()> {
        if self.ambient_dim != other_dim {
            return Err(Error::Shape { op, left: (self.ambient_dim, 1), right: (other_dim, 1) });
        }
        Ok(())
    }

    fn pivot(row: &StateVector) -> usize {
        row.entries().iter().position(|x| !x.is_zero()).expect("basis rows are nonzero")
    }

    fn reduces_to_zero(&self, v: &[GaussianRational]) -> bool {
        let mut rest = v.to_vec();
        for row in &self.basis {
            let p = Self::pivot(row);
            let c = rest[p].clone();
            if c.is_zero() {
                continue;
            }
            for (x, b) in rest.iter_mut().zip(row.entries()) {
                if !b.is_zero() {
                    *x -= &(&c * b);
                }
            }
        }
        rest.iter().all(GaussianRational::is_zero)
    }

    /// Membership of the ray through `v`.
    pub fn contains(&self, v: &StateVector) -> Result<bool> {
        self.check_dim("contains", v.dim())?;
        Ok(self.reduces_to_zero(v.entries()))
    }

    /// Inclusion order: `self ⊆ other`.
    pub fn leq(&self, other: &Subspace) -> Result<bool> {
        self.check_dim("subspace_leq", other.ambient_dim)?;
        Ok(self.basis.iter().all(|b| other.reduces_to_zero(b.entries())))
    }

    /// Smallest subspace containing both. Closure is automatic in finite
    /// dimension, so this is the span of the union.
    pub fn join(&self, other: &Subspace) -> Result<Subspace> {
        self.check_dim("join", other.ambient_dim)?;
        let rows: Vec<&[GaussianRational]> = self.basis.iter().chain(&other.basis).map(StateVector::entries).collect();
        Ok(Self::from_rows(self.ambient_dim, &rows))
    }

    /// `{a + b : a ∈ self, b ∈ other}`. Coincides with [`Subspace::join`]
    /// in finite dimension.
    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_dim("sum", other.ambient_dim)?;
        if self.is_zero() {
            return Ok(other.clone());
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        let rows: Vec<&[GaussianRational]> = self.basis.iter().chain(&other.basis).map(StateVector::entries).collect();
        Ok(Self::row_space(&Matrix::stack(self.ambient_dim, &rows)))
    }

    /// Intersection, as `(self⊥ + other⊥)⊥`.
    pub fn meet(&self, other: &Subspace) -> Result<Subspace> {
        self.check_dim("meet", other.ambient_dim)?;
        Ok(self.orthocomplement().sum(&other.orthocomplement())?.orthocomplement())
    }

    /// `{v : ⟨b, v⟩ = 0 for every basis vector b}`.
    pub fn orthocomplement(&self) -> Subspace {
        if self.is_zero() {
            return Self::full(self.ambient_dim);
        }
        let conj_rows: Vec<Vec<GaussianRational>> =
            self.basis.iter().map(|b| b.entries().iter().map(GaussianRational::conj).collect()).collect();
        let refs: Vec<&[GaussianRational]> = conj_rows.iter().map(Vec::as_slice).collect();
        Self::null_space(&Matrix::stack(self.ambient_dim, &refs))
    }

    /// Every vector of `self` is orthogonal to every vector of `other`.
    pub fn is_orthogonal_to(&self, other: &Subspace) -> Result<bool> {
        self.check_dim("orthogonal", other.ambient_dim)?;
        for a in &self.basis {
            for b in &other.basis {
                if !a.inner(b)?.is_zero() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Basis rows stacked into a `dim × ambient_dim` matrix, `None` for the
    /// zero subspace.
    pub fn basis_matrix(&self) -> Option<Matrix> {
        if self.is_zero() {
            return None;
        }
        let rows: Vec<&[GaussianRational]> = self.basis.iter().map(StateVector::entries).collect();
        Some(Matrix::stack(self.ambient_dim, &rows))
    }
}

/// `span{[0,1,-1,0],...}`; the zero subspace prints as `span{}`.
impl fmt::Display for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("span{")?;
        for (i, b) in self.basis.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{b}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} in C^{}", self.ambient_dim)
    }
}
