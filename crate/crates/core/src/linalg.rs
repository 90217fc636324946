//! Dense exact linear algebra over the Gaussian rationals.
//!
//! Everything here is small (2×2 and 4×4 in practice) so the routines favour
//! clarity over speed: row-major `Vec` storage, textbook elimination with the
//! first nonzero entry of each column as pivot.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::scalar::GaussianRational;

type Scalar = GaussianRational;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

impl Matrix {
    /// Builds a `rows × cols` matrix from row-major entries.
    pub fn new(rows: usize, cols: usize, entries: Vec<Scalar>) -> Result<Self> {
        if rows == 0 || cols == 0 || entries.len() != rows * cols {
            return Err(Error::EntryCount { rows, cols, got: entries.len() });
        }
        Ok(Self { rows, cols, entries })
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let n = rows.len();
        if rows.iter().any(|r| r.len() != cols) {
            let got = rows.iter().map(Vec::len).sum();
            return Err(Error::EntryCount { rows: n, cols, got });
        }
        Self::new(n, cols, rows.into_iter().flatten().collect())
    }

    pub fn from_i64_rows<const C: usize>(rows: &[[i64; C]]) -> Result<Self> {
        Self::from_rows(rows.iter().map(|r| r.iter().copied().map(Scalar::from_integer).collect()).collect())
    }

    pub(crate) fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(f(r, c));
            }
        }
        Self { rows, cols, entries }
    }

    /// Stacks equally long rows; zero rows are allowed here, unlike [`Matrix::new`].
    pub(crate) fn stack(cols: usize, rows: &[&[Scalar]]) -> Self {
        debug_assert!(rows.iter().all(|r| r.len() == cols));
        Self { rows: rows.len(), cols, entries: rows.iter().flat_map(|r| r.iter().cloned()).collect() }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |r, c| if r == c { Scalar::one() } else { Scalar::zero() })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |_, _| Scalar::zero())
    }

    /// A single column holding `v`.
    pub fn column(v: &StateVector) -> Self {
        Self { rows: v.dim(), cols: 1, entries: v.entries().to_vec() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, row: usize, col: usize) -> &Scalar {
        &self.entries[row * self.cols + col]
    }

    pub fn row(&self, row: usize) -> &[Scalar] {
        &self.entries[row * self.cols..(row + 1) * self.cols]
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &[Scalar]> {
        // chunks_exact panics on a zero chunk size; a 0-column matrix has no rows anyway
        self.entries.chunks_exact(self.cols.max(1)).take(self.rows)
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    pub fn mul(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.cols != rhs.rows {
            return Err(Error::Shape { op: "mat_mul", left: self.shape(), right: rhs.shape() });
        }
        Ok(Self::from_fn(self.rows, rhs.cols, |r, c| {
            let mut acc = Scalar::zero();
            for k in 0..self.cols {
                let a = self.get(r, k);
                if !a.is_zero() {
                    acc += &(a * rhs.get(k, c));
                }
            }
            acc
        }))
    }

    fn zip_with(&self, rhs: &Matrix, op: &'static str, f: impl Fn(&Scalar, &Scalar) -> Scalar) -> Result<Matrix> {
        if self.shape() != rhs.shape() {
            return Err(Error::Shape { op, left: self.shape(), right: rhs.shape() });
        }
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| f(a, b)).collect(),
        })
    }

    pub fn add(&self, rhs: &Matrix) -> Result<Matrix> {
        self.zip_with(rhs, "add", |a, b| a + b)
    }

    pub fn sub(&self, rhs: &Matrix) -> Result<Matrix> {
        self.zip_with(rhs, "sub", |a, b| a - b)
    }

    pub fn scale(&self, k: &Scalar) -> Matrix {
        Self { rows: self.rows, cols: self.cols, entries: self.entries.iter().map(|x| x * k).collect() }
    }

    pub fn transpose(&self) -> Matrix {
        Self::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Matrix {
        Self::from_fn(self.cols, self.rows, |r, c| self.get(c, r).conj())
    }

    pub fn is_hermitian(&self) -> bool {
        self.is_square() && *self == self.adjoint()
    }

    /// Kronecker product; column vectors are just `n × 1` matrices.
    pub fn tensor(&self, rhs: &Matrix) -> Matrix {
        Self::from_fn(self.rows * rhs.rows, self.cols * rhs.cols, |r, c| {
            self.get(r / rhs.rows, c / rhs.cols) * rhs.get(r % rhs.rows, c % rhs.cols)
        })
    }

    /// Applies the matrix to a state. The image may be the zero vector, so it
    /// comes back as raw entries.
    pub fn apply(&self, v: &StateVector) -> Result<Vec<Scalar>> {
        if self.cols != v.dim() {
            return Err(Error::Shape { op: "apply", left: self.shape(), right: (v.dim(), 1) });
        }
        Ok(self
            .row_iter()
            .map(|row| {
                row.iter().zip(v.entries()).fold(Scalar::zero(), |mut acc, (a, x)| {
                    if !a.is_zero() && !x.is_zero() {
                        acc += &(a * x);
                    }
                    acc
                })
            })
            .collect())
    }

    /// Reduced row-echelon form together with the pivot column of each
    /// nonzero row.
    pub fn rref_with_pivots(&self) -> (Matrix, Vec<usize>) {
        let mut rows: Vec<Vec<Scalar>> = self.row_iter().map(<[Scalar]>::to_vec).collect();
        let mut pivots = Vec::new();
        let mut next = 0;
        for col in 0..self.cols {
            if next == rows.len() {
                break;
            }
            let Some(found) = (next..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
                continue;
            };
            rows.swap(next, found);
            let inv = rows[next][col].inv().expect("pivot is nonzero");
            for x in rows[next].iter_mut() {
                *x = &*x * &inv;
            }
            let pivot_row = rows[next].clone();
            for (r, row) in rows.iter_mut().enumerate() {
                if r == next || row[col].is_zero() {
                    continue;
                }
                let factor = row[col].clone();
                for (x, p) in row.iter_mut().zip(&pivot_row).skip(col) {
                    if !p.is_zero() {
                        *x -= &(&factor * p);
                    }
                }
            }
            pivots.push(col);
            next += 1;
        }
        let reduced = Self { rows: self.rows, cols: self.cols, entries: rows.into_iter().flatten().collect() };
        (reduced, pivots)
    }

    pub fn rref(&self) -> Matrix {
        self.rref_with_pivots().0
    }

    pub fn rank(&self) -> usize {
        self.rref_with_pivots().1.len()
    }

    /// Basis of the null space: one vector per free column of the RREF, with
    /// a 1 in that column. Empty iff the matrix is injective.
    pub fn kernel_basis(&self) -> Vec<StateVector> {
        let (reduced, pivots) = self.rref_with_pivots();
        (0..self.cols)
            .filter(|c| !pivots.contains(c))
            .map(|free| {
                let mut x = vec![Scalar::zero(); self.cols];
                x[free] = Scalar::one();
                for (r, &p) in pivots.iter().enumerate() {
                    x[p] = -reduced.get(r, free);
                }
                StateVector(x)
            })
            .collect()
    }

    /// Exact inverse by RREF of `[M | I]`; `None` when singular or not square.
    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let augmented = Self::from_fn(n, 2 * n, |r, c| {
            if c < n {
                self.get(r, c).clone()
            } else if c - n == r {
                Scalar::one()
            } else {
                Scalar::zero()
            }
        });
        let (reduced, pivots) = augmented.rref_with_pivots();
        if pivots.len() < n || pivots[n - 1] >= n {
            return None;
        }
        Some(Self::from_fn(n, n, |r, c| reduced.get(r, n + c).clone()))
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, row) in self.row_iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write_bracketed(f, row)?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

pub(crate) fn write_bracketed(f: &mut fmt::Formatter<'_>, xs: &[Scalar]) -> fmt::Result {
    f.write_str("[")?;
    for (i, x) in xs.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{x}")?;
    }
    f.write_str("]")
}

/// A nonzero vector standing for the ray it spans. Normalization is never
/// performed; all downstream predicates are scale-invariant.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct StateVector(Vec<Scalar>);

impl StateVector {
    pub fn new(entries: Vec<Scalar>) -> Result<Self> {
        if entries.iter().all(Scalar::is_zero) {
            return Err(Error::ZeroState);
        }
        Ok(Self(entries))
    }

    pub fn from_i64(entries: &[i64]) -> Result<Self> {
        Self::new(entries.iter().copied().map(Scalar::from_integer).collect())
    }

    /// The `index`-th standard basis vector of `dim`-space.
    pub fn basis(dim: usize, index: usize) -> Self {
        let mut v = vec![Scalar::zero(); dim];
        v[index] = Scalar::one();
        Self(v)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<Scalar> {
        self.0
    }

    /// `⟨self, other⟩`, conjugate-linear in `self`.
    pub fn inner(&self, other: &StateVector) -> Result<Scalar> {
        if self.dim() != other.dim() {
            return Err(Error::Shape { op: "inner", left: (self.dim(), 1), right: (other.dim(), 1) });
        }
        Ok(self.0.iter().zip(&other.0).fold(Scalar::zero(), |acc, (a, b)| acc + a.conj() * b))
    }

    pub fn tensor(&self, other: &StateVector) -> StateVector {
        StateVector(self.0.iter().flat_map(|a| other.0.iter().map(move |b| a * b)).collect())
    }

    pub fn scale(&self, k: &Scalar) -> Result<StateVector> {
        StateVector::new(self.0.iter().map(|x| x * k).collect())
    }

    pub fn sub(&self, other: &StateVector) -> Result<Vec<Scalar>> {
        if self.dim() != other.dim() {
            return Err(Error::Shape { op: "sub", left: (self.dim(), 1), right: (other.dim(), 1) });
        }
        Ok(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    /// True iff `other = c·self` for some nonzero scalar `c`.
    pub fn same_ray(&self, other: &StateVector) -> bool {
        if self.dim() != other.dim() {
            return false;
        }
        let k = self.0.iter().position(|x| !x.is_zero()).expect("state is nonzero");
        let Some(c) = other.0[k].checked_div(&self.0[k]) else {
            return false;
        };
        self.0.iter().zip(&other.0).all(|(a, b)| &(a * &c) == b)
    }
}

impl fmt::Display for StateVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_bracketed(f, &self.0)
    }
}

impl fmt::Debug for StateVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
