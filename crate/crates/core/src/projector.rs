//! Orthogonal projection operators and their lattice operations.

use core::fmt;

use crate::error::{Error, Result};
use crate::lattice::Subspace;
use crate::linalg::{Matrix, StateVector};

/// A Hermitian idempotent square matrix. Both properties are checked exactly
/// on construction.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Projector {
    matrix: Matrix,
}

impl Projector {
    pub fn new(matrix: Matrix) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::NotProjector("matrix is not square"));
        }
        if !matrix.is_hermitian() {
            return Err(Error::NotProjector("matrix is not Hermitian"));
        }
        if matrix.mul(&matrix)? != matrix {
            return Err(Error::NotProjector("matrix is not idempotent"));
        }
        Ok(Self { matrix })
    }

    pub fn identity(dim: usize) -> Self {
        Self { matrix: Matrix::identity(dim) }
    }

    pub fn zero(dim: usize) -> Self {
        Self { matrix: Matrix::zeros(dim, dim) }
    }

    /// The orthogonal projector onto `span(vectors)`, computed as
    /// `B (B†B)⁻¹ B†` with `B` holding a basis of the span as columns.
    pub fn from_span(dim: usize, vectors: &[StateVector]) -> Result<Self> {
        Ok(Self::onto(&Subspace::span(dim, vectors)?))
    }

    /// The orthogonal projector onto `subspace`.
    pub fn onto(subspace: &Subspace) -> Self {
        let Some(rows) = subspace.basis_matrix() else {
            return Self::zero(subspace.ambient_dim());
        };
        let b = rows.transpose();
        let b_dag = b.adjoint();
        let gram = b_dag.mul(&b).expect("shapes agree");
        let gram_inv = gram.inverse().expect("Gram matrix of a basis is invertible");
        let matrix = b.mul(&gram_inv).and_then(|m| m.mul(&b_dag)).expect("shapes agree");
        Self { matrix }
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> Matrix {
        self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    /// Column space.
    pub fn range(&self) -> Subspace {
        Subspace::column_space(&self.matrix)
    }

    /// Null space; always the orthocomplement of [`Projector::range`].
    pub fn kernel(&self) -> Subspace {
        Subspace::null_space(&self.matrix)
    }

    fn check_dim(&self, op: &'static str, other: &Projector) -> Result<()> {
        if self.dim() != other.dim() {
            return Err(Error::Shape { op, left: self.matrix.shape(), right: other.matrix.shape() });
        }
        Ok(())
    }

    pub fn commutes_with(&self, other: &Projector) -> Result<bool> {
        self.check_dim("commutes", other)?;
        Ok(self.matrix.mul(&other.matrix)? == other.matrix.mul(&self.matrix)?)
    }

    /// `self · other == 0`, which for projectors also forces `other · self == 0`.
    pub fn is_orthogonal_to(&self, other: &Projector) -> Result<bool> {
        self.check_dim("orthogonal", other)?;
        Ok(self.matrix.mul(&other.matrix)?.is_zero())
    }

    /// Projector onto the intersection of the ranges. Equal to the product
    /// when the two commute.
    pub fn meet(&self, other: &Projector) -> Result<Projector> {
        self.check_dim("projector_meet", other)?;
        Ok(Self::onto(&self.range().meet(&other.range())?))
    }

    /// Projector onto the join of the ranges. Equal to the sum when the two
    /// are orthogonal.
    pub fn join(&self, other: &Projector) -> Result<Projector> {
        self.check_dim("projector_join", other)?;
        Ok(Self::onto(&self.range().join(&other.range())?))
    }

    /// Orthogonal complement `1 − P`.
    pub fn complement(&self) -> Projector {
        let matrix = Matrix::identity(self.dim()).sub(&self.matrix).expect("square");
        Self { matrix }
    }
}

impl fmt::Display for Projector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.matrix, f)
    }
}

impl fmt::Debug for Projector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Projector({})", self.matrix)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::GaussianRational;

    fn m<const C: usize>(rows: &[[i64; C]]) -> Matrix {
        Matrix::from_i64_rows(rows).unwrap()
    }

    fn v(xs: &[i64]) -> StateVector {
        StateVector::from_i64(xs).unwrap()
    }

    fn e(i: usize) -> StateVector {
        StateVector::basis(4, i)
    }

    fn line(x: &[i64]) -> Projector {
        Projector::from_span(x.len(), &[v(x)]).unwrap()
    }

    #[test]
    fn constructor_rejects_non_projectors() {
        assert_eq!(Projector::new(m(&[[1, 1], [0, 0]])), Err(Error::NotProjector("matrix is not Hermitian")));
        assert_eq!(Projector::new(m(&[[2, 0], [0, 0]])), Err(Error::NotProjector("matrix is not idempotent")));
        assert_eq!(Projector::new(m(&[[1, 0, 0]])), Err(Error::NotProjector("matrix is not square")));
        assert!(Projector::new(m(&[[1, 0], [0, 0]])).is_ok());
    }

    #[test]
    fn from_span_cases() {
        let p = line(&[0, 1, 0, 0]);
        assert_eq!(*p.matrix(), m(&[[0, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]]));

        let quarter = GaussianRational::ratio(1, 4);
        let expected = m(&[[1, 1, -1, -1], [1, 1, -1, -1], [-1, -1, 1, 1], [-1, -1, 1, 1]]).scale(&quarter);
        assert_eq!(*line(&[1, 1, -1, -1]).matrix(), expected);

        let all = Projector::from_span(4, &[e(0), e(1), e(2), e(3)]).unwrap();
        assert_eq!(all, Projector::identity(4));
        assert!(Projector::from_span(4, &[v(&[1, 0])]).is_err());
    }

    #[test]
    fn from_span_output_is_a_projector() {
        let p = Projector::from_span(4, &[v(&[1, 2, 0, -1]), v(&[0, 1, 1, 3])]).unwrap();
        assert!(Projector::new(p.matrix().clone()).is_ok());
        assert_eq!(p.rank(), 2);
    }

    #[test]
    fn range_and_kernel() {
        let diff_z = Projector::new(m(&[[0, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 0]])).unwrap();
        assert_eq!(diff_z.range(), Subspace::span(4, &[e(1), e(2)]).unwrap());
        assert!(Projector::zero(4).range().is_zero());
        assert!(Projector::identity(4).kernel().is_zero());

        let ud = line(&[0, 1, 0, 0]);
        assert_eq!(ud.kernel(), Subspace::span(4, &[e(0), e(2), e(3)]).unwrap());
        let uu = line(&[1, 0, 0, 0]);
        assert!(uu.kernel().contains(&v(&[0, 1, -1, 0])).unwrap());
    }

    #[test]
    fn meet_and_join_of_orthogonal_pair() {
        let ud = line(&[0, 1, 0, 0]);
        let du = line(&[0, 0, 1, 0]);
        assert_eq!(ud.meet(&du).unwrap(), Projector::zero(4));
        let joined = ud.join(&du).unwrap();
        assert_eq!(*joined.matrix(), ud.matrix().add(du.matrix()).unwrap());
    }

    #[test]
    fn meet_join_identities() {
        let p = Projector::from_span(4, &[v(&[1, 0, 0, 1]), v(&[0, 1, -1, 0])]).unwrap();
        assert_eq!(p.meet(&p).unwrap(), p);
        assert_eq!(p.join(&Projector::zero(4)).unwrap(), p);
        assert!(p.meet(&Projector::identity(2)).is_err());
    }

    #[test]
    fn complement_swaps_range_and_kernel() {
        let p = line(&[1, -1, 1, -1]);
        assert_eq!(p.complement().range(), p.kernel());
        assert_eq!(p.complement().kernel(), p.range());
    }
}
