mod common;

use common::*;
use gappy_core::Matrix;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn rref_is_idempotent(m in (1usize..=4, 1usize..=4).prop_flat_map(|(r, c)| matrix(r, c))) {
        let once = m.rref();
        prop_assert_eq!(once.rref(), once);
    }

    #[test]
    fn rank_nullity(m in matrix(4, 4)) {
        prop_assert_eq!(m.rank() + m.kernel_basis().len(), m.cols());
    }

    #[test]
    fn kernel_vectors_are_annihilated(m in matrix(3, 4)) {
        for k in m.kernel_basis() {
            prop_assert!(m.apply(&k).unwrap().iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn rref_row_space_preserved(m in matrix(3, 4)) {
        let reduced = m.rref();
        let stacked = Matrix::from_rows(
            m.row_iter().chain(reduced.row_iter()).map(<[_]>::to_vec).collect()
        ).unwrap();
        prop_assert_eq!(stacked.rank(), m.rank());
    }

    #[test]
    fn tensor_mixed_product(a in matrix(2, 2), b in matrix(2, 2), c in matrix(2, 2), d in matrix(2, 2)) {
        let lhs = a.tensor(&b).mul(&c.tensor(&d)).unwrap();
        let rhs = a.mul(&c).unwrap().tensor(&b.mul(&d).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn adjoint_reverses_products(a in matrix(2, 3), b in matrix(3, 2)) {
        prop_assert_eq!(a.mul(&b).unwrap().adjoint(), b.adjoint().mul(&a.adjoint()).unwrap());
    }

    #[test]
    fn operations_are_deterministic(m in matrix(4, 4)) {
        prop_assert_eq!(m.rref(), m.clone().rref());
        prop_assert_eq!(m.kernel_basis(), m.kernel_basis());
    }

    #[test]
    fn inverse_when_full_rank(m in matrix(3, 3)) {
        match m.inverse() {
            Some(inv) => prop_assert_eq!(m.mul(&inv).unwrap(), Matrix::identity(3)),
            None => prop_assert!(m.rank() < 3),
        }
    }
}
