#![allow(dead_code)]

use gappy_core::{GaussianRational, Matrix, Projector, StateVector, Subspace};
use proptest::prelude::*;

/// Small Gaussian rationals, zero-heavy so random spans hit every dimension.
pub fn scalar() -> impl Strategy<Value = GaussianRational> {
    prop_oneof![
        3 => Just(GaussianRational::zero()),
        4 => (-3i64..=3, -2i64..=2).prop_map(|(re, im)| GaussianRational::from_ints(re, im)),
        1 => (-3i64..=3, 1i64..=3).prop_map(|(n, d)| GaussianRational::ratio(n, d)),
    ]
}

pub fn nonzero_scalar() -> impl Strategy<Value = GaussianRational> {
    scalar().prop_filter("nonzero", |x| !x.is_zero())
}

pub fn raw_vector(dim: usize) -> impl Strategy<Value = Vec<GaussianRational>> {
    prop::collection::vec(scalar(), dim)
}

pub fn state(dim: usize) -> impl Strategy<Value = StateVector> {
    raw_vector(dim).prop_filter_map("nonzero", |v| StateVector::new(v).ok())
}

pub fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
    prop::collection::vec(scalar(), rows * cols).prop_map(move |e| Matrix::new(rows, cols, e).unwrap())
}

/// Subspace of `C^dim` spanned by 0..=dim random vectors.
pub fn subspace(dim: usize) -> impl Strategy<Value = Subspace> {
    prop::collection::vec(state(dim), 0..=dim).prop_map(move |vs| Subspace::span(dim, &vs).unwrap())
}

pub fn projector(dim: usize) -> impl Strategy<Value = Projector> {
    subspace(dim).prop_map(|s| Projector::onto(&s))
}

/// Pair `(a, b)` with `a ⊆ b`, built by spanning a sub-family of b's generators.
pub fn nested_pair(dim: usize) -> impl Strategy<Value = (Subspace, Subspace)> {
    (prop::collection::vec(state(dim), 0..=dim), any::<u8>()).prop_map(move |(vs, mask)| {
        let sub: Vec<StateVector> =
            vs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, v)| v.clone()).collect();
        (Subspace::span(dim, &sub).unwrap(), Subspace::span(dim, &vs).unwrap())
    })
}

/// Mutual inclusion: the equality oracle that does not rely on canonical form.
pub fn same_subspace(a: &Subspace, b: &Subspace) -> bool {
    a.leq(b).unwrap() && b.leq(a).unwrap()
}

/// Intersection by solving `Σ αᵢ aᵢ = Σ βⱼ bⱼ` directly.
pub fn direct_intersection(a: &Subspace, b: &Subspace) -> Subspace {
    let n = a.ambient_dim();
    let (ka, kb) = (a.dim(), b.dim());
    if ka == 0 || kb == 0 {
        return Subspace::zero(n);
    }
    let system = Matrix::from_rows(
        (0..n)
            .map(|r| {
                a.basis()
                    .iter()
                    .map(|v| v.entries()[r].clone())
                    .chain(b.basis().iter().map(|v| -&v.entries()[r]))
                    .collect()
            })
            .collect(),
    )
    .unwrap();
    let points: Vec<StateVector> = system
        .kernel_basis()
        .iter()
        .filter_map(|coeffs| {
            let mut x = vec![GaussianRational::zero(); n];
            for (alpha, v) in coeffs.entries()[..ka].iter().zip(a.basis()) {
                for (xi, vi) in x.iter_mut().zip(v.entries()) {
                    *xi += &(alpha * vi);
                }
            }
            StateVector::new(x).ok()
        })
        .collect();
    Subspace::span(n, &points).unwrap()
}
