mod common;

use common::*;
use liecoh::linalg::{hermitian_inertia, inverse, kernel, rank, rref, solve_linear, split_eigen};
use liecoh::{ExactMatrix, GaussianRational, Vector};
use num_traits::Zero;
use proptest::prelude::*;

/// Unit lower times unit upper triangular: always invertible.
fn invertible(n: usize) -> impl Strategy<Value = ExactMatrix> {
    (matrix_with(n, n, gaussian_int().boxed()), matrix_with(n, n, gaussian_int().boxed())).prop_map(move |(a, b)| {
        let mut l = ExactMatrix::identity(n);
        let mut u = ExactMatrix::identity(n);
        for i in 0..n {
            for j in 0..i {
                l[(i, j)] = a[(i, j)].clone();
                u[(j, i)] = b[(j, i)].clone();
            }
        }
        l.mul(&u)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn rank_nullity(m in matrix(5)) {
        let k = kernel(&m);
        prop_assert_eq!(rank(&m) + k.len(), m.cols());
        for v in &k {
            prop_assert!(m.mul_vec(v).iter().all(Zero::is_zero));
        }
        prop_assert_eq!(rank(&m), naive_rank(&m));
    }

    #[test]
    fn rank_of_transpose_and_adjoint(m in matrix(5)) {
        let r = rank(&m);
        prop_assert_eq!(rank(&m.transpose()), r);
        prop_assert_eq!(rank(&m.adjoint()), r);
    }

    #[test]
    fn rref_is_idempotent(m in matrix(5)) {
        let (r, pivots) = rref(&m);
        prop_assert_eq!(pivots.len(), rank(&m));
        prop_assert_eq!(rref(&r).0, r);
    }

    #[test]
    fn solve_consistent_systems(m in matrix(4), seed in proptest::collection::vec(scalar(), 4)) {
        let x: Vector = seed.into_iter().cycle().take(m.cols()).collect();
        let b = m.mul_vec(&x);
        let y = solve_linear(&m, &b).expect("consistent");
        prop_assert_eq!(m.mul_vec(&y), b);
    }

    #[test]
    fn inverse_of_invertible(p in (1usize..=4).prop_flat_map(invertible)) {
        let inv = inverse(&p).expect("invertible");
        prop_assert_eq!(p.mul(&inv), ExactMatrix::identity(p.rows()));
    }

    #[test]
    fn eigen_reassembly(
        (p, d) in (1usize..=4).prop_flat_map(|n| (invertible(n), proptest::collection::vec(gaussian_int(), n)))
    ) {
        let n = p.rows();
        let a = p.mul(&ExactMatrix::from_diagonal(&d)).mul(&inverse(&p).unwrap());
        let split = split_eigen(&a).expect("splits over Q(i)");
        prop_assert!(split.diagonalizable);
        let mut expected = d.clone();
        expected.sort();
        let mut got: Vec<GaussianRational> = Vec::new();
        for pair in &split.pairs {
            got.extend(std::iter::repeat(pair.value.clone()).take(pair.multiplicity));
            for v in &pair.eigenspace {
                let lhs = a.mul_vec(v);
                let rhs: Vector = v.iter().map(|x| x * &pair.value).collect();
                prop_assert_eq!(lhs, rhs);
            }
        }
        got.sort();
        prop_assert_eq!(got, expected);
        prop_assert_eq!(split.eigenbasis().len(), n);
    }

    #[test]
    fn inertia_is_a_congruence_invariant(
        (h, p) in (1usize..=4).prop_flat_map(|n| (matrix_with(n, n, scalar().boxed()), invertible(n)))
    ) {
        let h = h.add(&h.adjoint());
        let i = hermitian_inertia(&h).unwrap();
        prop_assert_eq!(i.n_pos + i.n_neg, rank(&h));
        prop_assert_eq!(i.dim(), h.rows());
        let c = p.adjoint().mul(&h).mul(&p);
        prop_assert_eq!(hermitian_inertia(&c).unwrap(), i);
        prop_assert_eq!(hermitian_inertia(&h.scale(&GaussianRational::from_int(-1))).unwrap(), i.swapped());
    }

    #[test]
    fn conjugation_is_an_involutive_automorphism(a in scalar(), b in scalar()) {
        prop_assert_eq!(a.conj().conj(), a.clone());
        prop_assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
        prop_assert_eq!((&a + &b).conj(), &a.conj() + &b.conj());
        prop_assert!((&a * &a.conj()).is_real());
    }

    #[test]
    fn scalar_text_round_trip(a in scalar()) {
        let s = a.to_string();
        prop_assert_eq!(s.parse::<GaussianRational>().unwrap(), a.clone());
        let json = serde_json::to_string(&a).unwrap();
        prop_assert_eq!(serde_json::from_str::<GaussianRational>(&json).unwrap(), a);
    }

    #[test]
    fn field_inverse(a in scalar()) {
        match a.inv() {
            Some(inv) => prop_assert_eq!(&a * &inv, GaussianRational::from_int(1)),
            None => prop_assert!(a.is_zero()),
        }
    }

    #[test]
    fn hermitian_matrices_are_hermitian(h in hermitian(4)) {
        prop_assert!(h.is_hermitian());
        prop_assert_eq!(h.conj().transpose(), h);
    }
}
