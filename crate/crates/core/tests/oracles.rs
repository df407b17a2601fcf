//! Hand-derived values checked against independent computations.

mod common;

use common::*;
use liecoh::classify::levi_form;
use liecoh::cohomology::{ce_differential, GModule};
use liecoh::lie::{builtin, Subspace};
use liecoh::{ExactMatrix, GaussianRational, Vector};
use num_traits::Zero;
use proptest::prelude::*;

fn g(s: &str) -> GaussianRational {
    s.parse().unwrap()
}

fn scaled(v: &[GaussianRational], c: &GaussianRational) -> Vector {
    v.iter().map(|x| x * c).collect()
}

#[test]
fn su2_differential_by_direct_evaluation() {
    let c = builtin::su2().complexify();
    let d = reference_differential(&c, 1);
    assert_eq!(d, ExactMatrix::from_ints(&[&[0, 0, -2], &[0, 2, 0], &[-2, 0, 0]]));
    assert_eq!(ce_differential(&c, &GModule::trivial(&c), 1), d);
    assert!(reference_differential(&c, 2).is_zero());
}

#[test]
fn su2_eigenvector_brackets() {
    let a = builtin::su2();
    let c = a.complexify();
    let (t, l, lbar) = (a.resolve("T").unwrap(), a.resolve("L").unwrap(), a.resolve("Lbar").unwrap());
    assert_eq!(l, vec![g("0"), g("1"), g("-i")]);
    assert_eq!(c.bracket(&t, &l), scaled(&l, &g("2i")));
    assert_eq!(c.bracket(&t, &lbar), scaled(&lbar, &g("-2i")));
    assert_eq!(c.bracket(&l, &lbar), scaled(&t, &g("4i")));
}

#[test]
fn killing_forms_by_explicit_traces() {
    let c = builtin::su2().complexify();
    assert_eq!(c.killing_form(), ExactMatrix::identity(3).scale(&g("-8")));
    let s3 = builtin::su3().complexify();
    let k = s3.killing_form();
    for i in 0..8 {
        for j in 0..8 {
            let t = s3.ad_basis(i).mul(&s3.ad_basis(j)).trace();
            assert_eq!(k[(i, j)], t);
        }
    }
    assert!(k.is_hermitian());
}

#[test]
fn su3_weights_from_brackets() {
    let a = builtin::su3();
    let c = a.complexify();
    let (t1, t2) = (a.resolve("T1").unwrap(), a.resolve("T2").unwrap());
    let expected = [("L1", "2i", "0"), ("L2", "i", "3i"), ("L3", "-i", "3i")];
    for (name, w1, w2) in expected {
        let l = a.resolve(name).unwrap();
        assert_eq!(c.bracket(&t1, &l), scaled(&l, &g(w1)), "[T1, {name}]");
        assert_eq!(c.bracket(&t2, &l), scaled(&l, &g(w2)), "[T2, {name}]");
    }
    let (l1, l2, l3) = (a.resolve("L1").unwrap(), a.resolve("L2").unwrap(), a.resolve("L3").unwrap());
    assert!(c.bracket(&l1, &l2).iter().all(Zero::is_zero));
    assert_eq!(c.bracket(&l1, &l3), scaled(&l2, &g("2i")));
    assert!(c.bracket(&l2, &l3).iter().all(Zero::is_zero));
}

#[test]
fn constructed_liouville_quotients() {
    use liecoh::torus::convergents;
    use num_bigint::BigInt;
    let mut q = vec![BigInt::from(0)];
    for j in 0..4usize {
        let qj = convergents(&q).pop().unwrap().1;
        q.push(num_traits::pow(qj, 2 * j));
    }
    let expected: Vec<BigInt> = [0i64, 1, 1, 16, 33i64.pow(6)].iter().map(|&x| BigInt::from(x)).collect();
    assert_eq!(q, expected);
}

fn levi_value(m: &ExactMatrix, c: &[GaussianRational]) -> GaussianRational {
    let mut acc = GaussianRational::zero();
    for a in 0..c.len() {
        for b in 0..c.len() {
            acc += &(&(&c[a] * &c[b].conj()) * &m[(a, b)]);
        }
    }
    acc
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    /// `ℒ_θ(Z, Z) = b(|γ|² − 2|α|² − |β|²) + a(|β|² + |γ|²)` at `θ = −bτ₁ + aτ₂`
    /// for `Z = αL₁ + βL₂ + γL₃ + δU`, `U = aT₁ + bT₂`.
    #[test]
    fn su3_levi_form_closed_formula(
        (a, b) in (-3i64..=3, -3i64..=3).prop_filter("U != 0", |(a, b)| *a != 0 || *b != 0),
        z in proptest::collection::vec(gaussian_int(), 4),
    ) {
        let alg = builtin::su3();
        let c = alg.complexify();
        let (t1, t2) = (alg.resolve("T1").unwrap(), alg.resolve("T2").unwrap());
        let u: Vector = t1.iter().zip(&t2).map(|(x, y)| &(x * &GaussianRational::from_int(a)) + &(y * &GaussianRational::from_int(b))).collect();
        let ls: Vec<Vector> = ["L1", "L2", "L3"].iter().map(|n| alg.resolve(n).unwrap()).collect();
        let mut gens = ls.clone();
        gens.push(u.clone());
        let h = Subspace::new(8, &gens).unwrap();
        let mut theta = vec![GaussianRational::zero(); 8];
        theta[0] = GaussianRational::from_int(-b);
        theta[1] = GaussianRational::from_int(a);
        let form = levi_form(&c, &h, &theta).unwrap();

        let mut zv = vec![GaussianRational::zero(); 8];
        for (coef, v) in z.iter().zip(gens.iter()) {
            liecoh::linalg::axpy(&mut zv, coef, v);
        }
        let coords = h.coordinates(&zv).unwrap();
        let got = levi_value(&form.matrix, &coords);

        let n = |x: &GaussianRational| GaussianRational::from_real(x.norm_sqr());
        let (al, be, ga) = (n(&z[0]), n(&z[1]), n(&z[2]));
        let bb = GaussianRational::from_int(b);
        let aa = GaussianRational::from_int(a);
        let two = GaussianRational::from_int(2);
        let expected = &(&bb * &(&(&ga - &(&two * &al)) - &be)) + &(&aa * &(&be + &ga));
        prop_assert_eq!(got, expected);
    }
}
