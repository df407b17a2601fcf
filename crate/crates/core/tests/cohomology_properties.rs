mod common;

use common::*;
use liecoh::cohomology::{
    bigraded_cohomology, bigraded_complex, ce_cohomology, ce_complex, ce_differential, default_complement, GModule,
};
use liecoh::lie::Subspace;
use liecoh::{GaussianRational, Vector};
use proptest::prelude::*;

/// A different complement: reversed, with multiples of the first `h` vector mixed in.
fn perturbed_complement(h: &Subspace, shift: i64) -> Vec<Vector> {
    let mut c = default_complement(h);
    c.reverse();
    let hb = h.basis();
    if let Some(h0) = hb.first() {
        let k = GaussianRational::from_parts(shift, 1);
        for v in c.iter_mut() {
            for (x, y) in v.iter_mut().zip(h0) {
                *x += &(&k * y);
            }
        }
    }
    c
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn differential_matches_direct_evaluation(g in solvable()) {
        let c = g.complexify();
        let triv = GModule::trivial(&c);
        for k in 0..=c.dim().min(3) {
            prop_assert_eq!(ce_differential(&c, &triv, k), reference_differential(&c, k));
        }
    }

    #[test]
    fn ce_complexes_square_to_zero(g in solvable()) {
        let c = g.complexify();
        prop_assert!(ce_complex(&c, &GModule::trivial(&c)).is_complex());
        prop_assert!(ce_complex(&c, &GModule::adjoint(&c)).is_complex());
        prop_assert_eq!(ce_cohomology(&c, &GModule::trivial(&c), false).dim(0), 1);
    }

    #[test]
    fn modules_are_homomorphisms(g in solvable()) {
        let c = g.complexify();
        let ad = GModule::adjoint(&c);
        prop_assert!(ad.check_homomorphism(&c).is_ok());
        prop_assert!(ad.dual().check_homomorphism(&c).is_ok());
        prop_assert!(ad.exterior_power(2).check_homomorphism(&c).is_ok());
    }

    #[test]
    fn dprime_squares_to_zero((g, h) in algebra_with_subalgebra()) {
        let m = g.dim() - h.dim();
        for p in 0..=m {
            let cx = bigraded_complex(&g, &h, None, p).unwrap();
            prop_assert!(cx.is_complex(), "p = {}", p);
        }
    }

    #[test]
    fn euler_characteristic_per_p((g, h) in algebra_with_subalgebra()) {
        let (n, m) = (h.dim(), g.dim() - h.dim());
        let t = bigraded_cohomology(&g, &h, None, false).unwrap();
        for p in 0..=m {
            let chain: i64 = (0..=n).map(|q| (-1i64).pow(q as u32) * (binomial(m, p) * binomial(n, q)) as i64).sum();
            let homology: i64 = (0..=n).map(|q| (-1i64).pow(q as u32) * t.bidim(p, q) as i64).sum();
            prop_assert_eq!(chain, homology, "p = {}", p);
        }
    }

    #[test]
    fn bigraded_dims_ignore_the_complement(((g, h), shift) in (algebra_with_subalgebra(), -2i64..=2)) {
        let base = bigraded_cohomology(&g, &h, None, false).unwrap();
        let other = perturbed_complement(&h, shift);
        let alt = bigraded_cohomology(&g, &h, Some(&other), false).unwrap();
        prop_assert_eq!(base.dims, alt.dims);
    }
}
