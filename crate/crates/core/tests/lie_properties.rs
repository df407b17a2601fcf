mod common;

use common::*;
use liecoh::lie::{builtin, format_combination, parse_combination, validate_algebra, Subspace};
use liecoh::{GaussianRational, Vector};
use num_traits::Zero;
use proptest::prelude::*;

fn vectors(n: usize, count: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = Vec<Vector>> {
    proptest::collection::vec(proptest::collection::vec(unit_entry(), n), count)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn random_solvable_algebras_are_lie(g in solvable()) {
        prop_assert!(validate_algebra(&g).is_ok());
    }

    #[test]
    fn bracket_is_antisymmetric_and_bilinear(
        (g, v, w) in solvable().prop_flat_map(|g| {
            let n = g.dim();
            (Just(g), proptest::collection::vec(scalar(), n), proptest::collection::vec(scalar(), n))
        })
    ) {
        let c = g.complexify();
        let vw = c.bracket(&v, &w);
        let wv: Vector = c.bracket(&w, &v).iter().map(|x| -x).collect();
        prop_assert_eq!(&vw, &wv);
        prop_assert!(c.bracket(&v, &v).iter().all(Zero::is_zero));
        let two = GaussianRational::from_int(2);
        let v2: Vector = v.iter().map(|x| x * &two).collect();
        let expected: Vector = vw.iter().map(|x| x * &two).collect();
        prop_assert_eq!(c.bracket(&v2, &w), expected);
    }

    #[test]
    fn combination_text_round_trip(v in proptest::collection::vec(scalar(), 8)) {
        let g = builtin::su3();
        let text = format_combination(g.basis_names(), &v);
        let back = parse_combination(&text, 8, |n| g.index_of(n).map(|i| liecoh::linalg::unit_vector(8, i))).unwrap();
        prop_assert_eq!(back, v);
    }

    #[test]
    fn modular_dimension_identity((a, b) in (vectors(5, 0..=4), vectors(5, 0..=4))) {
        let u = Subspace::new(5, &a).unwrap();
        let w = Subspace::new(5, &b).unwrap();
        let sum = u.sum(&w).unwrap();
        let meet = u.intersect(&w).unwrap();
        prop_assert_eq!(sum.dim() + meet.dim(), u.dim() + w.dim());
        prop_assert!(sum.contains_subspace(&u) && sum.contains_subspace(&w));
        prop_assert!(u.contains_subspace(&meet) && w.contains_subspace(&meet));
    }

    #[test]
    fn subspace_conjugation((a, v) in (vectors(4, 0..=3), proptest::collection::vec(unit_entry(), 4))) {
        let u = Subspace::new(4, &a).unwrap();
        prop_assert_eq!(u.conj().conj(), u.clone());
        let sum = u.sum(&u.conj()).unwrap();
        prop_assert!(sum.is_conj_stable());
        let vbar: Vector = v.iter().map(GaussianRational::conj).collect();
        prop_assert_eq!(u.contains(&v), u.conj().contains(&vbar));
    }

    #[test]
    fn generated_subalgebras_are_closed((g, h) in algebra_with_subalgebra()) {
        prop_assert!(liecoh::lie::is_subalgebra(&g, &h).is_ok());
    }
}
