//! Property tests over randomized trees, polynomials, and parameters.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};
use proptest::collection::vec;
use proptest::prelude::*;

use wiener_lab::density::coefficient_distance;
use wiener_lab::enumerate::tree_from_pruefer;
use wiener_lab::io::{to_edge_list, to_graph6, tree_from_edge_list, tree_from_graph6};
use wiener_lab::poly::{resilience_mc, WienerPoly};
use wiener_lab::tree::Tree;

fn pruefer_tree() -> impl Strategy<Value = Tree> {
    (3usize..24).prop_flat_map(|n| {
        vec(0..n, n - 2).prop_map(move |seq| tree_from_pruefer(&seq).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn distribution_sums_to_pair_count(tree in pruefer_tree()) {
        let n = tree.order();
        let dd = tree.distance_distribution();
        let total: BigInt = dd.counts().iter().sum();
        prop_assert_eq!(total, BigInt::from(n * (n - 1) / 2));
        prop_assert_eq!(dd.counts()[0].clone(), BigInt::from(n - 1));
    }

    #[test]
    fn graph6_and_edge_list_round_trip(tree in pruefer_tree()) {
        let code = tree.canonical_code();
        let via_g6 = tree_from_graph6(&to_graph6(&tree)).unwrap();
        prop_assert_eq!(via_g6.canonical_code(), code.clone());
        let via_el = tree_from_edge_list(&to_edge_list(&tree)).unwrap();
        prop_assert_eq!(via_el.canonical_code(), code);
    }

    #[test]
    fn reduce_then_unreduce_is_identity(tree in pruefer_tree()) {
        let full = WienerPoly::of_tree(&tree);
        let reduced = full.reduce().unwrap();
        prop_assert_eq!(reduced.unreduce(), full.clone());
        prop_assert_eq!(reduced.wiener_index(), full.wiener_index());
    }

    #[test]
    fn resilience_monotone_in_probability(tree in pruefer_tree(), step in 1usize..9) {
        // more reliable edges cannot disconnect more pairs
        let poly = WienerPoly::of_tree(&tree);
        let lo = BigRational::new(BigInt::from(step as i64), BigInt::from(10));
        let hi = BigRational::new(BigInt::from(step as i64 + 1), BigInt::from(10));
        prop_assert!(poly.resilience(&lo).unwrap() <= poly.resilience(&hi).unwrap());
    }

    #[test]
    fn mc_estimate_is_scheduler_independent(seed in 0u64..1000) {
        let tree = tree_from_pruefer(&[0, 1, 2, 3]).unwrap();
        let a = resilience_mc(&tree, 0.6, 400, seed).unwrap();
        let b = resilience_mc(&tree, 0.6, 400, seed).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn spider_distance_times_scale_stays_bounded(
        entries in vec(1u64..6, 2..5),
        k in 1usize..3,
    ) {
        let a: Vec<BigInt> = entries.iter().map(|&x| BigInt::from(x)).collect();
        let base = coefficient_distance(&a, k, 1).unwrap();
        let bound = BigRational::from_integer(2.into()) * &base;
        let mut prev = base;
        for c in [2u64, 4, 8, 16, 32, 64] {
            let d = coefficient_distance(&a, k, c).unwrap();
            prop_assert!(d < prev, "distance must shrink at c = {}", c);
            let product = &d * BigRational::from_integer(c.into());
            prop_assert!(product <= bound.clone(),
                "distance * c = {} above bound {}", product.to_f64().unwrap(), bound.to_f64().unwrap());
            prev = d;
        }
    }

    #[test]
    fn conjugate_pairing_holds(tree in pruefer_tree()) {
        let poly = WienerPoly::reduced_of_tree(&tree);
        if poly.degree() >= 1 {
            let report = wiener_lab::roots::find_roots_default(&poly).unwrap();
            for z in report.roots.iter().filter(|z| z.im != 0.0) {
                let partner = report
                    .roots
                    .iter()
                    .map(|w| (w - z.conj()).norm())
                    .fold(f64::INFINITY, f64::min);
                prop_assert!(partner < wiener_lab::roots::CONJUGATE_PAIR_TOL,
                    "unpaired root {} (nearest conj distance {})", z, partner);
            }
        }
    }

    #[test]
    fn wiener_index_of_star_formula(leaves in 2usize..40) {
        // (n-1) + 2 C(n-1, 2) with n = leaves + 1 vertices
        let tree = wiener_lab::tree::star_tree(leaves);
        let expect = leaves + 2 * (leaves * (leaves - 1) / 2);
        prop_assert_eq!(
            WienerPoly::of_tree(&tree).wiener_index(),
            BigInt::from(expect)
        );
    }

    #[test]
    fn evaluate_rational_matches_complex_on_integers(tree in pruefer_tree(), x in -6i64..6) {
        let poly = WienerPoly::reduced_of_tree(&tree);
        let exact = poly.evaluate_rational(&BigRational::from_integer(x.into()));
        let approx = poly.evaluate_complex(num_complex::Complex64::new(x as f64, 0.0));
        let exact_f = exact.to_f64().unwrap();
        let scale = exact_f.abs().max(1.0);
        prop_assert!((exact_f - approx.re).abs() <= 1e-9 * scale);
        prop_assert!(approx.im == 0.0);
    }
}

#[test]
fn one_is_never_a_wiener_root() {
    // W(T;1) = C(n,2) > 0: quick sanity against sign slips in evaluation.
    let tree = tree_from_pruefer(&[4, 4, 2, 1, 0]).unwrap();
    let poly = WienerPoly::of_tree(&tree);
    assert_eq!(
        poly.evaluate_rational(&BigRational::one()),
        BigRational::from_integer(BigInt::from(7 * 6 / 2))
    );
}
