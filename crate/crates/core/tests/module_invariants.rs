//! Cross-module invariants at desk scale: exhaustive sweeps over small
//! orders plus seeded random sweeps for larger ones.

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use wiener_lab::enumerate::{enumerate_trees, random_tree};
use wiener_lab::exact::{
    all_roots_real_distinct, enestrom_kakeya, kurtz_condition, sturm_real_root_count, RatBound,
};
use wiener_lab::families::{
    broom_reduced_poly, closed_form_reduced, make_real_root_caterpillar, ClosedFormKind,
    RealRootCaterpillarSpec,
};
use wiener_lab::poly::WienerPoly;
use wiener_lab::roots::find_roots_default;
use wiener_lab::tree::WeightedCaterpillar;

#[test]
fn distribution_invariants_exhaustive_and_random() {
    // exhaustive n <= 10
    for n in 2..=10 {
        for tree in enumerate_trees(n).unwrap() {
            let dd = tree.distance_distribution();
            let total: BigInt = dd.counts().iter().sum();
            assert_eq!(total, BigInt::from(n * (n - 1) / 2));
            assert_eq!(dd.counts()[0], BigInt::from(n - 1));
            assert!(!dd.counts().last().unwrap().is_zero());
        }
    }
    // 1000 random labeled trees with n <= 50
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for _ in 0..1000 {
        let n = 2 + rng.random_range(0..49);
        let tree = random_tree(n, &mut rng);
        let dd = tree.distance_distribution();
        let total: BigInt = dd.counts().iter().sum();
        assert_eq!(total, BigInt::from(n * (n - 1) / 2));
        assert_eq!(dd.counts()[0], BigInt::from(n - 1));
    }
}

#[test]
fn caterpillar_closed_form_matches_expansion_on_full_grid() {
    // all spines s <= 6 with multiplicities <= 4 (ends >= 1)
    fn sweep(s: usize) -> Vec<Vec<BigInt>> {
        let mut out = Vec::new();
        let mut current = vec![0usize; s];
        loop {
            let valid = if s >= 2 {
                current[0] >= 1 && current[s - 1] >= 1
            } else {
                true
            };
            if valid {
                out.push(current.iter().map(|&m| BigInt::from(m)).collect());
            }
            let mut pos = 0;
            loop {
                if pos == s {
                    return out;
                }
                current[pos] += 1;
                if current[pos] <= 4 {
                    break;
                }
                current[pos] = 0;
                pos += 1;
            }
        }
    }
    let mut checked = 0usize;
    for s in 1..=6 {
        for mults in sweep(s) {
            let cat = match WeightedCaterpillar::new(mults) {
                Ok(cat) => cat,
                Err(_) => continue,
            };
            if cat.order() < BigInt::from(2) {
                continue;
            }
            let closed = cat.distance_distribution().unwrap();
            let expanded = cat.expand().unwrap().distance_distribution();
            assert_eq!(closed, expanded);
            checked += 1;
        }
    }
    assert!(checked > 5000, "grid too small: {checked}");
}

#[test]
fn canonical_code_survives_random_relabelings() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for n in [5usize, 9, 14] {
        for tree in enumerate_trees(n).unwrap().take(30) {
            let code = tree.canonical_code();
            for _ in 0..100 {
                // random permutation by Fisher-Yates
                let mut perm: Vec<usize> = (0..n).collect();
                for i in (1..n).rev() {
                    let j = rng.random_range(0..=i);
                    perm.swap(i, j);
                }
                let edges: Vec<(usize, usize)> = tree
                    .edges()
                    .into_iter()
                    .map(|(u, v)| (perm[u], perm[v]))
                    .collect();
                let relabeled = wiener_lab::tree::Tree::from_edges(n, &edges).unwrap();
                assert_eq!(relabeled.canonical_code(), code);
            }
        }
    }
}

#[test]
fn wiener_index_equals_bfs_distance_sum_exhaustively() {
    for n in 2..=9 {
        for tree in enumerate_trees(n).unwrap() {
            let mut direct = BigInt::zero();
            for v in 0..n {
                for (u, d) in tree.bfs_distances(v).into_iter().enumerate() {
                    if u > v {
                        direct += BigInt::from(d);
                    }
                }
            }
            assert_eq!(WienerPoly::of_tree(&tree).wiener_index(), direct);
        }
    }
}

#[test]
fn root_product_reconstructs_constant_coefficient() {
    for n in 3..=11 {
        for tree in enumerate_trees(n).unwrap() {
            let poly = WienerPoly::reduced_of_tree(&tree);
            if poly.degree() == 0 {
                continue;
            }
            let report = find_roots_default(&poly).unwrap();
            assert!(report.converged);
            let prod = report
                .roots
                .iter()
                .fold(num_complex::Complex64::new(1.0, 0.0), |acc, z| acc * z);
            let expect = poly.coeffs()[0].to_f64().unwrap()
                / poly.coeffs().last().unwrap().to_f64().unwrap();
            let sign = if poly.degree().is_multiple_of(2) { 1.0 } else { -1.0 };
            let err = (prod - sign * expect).norm();
            assert!(
                err <= 1e-8 * expect.abs().max(1.0),
                "n={n}: product {prod} vs {}",
                sign * expect
            );
        }
    }
}

#[test]
fn annulus_contains_roots_of_random_larger_trees() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..1000 {
        let n = 15 + rng.random_range(0..26);
        let tree = random_tree(n, &mut rng);
        let poly = WienerPoly::reduced_of_tree(&tree);
        let annulus = enestrom_kakeya(&poly).unwrap();
        let inner = annulus.inner.to_f64().unwrap() - 1e-9;
        let outer = annulus.outer.to_f64().unwrap() + 1e-9;
        let report = find_roots_default(&poly).unwrap();
        for z in &report.roots {
            assert!(
                (inner..=outer).contains(&z.norm()),
                "order {n}: |z| = {} outside [{inner}, {outer}]",
                z.norm()
            );
        }
    }
}

#[test]
fn kurtz_implies_all_real_distinct_exhaustively() {
    // every tree polynomial with degree >= 2, order <= 12
    for n in 4..=12 {
        for tree in enumerate_trees(n).unwrap() {
            let poly = WienerPoly::reduced_of_tree(&tree);
            if poly.degree() < 2 {
                continue;
            }
            if let Ok((true, _)) = kurtz_condition(&poly) {
                let (distinct, cert) = all_roots_real_distinct(&poly).unwrap();
                assert!(
                    distinct,
                    "Kurtz held but roots not all real+distinct: {:?} (count {})",
                    poly.coeffs(),
                    cert.real_root_count
                );
            }
        }
    }
    // the family polynomials
    for n in 10..=60 {
        for kind in [ClosedFormKind::Tn, ClosedFormKind::TnPrime, ClosedFormKind::TnDoublePrime] {
            let poly = closed_form_reduced(kind, n).unwrap();
            if let Ok((true, _)) = kurtz_condition(&poly) {
                let (distinct, _) = all_roots_real_distinct(&poly).unwrap();
                assert!(distinct);
            }
        }
    }
    for (d, t) in [(3usize, 37u64), (4, 101), (5, 101)] {
        let spec = RealRootCaterpillarSpec {
            diameter: d,
            base: t,
            scale: 1,
        };
        let cat = make_real_root_caterpillar(&spec).unwrap();
        let poly = WienerPoly::reduced_from_distribution(&cat.distance_distribution().unwrap());
        if let Ok((true, _)) = kurtz_condition(&poly) {
            let (distinct, _) = all_roots_real_distinct(&poly).unwrap();
            assert!(distinct, "caterpillar D={d} t={t}");
        }
    }
}

#[test]
fn numeric_real_root_count_agrees_with_sturm_exhaustively() {
    for n in 3..=12 {
        for tree in enumerate_trees(n).unwrap() {
            let poly = WienerPoly::reduced_of_tree(&tree);
            if poly.degree() == 0 {
                continue;
            }
            let report = find_roots_default(&poly).unwrap();
            let numeric = report
                .roots
                .iter()
                .filter(|z| z.im.abs() < 1e-7)
                .count();
            let cert =
                sturm_real_root_count(&poly, RatBound::NegInf, RatBound::PosInf).unwrap();
            // multiplicities: numeric sees each repeated root as several
            // near-real points, Sturm counts distinct roots; account via
            // the squarefree defect.
            let multiplicity_excess = poly.degree() - cert.squarefree_part_degree;
            assert_eq!(
                numeric,
                cert.real_root_count + multiplicity_excess,
                "n={n}, poly {:?}",
                poly.coeffs()
            );
        }
    }
}

#[test]
fn broom_formula_matches_bfs_on_the_full_grid() {
    for k in 1..=8 {
        for n in 1..=30 {
            let formula = broom_reduced_poly(k, n).unwrap();
            let tree = wiener_lab::families::make_broom(k, n).unwrap();
            assert_eq!(formula, WienerPoly::reduced_of_tree(&tree), "broom({k},{n})");
        }
    }
}

#[test]
fn mc_resilience_matches_polynomial_on_tn_dprime() {
    // the diameter-4 extremal tree at order 10, p = 0.7, 1e5 trials
    let tree = wiener_lab::families::make_tn_dprime(10).unwrap();
    let poly = WienerPoly::of_tree(&tree);
    let exact = poly
        .resilience(&num_rational::BigRational::new(7.into(), 10.into()))
        .unwrap()
        .to_f64()
        .unwrap();
    let mc = wiener_lab::poly::resilience_mc(&tree, 0.7, 100_000, 99).unwrap();
    assert!(
        (mc.estimate - exact).abs() <= 4.0 * mc.stderr,
        "estimate {} vs exact {} (stderr {})",
        mc.estimate,
        exact,
        mc.stderr
    );
}

#[test]
fn spider_pair_count_matches_formula_on_random_parameters() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for _ in 0..50 {
        let arms = 2 + rng.random_range(0..4usize);
        let k = 1 + rng.random_range(0..3usize);
        let a: Vec<usize> = (0..arms).map(|_| 1 + rng.random_range(0..5usize)).collect();
        let tree = wiener_lab::families::make_spider_star(&a, k).unwrap();
        let dd = tree.distance_distribution();
        let expect: usize = (0..arms)
            .flat_map(|i| ((i + 1)..arms).map(move |j| (i, j)))
            .map(|(i, j)| a[i] * a[j])
            .sum();
        assert_eq!(dd.count_at(2 * k + 2), BigInt::from(expect), "a={a:?} k={k}");
        let total: BigInt = dd.counts().iter().sum();
        let order = BigInt::from(tree.order());
        assert_eq!(total * 2, &order * (&order - BigInt::one()));
    }
}
