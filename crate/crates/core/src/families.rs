//! Generators for the named tree families and their closed-form reduced
//! Wiener polynomials.
//!
//! Each generator has a matching closed form; the two are locked against
//! each other by the BFS oracle in tests, after which the closed form
//! serves as the oracle for parameters too large to expand.
//!
//! Families:
//! - broom `B(k, n)`: a path of `k` edges with `n` pendant leaves at one
//!   end; its real roots sweep `(-1, 0)` densely as `(k, n)` vary.
//! - spider-star `S(a, k)`: a center with one arm of `k` edges per entry
//!   of `a`, arm `i` ending in a hub carrying `a_i` leaves; normalized
//!   polynomials converge to `x^{2k+1} + R(a) x`.
//! - `T_n`, `T_n'`, `T_n''`, `tilde T_n`: the extremal trees for maximum
//!   root modulus / imaginary part (paths of 7 or 5 vertices decorated
//!   with a leaf cluster).
//! - the all-real-root caterpillar: spine of `D-1` vertices with leaf
//!   multiplicities `n / t^{i(i-1)/2}`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::poly::WienerPoly;
use crate::tree::{DistanceDistribution, Tree, WeightedCaterpillar};

/// Parameters of a generated family member, carried in density-search
/// hits and reports.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    Broom { path_edges: usize, leaves: usize },
    SpiderStar { arm_leaves: Vec<BigInt>, arm_edges: usize },
    Tn { n: usize },
    TnPrime { n: usize },
    TnDoublePrime { n: usize },
    TildeTn { n: usize },
    RealRootCaterpillar { spec: RealRootCaterpillarSpec },
}

impl std::fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FamilySpec::Broom { path_edges, leaves } => {
                write!(f, "broom(k={path_edges}, n={leaves})")
            }
            FamilySpec::SpiderStar { arm_leaves, arm_edges } => {
                let a: Vec<String> = arm_leaves.iter().map(BigInt::to_string).collect();
                write!(f, "spider(a=[{}], k={arm_edges})", a.join(","))
            }
            FamilySpec::Tn { n } => write!(f, "T_{n}"),
            FamilySpec::TnPrime { n } => write!(f, "T'_{n}"),
            FamilySpec::TnDoublePrime { n } => write!(f, "T''_{n}"),
            FamilySpec::TildeTn { n } => write!(f, "~T_{n}"),
            FamilySpec::RealRootCaterpillar { spec } => write!(
                f,
                "caterpillar(D={}, t={}, m={})",
                spec.diameter, spec.base, spec.scale
            ),
        }
    }
}

// ---------------------------------------------------------------------
// Brooms
// ---------------------------------------------------------------------

/// Path `v_0..v_k` with `n_leaves` pendant leaves on `v_k`.
pub fn make_broom(k: usize, n_leaves: usize) -> Result<Tree> {
    if k < 1 || n_leaves < 1 {
        return Err(Error::BadParam("broom needs k >= 1 and n >= 1".into()));
    }
    let order = k + 1 + n_leaves;
    let mut edges = Vec::with_capacity(order - 1);
    for i in 1..=k {
        edges.push((i - 1, i));
    }
    for leaf in 0..n_leaves {
        edges.push((k, k + 1 + leaf));
    }
    Tree::from_edges(order, &edges)
}

/// Closed-form reduced polynomial of the broom:
/// `d_1 = k + n`, `d_2 = (n^2+n)/2 + k - 1`, `d_l = n + k + 1 - l` for
/// `3 <= l <= k`, `d_{k+1} = n`. The elided middle pattern is derived from
/// the three pair groups (path-path, leaf-path, leaf-leaf) and locked
/// against the BFS oracle in tests.
pub fn broom_reduced_poly(k: usize, n_leaves: usize) -> Result<WienerPoly> {
    if k < 1 || n_leaves < 1 {
        return Err(Error::BadParam("broom needs k >= 1 and n >= 1".into()));
    }
    let n = BigInt::from(n_leaves);
    let mut d = vec![BigInt::zero(); k + 1];
    d[0] = BigInt::from(k) + &n;
    if k == 1 {
        // Degenerate broom is the star on n+2 vertices.
        d[1] = (&n * &n + &n) / 2;
    } else {
        d[1] = (&n * &n + &n) / 2 + BigInt::from(k - 1);
        for l in 3..=k {
            d[l - 1] = &n + BigInt::from(k + 1 - l);
        }
        d[k] = n;
    }
    Ok(WienerPoly::from_coeffs(d, true))
}

// ---------------------------------------------------------------------
// Spider-stars
// ---------------------------------------------------------------------

/// Explicit spider-star: center, `a.len()` arms of `k` edges, hub `i`
/// carrying `a[i]` pendant leaves. Diameter `2k + 2`.
pub fn make_spider_star(a: &[usize], k: usize) -> Result<Tree> {
    if a.len() < 2 || k < 1 || a.iter().any(|&ai| ai < 1) {
        return Err(Error::BadParam(
            "spider-star needs k >= 1 and at least two arms with a_i >= 1".into(),
        ));
    }
    let order = 1 + a.len() * k + a.iter().sum::<usize>();
    let mut edges = Vec::with_capacity(order - 1);
    let mut next = 1;
    for &leaves in a {
        let mut prev = 0;
        for _ in 0..k {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
        for _ in 0..leaves {
            edges.push((prev, next));
            next += 1;
        }
    }
    Tree::from_edges(order, &edges)
}

/// Exact distance distribution of the spider-star from symmetric functions
/// of `a` alone; valid for leaf counts far beyond explicit construction.
#[allow(clippy::needless_range_loop)] // indices are distances
pub fn spider_distribution(a: &[BigInt], k: usize) -> Result<DistanceDistribution> {
    if a.len() < 2 || k < 1 || a.iter().any(|ai| !ai.is_positive()) {
        return Err(Error::BadParam(
            "spider-star needs k >= 1 and at least two arms with a_i >= 1".into(),
        ));
    }
    let arms = BigInt::from(a.len());
    let s1: BigInt = a.iter().sum();
    let s2: BigInt = a.iter().map(|ai| ai * ai).sum();
    let cross_pairs = (&s1 * &s1 - &s2) / 2;
    let same_hub_pairs = (&s2 - &s1) / 2;
    let arm_pairs = (&arms * (&arms - 1)) / 2;

    let mut d = vec![BigInt::zero(); 2 * k + 3];
    // center to arm vertices, and same-arm path pairs
    for j in 1..=k {
        d[j] += &arms;
        if j < k {
            d[j] += &arms * BigInt::from(k - j);
        }
    }
    // cross-arm path pairs at j + j'
    for l in 2..=2 * k {
        let lo = l.saturating_sub(k).max(1);
        let hi = (l - 1).min(k);
        if hi >= lo {
            d[l] += &arm_pairs * BigInt::from(hi - lo + 1);
        }
    }
    // leaves to own arm (distances 1..k) and to the center (k+1)
    for item in d.iter_mut().take(k + 2).skip(1) {
        *item += &s1;
    }
    // leaves to other arms' path vertices
    for j in 1..=k {
        d[k + 1 + j] += (&arms - 1) * &s1;
    }
    d[2] += same_hub_pairs;
    d[2 * k + 2] += &cross_pairs;

    let order = (BigInt::one() + &arms * BigInt::from(k) + &s1)
        .to_usize()
        .ok_or_else(|| Error::BadParam("spider-star order exceeds usize".into()))?;
    DistanceDistribution::new(order, d[1..].to_vec())
}

/// Reduced Wiener polynomial of the spider-star, exact.
pub fn spider_reduced_poly(a: &[BigInt], k: usize) -> Result<WienerPoly> {
    Ok(WienerPoly::reduced_from_distribution(&spider_distribution(
        a, k,
    )?))
}

/// `R(a) = (sum a_i^2) / (2 sum_{i<j} a_i a_j)`, exact. Scale-invariant;
/// minimized at `1/(len-1)` when all entries are equal.
pub fn spider_ratio(a: &[BigInt]) -> Result<BigRational> {
    if a.len() < 2 || a.iter().any(|ai| !ai.is_positive()) {
        return Err(Error::BadParam(
            "ratio needs at least two positive entries".into(),
        ));
    }
    let s1: BigInt = a.iter().sum();
    let s2: BigInt = a.iter().map(|ai| ai * ai).sum();
    Ok(BigRational::new(s2.clone(), &s1 * &s1 - s2))
}

/// `M_{a,k} = reduced W / d_{2k+2}`: monic of degree `2k+1`, exact
/// rational coefficients (low to high).
pub fn normalized_m(a: &[BigInt], k: usize) -> Result<Vec<BigRational>> {
    let poly = spider_reduced_poly(a, k)?;
    let lead = poly.coeffs().last().unwrap().clone();
    if poly.degree() != 2 * k + 1 {
        return Err(Error::BadParam("spider polynomial has wrong degree".into()));
    }
    Ok(poly
        .coeffs()
        .iter()
        .map(|c| BigRational::new(c.clone(), lead.clone()))
        .collect())
}

/// The limit polynomial `x^{2k+1} + R(a) x` as exact rational
/// coefficients (low to high).
pub fn limit_polynomial(a: &[BigInt], k: usize) -> Result<Vec<BigRational>> {
    let ratio = spider_ratio(a)?;
    let mut coeffs = vec![BigRational::zero(); 2 * k + 2];
    coeffs[1] = ratio;
    coeffs[2 * k + 1] = BigRational::one();
    Ok(coeffs)
}

// ---------------------------------------------------------------------
// The extremal trees T_n, T_n', T_n'', tilde T_n
// ---------------------------------------------------------------------

/// Path on 7 vertices, hub attached to the center, `n - 8` leaves on the
/// hub. The tree of maximum-modulus Wiener root for large orders.
pub fn make_tn(n: usize) -> Result<Tree> {
    if n < 9 {
        return Err(Error::BadParam("T_n needs n >= 9".into()));
    }
    let mut edges: Vec<(usize, usize)> = (1..7).map(|i| (i - 1, i)).collect();
    edges.push((3, 7));
    for leaf in 0..n - 8 {
        edges.push((7, 8 + leaf));
    }
    Tree::from_edges(n, &edges)
}

/// `T_n` with `n - 9` hub leaves plus one pendant leaf on the path vertex
/// adjacent to the center (diameter 6).
pub fn make_tn_prime(n: usize) -> Result<Tree> {
    if n < 10 {
        return Err(Error::BadParam("T_n' needs n >= 10".into()));
    }
    let mut edges: Vec<(usize, usize)> = (1..7).map(|i| (i - 1, i)).collect();
    edges.push((3, 7));
    edges.push((4, 8));
    for leaf in 0..n - 9 {
        edges.push((7, 9 + leaf));
    }
    Tree::from_edges(n, &edges)
}

/// Path on 5 vertices with `n - 5` leaves on the center (diameter 4).
pub fn make_tn_dprime(n: usize) -> Result<Tree> {
    if n < 6 {
        return Err(Error::BadParam("T_n'' needs n >= 6".into()));
    }
    let mut edges: Vec<(usize, usize)> = (1..5).map(|i| (i - 1, i)).collect();
    for leaf in 0..n - 5 {
        edges.push((2, 5 + leaf));
    }
    Tree::from_edges(n, &edges)
}

/// Path on 7 vertices with `n - 7` leaves on the center (diameter 6).
/// The conjectured maximum-imaginary-part tree.
pub fn make_tilde_tn(n: usize) -> Result<Tree> {
    if n < 8 {
        return Err(Error::BadParam("tilde T_n needs n >= 8".into()));
    }
    let mut edges: Vec<(usize, usize)> = (1..7).map(|i| (i - 1, i)).collect();
    for leaf in 0..n - 7 {
        edges.push((3, 7 + leaf));
    }
    Tree::from_edges(n, &edges)
}

/// Families with a displayed closed-form reduced polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClosedFormKind {
    Tn,
    TnPrime,
    TnDoublePrime,
}

/// The displayed reduced polynomials, exact:
/// - `T_n`:   `(n-1) + (n^2-15n+70)/2 x + (2n-10)x^2 + (2n-11)x^3 + (2n-14)x^4 + x^5`
/// - `T_n'`:  `(n-1) + (n^2-17n+90)/2 x + (2n-9)x^2 + (3n-21)x^3 + (2n-15)x^4 + x^5`
/// - `T_n''`: `(n-1) + (n^2-7n+16)/2 x + (2n-8)x^2 + x^3`
pub fn closed_form_reduced(kind: ClosedFormKind, n: usize) -> Result<WienerPoly> {
    let big = |v: i64| BigInt::from(v);
    let nn = n as i64;
    let coeffs = match kind {
        ClosedFormKind::Tn => {
            if n < 9 {
                return Err(Error::BadParam("T_n closed form needs n >= 9".into()));
            }
            vec![
                big(nn - 1),
                big((nn * nn - 15 * nn + 70) / 2),
                big(2 * nn - 10),
                big(2 * nn - 11),
                big(2 * nn - 14),
                big(1),
            ]
        }
        ClosedFormKind::TnPrime => {
            if n < 10 {
                return Err(Error::BadParam("T_n' closed form needs n >= 10".into()));
            }
            vec![
                big(nn - 1),
                big((nn * nn - 17 * nn + 90) / 2),
                big(2 * nn - 9),
                big(3 * nn - 21),
                big(2 * nn - 15),
                big(1),
            ]
        }
        ClosedFormKind::TnDoublePrime => {
            if n < 6 {
                return Err(Error::BadParam("T_n'' closed form needs n >= 6".into()));
            }
            vec![
                big(nn - 1),
                big((nn * nn - 7 * nn + 16) / 2),
                big(2 * nn - 8),
                big(1),
            ]
        }
    };
    Ok(WienerPoly::from_coeffs(coeffs, true))
}

// ---------------------------------------------------------------------
// The three T''-plus-leaf variants
// ---------------------------------------------------------------------

/// The three order-`n` trees obtained from `T''_{n-1}` by attaching one
/// leaf: on a second-to-last path vertex, on a center leaf, and on a path
/// endpoint. Returned together with their displayed full-form
/// polynomials.
pub fn leaf_extended_dprime_trees(n: usize) -> Result<[Tree; 3]> {
    if n < 7 {
        return Err(Error::BadParam("variants need n >= 7".into()));
    }
    let base = make_tn_dprime(n - 1)?;
    let with_extra = |at: usize| -> Result<Tree> {
        let mut edges = base.edges();
        edges.push((at, n - 1));
        Tree::from_edges(n, &edges)
    };
    Ok([with_extra(1)?, with_extra(5)?, with_extra(0)?])
}

/// Displayed full-form polynomials of the three variants:
/// - `(n-1)x + (n^2-9n+28)/2 x^2 + (3n-15)x^3 + 2x^4`
/// - `(n-1)x + (n^2-9n+26)/2 x^2 + (3n-15)x^3 + 3x^4`
/// - `(n-1)x + (n^2-9n+26)/2 x^2 + (2n-9)x^3 + (n-4)x^4 + x^5`
pub fn leaf_extended_dprime_polys(n: usize) -> Result<[WienerPoly; 3]> {
    if n < 7 {
        return Err(Error::BadParam("variants need n >= 7".into()));
    }
    let big = |v: i64| BigInt::from(v);
    let nn = n as i64;
    let first = WienerPoly::from_coeffs(
        vec![
            big(0),
            big(nn - 1),
            big((nn * nn - 9 * nn + 28) / 2),
            big(3 * nn - 15),
            big(2),
        ],
        false,
    );
    let second = WienerPoly::from_coeffs(
        vec![
            big(0),
            big(nn - 1),
            big((nn * nn - 9 * nn + 26) / 2),
            big(3 * nn - 15),
            big(3),
        ],
        false,
    );
    let third = WienerPoly::from_coeffs(
        vec![
            big(0),
            big(nn - 1),
            big((nn * nn - 9 * nn + 26) / 2),
            big(2 * nn - 9),
            big(nn - 4),
            big(1),
        ],
        false,
    );
    Ok([first, second, third])
}

// ---------------------------------------------------------------------
// The all-real-root caterpillar
// ---------------------------------------------------------------------

/// Parameters of the all-real-root caterpillar: diameter `D >= 3`, an
/// integer base `t > 4D^2`, and a scale `m >= 1` fixing the order
/// `n = m * t^{(D-1)(D-2)/2}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RealRootCaterpillarSpec {
    pub diameter: usize,
    pub base: u64,
    pub scale: u64,
}

/// Spine of `D - 1` vertices where spine vertex `i` (1-based) carries
/// `n / t^{i(i-1)/2}` pendant leaves; every multiplicity is an exact
/// integer by the choice of `n`.
pub fn make_real_root_caterpillar(spec: &RealRootCaterpillarSpec) -> Result<WeightedCaterpillar> {
    let d = spec.diameter;
    if d < 3 {
        return Err(Error::BadParam("caterpillar needs diameter >= 3".into()));
    }
    if spec.scale < 1 {
        return Err(Error::BadParam("scale must be >= 1".into()));
    }
    let limit = (4 * d * d) as u64;
    if spec.base <= limit {
        return Err(Error::BadParam(format!(
            "base t = {} must exceed 4D^2 = {limit}",
            spec.base
        )));
    }
    let t = BigInt::from(spec.base);
    let n = BigInt::from(spec.scale) * t.pow(((d - 1) * (d - 2) / 2) as u32);
    let mults: Vec<BigInt> = (1..d)
        .map(|i| &n / t.pow((i * (i - 1) / 2) as u32))
        .collect();
    WeightedCaterpillar::new(mults)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::WienerPoly;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&c| c.into()).collect()
    }

    #[test]
    fn broom_examples() {
        // (k, n) = (2, 3): reduced 5 + 7x + 3x^2
        let p = broom_reduced_poly(2, 3).unwrap();
        assert_eq!(p.coeffs(), &ints(&[5, 7, 3])[..]);
        let bfs = WienerPoly::reduced_of_tree(&make_broom(2, 3).unwrap());
        assert_eq!(p, bfs);

        // (1, 2): star on 4 vertices, 3 + 3x
        let p = broom_reduced_poly(1, 2).unwrap();
        assert_eq!(p.coeffs(), &ints(&[3, 3])[..]);

        // (3, 1): P5
        let t = make_broom(3, 1).unwrap();
        assert_eq!(t.order(), 5);
        assert_eq!(t.diameter(), 4);
    }

    #[test]
    fn broom_formula_matches_bfs_grid() {
        for k in 1..=8 {
            for n in 1..=12 {
                let formula = broom_reduced_poly(k, n).unwrap();
                let bfs = WienerPoly::reduced_of_tree(&make_broom(k, n).unwrap());
                assert_eq!(formula, bfs, "broom({k}, {n})");
            }
        }
    }

    #[test]
    fn spider_examples() {
        // a = (1,1), k = 1 is P5 with distribution (4, 3, 2, 1)
        let t = make_spider_star(&[1, 1], 1).unwrap();
        let dd = t.distance_distribution();
        assert_eq!(dd.counts(), &ints(&[4, 3, 2, 1])[..]);
        let closed = spider_distribution(&ints(&[1, 1]), 1).unwrap();
        assert_eq!(closed, dd);

        // a = (2,3), k = 1: d_4 = 2 * 3 = 6
        let closed = spider_distribution(&ints(&[2, 3]), 1).unwrap();
        assert_eq!(closed.count_at(4), 6.into());
        let bfs = make_spider_star(&[2, 3], 1).unwrap().distance_distribution();
        assert_eq!(closed, bfs);

        // a = (1,1,1), k = 2: diameter 6
        assert_eq!(make_spider_star(&[1, 1, 1], 2).unwrap().diameter(), 6);
    }

    #[test]
    fn spider_closed_form_matches_bfs() {
        let cases: &[(&[usize], usize)] =
            &[(&[1, 2, 3], 2), (&[5, 1, 2, 7], 3), (&[4, 4], 2), (&[2, 2, 2], 1)];
        for &(a, k) in cases {
            let big: Vec<BigInt> = a.iter().map(|&x| BigInt::from(x)).collect();
            let closed = spider_distribution(&big, k).unwrap();
            let bfs = make_spider_star(a, k).unwrap().distance_distribution();
            assert_eq!(closed, bfs, "spider({a:?}, {k})");
        }
    }

    #[test]
    fn spider_ratio_examples() {
        let half = BigRational::new(1.into(), 2.into());
        assert_eq!(spider_ratio(&ints(&[1, 1, 1])).unwrap(), half);
        assert_eq!(
            spider_ratio(&ints(&[1, 2])).unwrap(),
            BigRational::new(5.into(), 4.into())
        );
        // scale invariance
        assert_eq!(
            spider_ratio(&ints(&[7, 7, 7, 7])).unwrap(),
            BigRational::new(1.into(), 3.into())
        );
    }

    #[test]
    fn normalized_m_is_monic_and_matches_p5() {
        // a = (1,1), k = 1: reduced P5 = 4 + 3x + 2x^2 + x^3, d_4 = 1
        let m = normalized_m(&ints(&[1, 1]), 1).unwrap();
        let want: Vec<BigRational> = [4, 3, 2, 1]
            .iter()
            .map(|&c| BigRational::from_integer(c.into()))
            .collect();
        assert_eq!(m, want);
        assert!(m.last().unwrap().is_one());
    }

    #[test]
    fn limit_polynomial_examples() {
        let lp = limit_polynomial(&ints(&[1, 1, 1]), 1).unwrap();
        assert_eq!(lp.len(), 4);
        assert_eq!(lp[1], BigRational::new(1.into(), 2.into()));
        assert!(lp[3].is_one());
        assert!(lp[0].is_zero() && lp[2].is_zero());
    }

    #[test]
    fn extremal_trees_match_their_closed_forms() {
        let t10 = make_tn(10).unwrap();
        assert_eq!(
            t10.distance_distribution().counts(),
            &ints(&[9, 10, 10, 9, 6, 1])[..]
        );
        assert_eq!(
            WienerPoly::reduced_of_tree(&t10),
            closed_form_reduced(ClosedFormKind::Tn, 10).unwrap()
        );

        let t10pp = make_tn_dprime(10).unwrap();
        assert_eq!(
            WienerPoly::reduced_of_tree(&t10pp).coeffs(),
            &ints(&[9, 23, 12, 1])[..]
        );
        assert_eq!(t10pp.diameter(), 4);

        let t12p = make_tn_prime(12).unwrap();
        assert_eq!(
            WienerPoly::reduced_of_tree(&t12p).coeffs(),
            &ints(&[11, 15, 15, 15, 9, 1])[..]
        );
        assert_eq!(t12p.diameter(), 6);

        // closed form at n = 31
        let p = closed_form_reduced(ClosedFormKind::Tn, 31).unwrap();
        assert_eq!(p.coeffs(), &ints(&[30, 283, 52, 51, 48, 1])[..]);
        let p = closed_form_reduced(ClosedFormKind::TnDoublePrime, 6).unwrap();
        assert_eq!(p.coeffs(), &ints(&[5, 5, 4, 1])[..]);
    }

    #[test]
    fn closed_form_coefficient_sums_are_pair_counts() {
        for n in [9usize, 17, 40] {
            let p = closed_form_reduced(ClosedFormKind::Tn, n).unwrap();
            let total: BigInt = p.coeffs().iter().sum();
            assert_eq!(total, BigInt::from(n * (n - 1) / 2));
        }
    }

    #[test]
    fn leaf_extended_variants_match_displayed_polys() {
        for n in 7..=20 {
            let trees = leaf_extended_dprime_trees(n).unwrap();
            let polys = leaf_extended_dprime_polys(n).unwrap();
            for (t, p) in trees.iter().zip(polys.iter()) {
                assert_eq!(&WienerPoly::of_tree(t), p, "variant at n={n}");
            }
        }
    }

    #[test]
    fn variant_polys_at_n8() {
        let polys = leaf_extended_dprime_polys(8).unwrap();
        assert_eq!(polys[0].coeffs(), &ints(&[0, 7, 10, 9, 2])[..]);
        assert_eq!(polys[1].coeffs(), &ints(&[0, 7, 9, 9, 3])[..]);
        assert_eq!(polys[2].coeffs(), &ints(&[0, 7, 9, 7, 4, 1])[..]);
    }

    #[test]
    fn caterpillar_construction() {
        let spec = RealRootCaterpillarSpec {
            diameter: 3,
            base: 37,
            scale: 1,
        };
        let cat = make_real_root_caterpillar(&spec).unwrap();
        assert_eq!(cat.multiplicities(), &ints(&[37, 1])[..]);
        assert_eq!(cat.order(), 40.into());

        let spec = RealRootCaterpillarSpec {
            diameter: 4,
            base: 65,
            scale: 1,
        };
        let cat = make_real_root_caterpillar(&spec).unwrap();
        assert_eq!(cat.multiplicities(), &ints(&[274_625, 4_225, 1])[..]);
        assert_eq!(cat.order(), 278_854.into());

        // boundary: t must strictly exceed 4 D^2
        let bad = RealRootCaterpillarSpec {
            diameter: 4,
            base: 64,
            scale: 1,
        };
        assert!(make_real_root_caterpillar(&bad).is_err());
    }

    #[test]
    fn caterpillar_diameter_matches_spec_for_small_surrogates() {
        // Small surrogate bases violate t > 4D^2, so build the shape
        // directly: multiplicities n / t^{i(i-1)/2} with t = 2, D = 5.
        let n = BigInt::from(2).pow(6); // t^{(D-1)(D-2)/2}
        let mults: Vec<BigInt> = (1..5u32)
            .map(|i| &n / BigInt::from(2).pow(i * (i - 1) / 2))
            .collect();
        let cat = WeightedCaterpillar::new(mults).unwrap();
        let tree = cat.expand().unwrap();
        assert_eq!(tree.diameter(), 5);
        assert_eq!(
            cat.distance_distribution().unwrap(),
            tree.distance_distribution()
        );
    }
}
