//! Constructive density searches: given a real or complex target, produce
//! an explicit tree family member with a Wiener root within `eps`.
//!
//! Real targets in `(-1, 0)` are reached through brooms: the reduced
//! broom polynomial is quadratic in the leaf count `n`, so solving it for
//! real `n` pins the integer grid to scan. Complex targets are reached
//! through spider-stars, whose normalized polynomials converge to
//! `x^{2k+1} + R(a) x`; picking `k` to match the target's argument and
//! `R(a)` to match `|target|^{2k}` puts a limit root on the target, and
//! scaling `a` by `c = 1, 2, 4, ...` drags an actual root onto it.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};

use crate::error::{Error, Result};
use crate::families::{
    broom_reduced_poly, limit_polynomial, normalized_m, spider_ratio, spider_reduced_poly,
    FamilySpec,
};
use crate::poly::WienerPoly;
use crate::roots::{find_roots_default, RootReport};

/// Residual bound a hit's certificate must satisfy.
pub const HIT_RESIDUAL_BOUND: f64 = 1e-8;

/// The pieces of the closed-form broom root location `n(x, k)`:
/// the reduced broom polynomial in the leaf count `n` is
/// `(x/2) n^2 + R n + S`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BroomRootParts {
    /// `R = 1 + x/2 + x^2 + ... + x^k`
    pub r: f64,
    /// `S = k + (k-1)x + ... + x^{k-1}`
    pub s: f64,
    /// `n(x,k) = (-R - sqrt(R^2 - 2xS)) / x`
    pub n_value: f64,
}

/// A certified density hit: a family member with a root within `error`
/// of the target.
#[derive(Debug, Clone)]
pub struct DensityHit {
    pub family: FamilySpec,
    pub achieved_root: Complex64,
    pub target: Complex64,
    pub error: f64,
    pub residual: f64,
    pub certificate: RootReport,
    /// Root-solver invocations spent by the search.
    pub evaluations: usize,
}

/// Evaluates the closed-form real leaf count at which the broom with `k`
/// path edges has `x` as a Wiener root. Requires `x` in `(-1, 0)`.
pub fn n_of_x_k(x: f64, k: usize) -> Result<BroomRootParts> {
    if !(-1.0..0.0).contains(&x) || x == 0.0 {
        return Err(Error::DomainError(format!("x = {x} outside (-1, 0)")));
    }
    if k < 1 {
        return Err(Error::BadParam("k must be >= 1".into()));
    }
    let mut r = 1.0 + x / 2.0;
    let mut xp = x * x;
    for _ in 2..=k {
        r += xp;
        xp *= x;
    }
    let mut s = 0.0;
    let mut xp = 1.0;
    for j in 0..k {
        s += (k - j) as f64 * xp;
        xp *= x;
    }
    let disc = r * r - 2.0 * x * s;
    let n_value = (-r - disc.sqrt()) / x;
    Ok(BroomRootParts { r, s, n_value })
}

fn broom_hit(
    k: usize,
    n: usize,
    target: Complex64,
    eps: f64,
    evaluations: usize,
) -> Option<DensityHit> {
    let poly = broom_reduced_poly(k, n).ok()?;
    let report = find_roots_default(&poly).ok()?;
    let (idx, root) = report
        .roots
        .iter()
        .enumerate()
        .min_by(|(_, a), (_, b)| {
            (*a - target)
                .norm()
                .partial_cmp(&(*b - target).norm())
                .unwrap()
        })
        .map(|(i, z)| (i, *z))?;
    let error = (root - target).norm();
    if error < eps && report.residuals[idx] <= HIT_RESIDUAL_BOUND {
        Some(DensityHit {
            family: FamilySpec::Broom {
                path_edges: k,
                leaves: n,
            },
            achieved_root: root,
            target,
            error,
            residual: report.residuals[idx],
            certificate: report,
            evaluations,
        })
    } else {
        None
    }
}

/// Finds a tree with a real Wiener root within `eps` of `target <= 0`.
///
/// For targets in `(-1, 0)` the search walks `k` upward, scanning integer
/// leaf counts around `n(target, k)`; the root spacing argument behind
/// the construction guarantees success once `k` is large enough. For
/// `target <= -1` (and exactly 0) the search degrades to a budgeted broom
/// grid scan pruned by the Eneström–Kakeya annulus, which is best-effort.
pub fn find_real_root_tree(target: f64, eps: f64, budget: usize) -> Result<DensityHit> {
    if eps <= 0.0 {
        return Err(Error::BadParam("eps must be positive".into()));
    }
    if target > 0.0 {
        return Err(Error::DomainError(
            "real Wiener roots of trees are negative".into(),
        ));
    }
    let ctarget = Complex64::new(target, 0.0);
    let mut evals = 0usize;

    if target == 0.0 {
        // Stars: broom(1, n) has the single root -2/n.
        let n = (2.0 / eps).ceil() as usize + 1;
        evals += 1;
        return broom_hit(1, n, ctarget, eps, evals)
            .ok_or_else(|| Error::BudgetExhausted("star root did not certify".into()));
    }

    if target > -1.0 {
        for k in 1.. {
            let parts = n_of_x_k(target, k)?;
            let center = parts.n_value;
            if center.is_finite() && center >= 1.0 {
                let lo = (center as usize).saturating_sub(3).max(1);
                for n in lo..lo + 8 {
                    evals += 1;
                    if evals > budget {
                        return Err(Error::BudgetExhausted(format!(
                            "no broom root within {eps} of {target} after {budget} evaluations"
                        )));
                    }
                    if let Some(hit) = broom_hit(k, n, ctarget, eps, evals) {
                        return Ok(hit);
                    }
                }
            }
        }
    }

    // target <= -1: budgeted grid with annulus pruning.
    let mut best: Option<(f64, String)> = None;
    for total in 2.. {
        for k in 1..total {
            let n = total - k;
            let poly = broom_reduced_poly(k, n)?;
            if let Ok(annulus) = crate::exact::enestrom_kakeya(&poly) {
                let inner = annulus.inner.to_f64().unwrap_or(0.0);
                let outer = annulus.outer.to_f64().unwrap_or(f64::INFINITY);
                if -target < inner - eps || -target > outer + eps {
                    continue;
                }
            }
            evals += 1;
            if evals > budget {
                let seen = best
                    .map(|(e, d)| format!("; best so far {d} at distance {e:.3e}"))
                    .unwrap_or_default();
                return Err(Error::BudgetExhausted(format!(
                    "no broom root within {eps} of {target} after {budget} evaluations{seen}"
                )));
            }
            if let Some(hit) = broom_hit(k, n, ctarget, eps, evals) {
                return Ok(hit);
            }
            if let Ok(report) = find_roots_default(&poly) {
                for z in &report.roots {
                    let err = (z - ctarget).norm();
                    if best.as_ref().is_none_or(|(e, _)| err < *e) {
                        best = Some((err, format!("broom(k={k}, n={n}) root {z}")));
                    }
                }
            }
        }
    }
    unreachable!("loop exits through budget or hit");
}

/// Finds a tree with a complex Wiener root within `eps` of `target`.
///
/// Chooses the arm length `k` so that a root angle `(2j+1)pi/(2k)` of
/// `x^{2k} = -R` lands within `eps/(2|target|)` of `arg target`, realizes
/// `R* = |target|^{2k}` with an integer sequence `a = (1,..,1,M)`, then
/// doubles the scale `c` until an actual root of the spider-star
/// certifies within `eps`.
pub fn find_complex_root_tree(target: Complex64, eps: f64, budget: usize) -> Result<DensityHit> {
    if target.norm() == 0.0 {
        return Err(Error::TargetZero);
    }
    if eps <= 0.0 {
        return Err(Error::BadParam("eps must be positive".into()));
    }
    if target.im == 0.0 && target.re < 0.0 {
        // The root angles (2j+1)pi/(2k) straddle pi but never land on it,
        // so exact negative-real targets would need an enormous arm count;
        // brooms reach them directly and the two paths agree within eps.
        return find_real_root_tree(target.re, eps, budget);
    }
    let theta = target.arg();
    let modulus = target.norm();
    let angle_tol = eps / (2.0 * modulus);
    let mut evals = 0usize;
    let mut best: Option<(f64, String)> = None;

    for k in 1..=512usize {
        // Nearest odd multiple of pi / (2k) to theta.
        let grid = std::f64::consts::PI / (2 * k) as f64;
        let j = ((theta / grid - 1.0) / 2.0).round();
        let angle = (2.0 * j + 1.0) * grid;
        if (angle - theta).abs() > angle_tol {
            continue;
        }
        let ln_rstar = 2.0 * k as f64 * modulus.ln();
        if ln_rstar.abs() > 300.0 {
            return Err(Error::BudgetExhausted(format!(
                "required R* = |target|^{} overflows the representable range (ln R* = {ln_rstar:.1})",
                2 * k
            )));
        }
        let rstar = ln_rstar.exp();
        let Some((p, m)) = best_ones_and_m(rstar) else {
            continue;
        };

        let mut c: u64 = 1;
        while c <= 1 << 20 {
            let mut a: Vec<BigInt> = vec![BigInt::from(c); p];
            a.push(BigInt::from(c) * BigInt::from(m));
            let Ok(poly) = spider_reduced_poly(&a, k) else {
                break;
            };
            evals += 1;
            if evals > budget {
                let seen = best
                    .map(|(e, d)| format!("; best so far {d} at distance {e:.3e}"))
                    .unwrap_or_default();
                return Err(Error::BudgetExhausted(format!(
                    "no spider root within {eps} of {target} after {budget} evaluations{seen}"
                )));
            }
            if let Ok(report) = find_roots_default(&poly) {
                if let Some((idx, root)) = report
                    .roots
                    .iter()
                    .enumerate()
                    .min_by(|(_, x), (_, y)| {
                        (*x - target)
                            .norm()
                            .partial_cmp(&(*y - target).norm())
                            .unwrap()
                    })
                    .map(|(i, z)| (i, *z))
                {
                    let error = (root - target).norm();
                    if error < eps && report.residuals[idx] <= HIT_RESIDUAL_BOUND {
                        return Ok(DensityHit {
                            family: FamilySpec::SpiderStar {
                                arm_leaves: a,
                                arm_edges: k,
                            },
                            achieved_root: root,
                            target,
                            error,
                            residual: report.residuals[idx],
                            certificate: report,
                            evaluations: evals,
                        });
                    }
                    if best.as_ref().is_none_or(|(e, _)| error < *e) {
                        best = Some((
                            error,
                            format!("spider(p={p}, M={m}, c={c}, k={k}) root {root}"),
                        ));
                    }
                }
            }
            c *= 2;
        }
    }
    let seen = best
        .map(|(e, d)| format!("; best so far {d} at distance {e:.3e}"))
        .unwrap_or_default();
    Err(Error::BudgetExhausted(format!(
        "no arm length k <= 512 matches the argument of {target} within {eps}{seen}"
    )))
}

/// Picks `(p, M)` so that `a = (1^p, M)` has `R(a)` as close as possible
/// to `rstar`, where `R((1^p, M)) = (p + M^2) / (p(p-1) + 2pM)`.
/// `R(p, 1) = 1/p` covers small targets; for fixed `p` the ratio climbs
/// in steps of at most `1/(2p)` as `M` grows.
fn best_ones_and_m(rstar: f64) -> Option<(usize, u64)> {
    if rstar <= 0.0 {
        return None;
    }
    // A tiny ratio needs ~1/rstar equal arms; past this the tree order
    // would not even be representable, so report no candidate.
    if 1.0 / rstar > 1e15 {
        return None;
    }
    let p_base = if rstar < 0.5 {
        ((1.0 / rstar).ceil() as usize).max(2)
    } else {
        2
    };
    let mut best: Option<(f64, usize, u64)> = None;
    for p in p_base..p_base + 40 {
        let pf = p as f64;
        let mut candidates: Vec<u64> = vec![1];
        let disc = (pf * rstar).powi(2) - pf + pf * (pf - 1.0) * rstar;
        if disc >= 0.0 {
            let m0 = pf * rstar + disc.sqrt();
            if m0.is_finite() && m0 < 1e18 {
                for delta in -1i64..=2 {
                    let m = m0.floor() as i64 + delta;
                    if m >= 1 {
                        candidates.push(m as u64);
                    }
                }
            }
        }
        for m in candidates {
            let mf = m as f64;
            let ratio = (pf + mf * mf) / (pf * (pf - 1.0) + 2.0 * pf * mf);
            let err = (ratio - rstar).abs() / rstar;
            if best.is_none_or(|(e, _, _)| err < e) {
                best = Some((err, p, m));
            }
        }
    }
    best.map(|(_, p, m)| (p, m))
}

/// Max-norm distance between the normalized polynomial of the scaled
/// spider `c * a` and the limit polynomial `x^{2k+1} + R(a) x`, exact.
pub fn coefficient_distance(a: &[BigInt], k: usize, c: u64) -> Result<BigRational> {
    let scaled: Vec<BigInt> = a.iter().map(|ai| ai * BigInt::from(c)).collect();
    let m = normalized_m(&scaled, k)?;
    let limit = limit_polynomial(a, k)?;
    Ok(m.iter()
        .zip(limit.iter())
        .map(|(x, y)| (x - y).abs())
        .max()
        .expect("nonempty coefficient vectors"))
}

/// Sanity check used by reports: `R(ca) = R(a)` for every scale.
pub fn ratio_is_scale_invariant(a: &[BigInt], c: u64) -> Result<bool> {
    let scaled: Vec<BigInt> = a.iter().map(|ai| ai * BigInt::from(c)).collect();
    Ok(spider_ratio(a)? == spider_ratio(&scaled)?)
}

/// Re-validates a hit: relative residual of the achieved root against the
/// regenerated polynomial. Used by reports and tests.
pub fn revalidate_hit(hit: &DensityHit) -> Result<f64> {
    let poly: WienerPoly = match &hit.family {
        FamilySpec::Broom { path_edges, leaves } => broom_reduced_poly(*path_edges, *leaves)?,
        FamilySpec::SpiderStar {
            arm_leaves,
            arm_edges,
        } => spider_reduced_poly(arm_leaves, *arm_edges)?,
        other => {
            return Err(Error::BadParam(format!(
                "hit family {other} is not produced by the density search"
            )))
        }
    };
    let z = hit.achieved_root;
    let value = poly.evaluate_complex(z);
    let scale: f64 = poly
        .coeffs()
        .iter()
        .enumerate()
        .map(|(i, c)| c.to_f64().map(f64::abs).unwrap_or(f64::INFINITY) * z.norm().powi(i as i32))
        .sum();
    Ok(value.norm() / scale.max(f64::MIN_POSITIVE))
}
