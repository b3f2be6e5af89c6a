//! The acceptance runner: every workbench claim as a numbered criterion
//! with its tolerance pinned in code. `fast` caps the exhaustive censuses
//! at order 12; `full` runs everything.

use std::time::Instant;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::census::{
    all_real_census, double_root_census, max_imaginary_census, max_modulus_census,
    ratio_bound_check, ExecConfig,
};
use crate::density::{
    coefficient_distance, find_complex_root_tree, find_real_root_tree, HIT_RESIDUAL_BOUND,
};
use crate::enumerate::{enumerate_trees, random_tree};
use crate::error::Result;
use crate::exact::{self, RatBound};
use crate::families::{
    broom_reduced_poly, closed_form_reduced, make_broom, make_real_root_caterpillar, make_tilde_tn,
    make_tn, make_tn_dprime, make_tn_prime, ClosedFormKind, RealRootCaterpillarSpec,
};
use crate::poly::{resilience_mc, WienerPoly};
use crate::roots::find_roots_default;
use crate::tree::Tree;

/// Verification depth.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Level {
    /// Censuses capped at order 12; order-16 censuses skipped.
    Fast,
    /// Everything at the stated scales.
    Full,
}

/// Outcome of one acceptance criterion.
#[derive(Debug, Clone)]
pub struct CriterionResult {
    pub id: usize,
    pub name: &'static str,
    pub passed: bool,
    pub details: String,
    pub millis: u128,
}

pub const CRITERION_COUNT: usize = 15;

/// Runs a single criterion (1-based id).
pub fn run_criterion(id: usize, level: Level, jobs: usize) -> Result<CriterionResult> {
    let started = Instant::now();
    let (name, outcome) = match id {
        1 => ("closed-form agreement", criterion_closed_forms()),
        2 => ("T_n sign brackets", criterion_tn_brackets()),
        3 => ("T_n' sign brackets", criterion_tn_prime_brackets()),
        4 => ("T_n'' real roots and modulus bound", criterion_tn_dprime()),
        5 => ("desk-scale maximum-modulus separation", criterion_separation()),
        6 => ("max-modulus census", criterion_max_modulus(level, jobs)),
        7 => ("max-imaginary census", criterion_max_imaginary(level, jobs)),
        8 => ("double-root census", criterion_double_root(level, jobs)),
        9 => ("all-real minima", criterion_all_real(jobs)),
        10 => ("all-real caterpillar construction", criterion_caterpillar()),
        11 => ("coefficient-ratio bounds", criterion_ratio_bounds(jobs)),
        12 => ("density searches", criterion_density()),
        13 => ("normalized-polynomial convergence", criterion_convergence()),
        14 => ("annulus containment", criterion_annulus(level)),
        15 => ("resilience Monte Carlo", criterion_resilience()),
        _ => {
            return Err(crate::error::Error::BadParam(format!(
                "criterion id {id} outside 1..={CRITERION_COUNT}"
            )))
        }
    };
    let (passed, details) = outcome?;
    Ok(CriterionResult {
        id,
        name,
        passed,
        details,
        millis: started.elapsed().as_millis(),
    })
}

/// Runs all criteria, returning one result per criterion.
pub fn run_all(level: Level, jobs: usize) -> Result<Vec<CriterionResult>> {
    (1..=CRITERION_COUNT)
        .map(|id| run_criterion(id, level, jobs))
        .collect()
}

type Outcome = Result<(bool, String)>;

// ---------------------------------------------------------------------
// 1. Closed-form agreement
// ---------------------------------------------------------------------

fn criterion_closed_forms() -> Outcome {
    let started = Instant::now();
    let mut checked = 0usize;
    let mut failures = Vec::new();
    let mut check = |name: String, tree: Tree, closed: WienerPoly| {
        checked += 1;
        let bfs = WienerPoly::reduced_of_tree(&tree);
        if bfs != closed {
            failures.push(name);
        }
    };
    for n in 9..=200 {
        check(
            format!("T_{n}"),
            make_tn(n)?,
            closed_form_reduced(ClosedFormKind::Tn, n)?,
        );
    }
    for n in 10..=200 {
        check(
            format!("T_{n}'"),
            make_tn_prime(n)?,
            closed_form_reduced(ClosedFormKind::TnPrime, n)?,
        );
    }
    for n in 6..=200 {
        check(
            format!("T_{n}''"),
            make_tn_dprime(n)?,
            closed_form_reduced(ClosedFormKind::TnDoublePrime, n)?,
        );
    }
    for k in 1..=8 {
        for n in 1..=30 {
            check(
                format!("broom({k},{n})"),
                make_broom(k, n)?,
                broom_reduced_poly(k, n)?,
            );
        }
    }
    if let Some(overrun) = within_budget(started, 10, "closed-form sweep") {
        return Ok((false, overrun));
    }
    let pass = failures.is_empty();
    Ok((
        pass,
        format!("{checked} generated trees against closed forms; mismatches: {failures:?}"),
    ))
}

/// Stated runtime budgets are part of the criteria; generous but checked.
fn within_budget(started: Instant, budget_secs: u64, what: &str) -> Option<String> {
    let elapsed = started.elapsed();
    if elapsed.as_secs() >= budget_secs {
        Some(format!(
            "{what} took {:.1}s, budget {budget_secs}s",
            elapsed.as_secs_f64()
        ))
    } else {
        None
    }
}

// ---------------------------------------------------------------------
// 2-3. Exact sign brackets
// ---------------------------------------------------------------------

fn criterion_tn_brackets() -> Outcome {
    let mut ok = true;
    let mut details = String::new();
    for n in 10..=200usize {
        let nn = n as i64;
        let p = closed_form_reduced(ClosedFormKind::Tn, n)?;
        let outer = p.evaluate_int(&BigInt::from(-(2 * nn - 16)));
        let inner = p.evaluate_int(&BigInt::from(-(2 * nn - 15)));
        if !outer.is_positive() || !inner.is_negative() {
            ok = false;
            details = format!("sign failure at n = {n}: {outer}, {inner}");
            break;
        }
        if n == 10 {
            // displayed values, and the displayed quartic/cubic at n = 10
            // (the cubic has half-integer coefficients; check 2x the value)
            let quartic = 16 * nn.pow(4) - 545 * nn.pow(3) + 6959 * nn.pow(2) - 39485 * nn + 84015;
            let cubic_x2 = -50 * nn.pow(3) + 1165 * nn.pow(2) - 9063 * nn + 2 * 11774;
            if outer != BigInt::from(65)
                || inner != BigInt::from(-291)
                || quartic != 65
                || cubic_x2 != -2 * 291
            {
                ok = false;
                details = format!(
                    "n=10 displayed values mismatch: {outer}, {inner}, {quartic}, {cubic_x2}"
                );
                break;
            }
        }
    }
    if ok {
        details =
            "W_n(-(2n-16)) > 0 and W_n(-(2n-15)) < 0 for 10 <= n <= 200; n=10 values 65 / -291"
                .into();
    }
    Ok((ok, details))
}

fn criterion_tn_prime_brackets() -> Outcome {
    let mut ok = true;
    let mut details = String::new();
    for n in 13..=200usize {
        let nn = n as i64;
        let p = closed_form_reduced(ClosedFormKind::TnPrime, n)?;
        let hi = p.evaluate_int(&BigInt::from(-(2 * nn - 17)));
        let lo = p.evaluate_int(&BigInt::from(-(2 * nn - 16)));
        if !hi.is_positive() || !lo.is_negative() {
            ok = false;
            details = format!("sign failure at n = {n}: {hi}, {lo}");
            break;
        }
    }
    if ok {
        details = "W'_n(-(2n-17)) > 0 and W'_n(-(2n-16)) < 0 for 13 <= n <= 200".into();
    }
    Ok((ok, details))
}

// ---------------------------------------------------------------------
// 4. T_n'' all-real with modulus bound
// ---------------------------------------------------------------------

fn criterion_tn_dprime() -> Outcome {
    let mut worst_margin = f64::INFINITY;
    for n in 10..=200usize {
        let p = closed_form_reduced(ClosedFormKind::TnDoublePrime, n)?;
        let cert = exact::sturm_real_root_count(&p, RatBound::NegInf, RatBound::finite(0, 1))?;
        if cert.real_root_count != 3 || cert.squarefree_part_degree != 3 {
            return Ok((
                false,
                format!(
                    "n = {n}: Sturm count {} on squarefree degree {}",
                    cert.real_root_count, cert.squarefree_part_degree
                ),
            ));
        }
        let report = find_roots_default(&p)?;
        let bound = (1.0 + std::f64::consts::FRAC_1_SQRT_2) * n as f64 - 7.0 + 1e-6;
        let margin = bound - report.max_modulus.norm();
        if margin < 0.0 {
            return Ok((
                false,
                format!(
                    "n = {n}: max modulus {} above bound {bound}",
                    report.max_modulus.norm()
                ),
            ));
        }
        worst_margin = worst_margin.min(margin);
    }
    Ok((
        true,
        format!(
            "3 distinct negative roots for 10 <= n <= 200; worst bound margin {worst_margin:.4}"
        ),
    ))
}

// ---------------------------------------------------------------------
// 5. Desk-scale separation for n in 31..=100
// ---------------------------------------------------------------------

fn criterion_separation() -> Outcome {
    for n in 31..=100usize {
        let nn = n as i64;
        let threshold = (2 * nn - 16) as f64;
        let tn = closed_form_reduced(ClosedFormKind::Tn, n)?;
        // Exact: the bracketed root lies left of -(2n-16).
        let lo = BigRational::from_integer(BigInt::from(-(2 * nn - 15)));
        let hi = BigRational::from_integer(BigInt::from(-(2 * nn - 16)));
        let bracket = exact::bracket_real_root(&tn, &lo, &hi)?;
        if bracket.1 > hi {
            return Ok((
                false,
                format!("n = {n}: bracket escaped ({}, {})", bracket.0, bracket.1),
            ));
        }
        for (name, kind) in [
            ("T'", ClosedFormKind::TnPrime),
            ("T''", ClosedFormKind::TnDoublePrime),
        ] {
            let p = closed_form_reduced(kind, n)?;
            let max_mod = find_roots_default(&p)?.max_modulus.norm();
            if max_mod > threshold * (1.0 + 1e-6) {
                return Ok((
                    false,
                    format!("n = {n}: {name} max modulus {max_mod} exceeds {threshold}"),
                ));
            }
        }
    }
    Ok((
        true,
        "for 31 <= n <= 100: T_n root certified beyond 2n-16; T'_n, T''_n at or below".into(),
    ))
}

// ---------------------------------------------------------------------
// 6-8. Censuses
// ---------------------------------------------------------------------

fn criterion_max_modulus(level: Level, jobs: usize) -> Outcome {
    let started = Instant::now();
    let hi = match level {
        Level::Fast => 12,
        Level::Full => 16,
    };
    let cfg = ExecConfig::with_jobs(jobs);
    let mut lines = Vec::new();
    for n in 10..=hi {
        let record = max_modulus_census(n, &cfg)?;
        let expect = String::from_utf8(make_tn_dprime(n)?.canonical_code()).unwrap();
        if record.extremal_code != expect {
            return Ok((
                false,
                format!(
                    "order {n}: extremal tree is not T''_n (value {})",
                    record.extremal_value
                ),
            ));
        }
        lines.push(format!(
            "n={n}: {:.6} in {} ms",
            record.extremal_value, record.wall_ms
        ));
    }
    if let Some(overrun) = within_budget(started, 120, "max-modulus censuses") {
        return Ok((false, overrun));
    }
    let note = if level == Level::Fast {
        " (fast level: orders 13..=16 skipped)"
    } else {
        ""
    };
    Ok((
        true,
        format!(
            "extremal tree is T''_n for every order{note}; {}",
            lines.join("; ")
        ),
    ))
}

fn criterion_max_imaginary(level: Level, jobs: usize) -> Outcome {
    let started = Instant::now();
    let hi = match level {
        Level::Fast => 12,
        Level::Full => 14,
    };
    let cfg = ExecConfig::with_jobs(jobs);
    let mut last = String::new();
    for n in 9..=hi {
        let record = max_imaginary_census(n, &cfg)?;
        let expect = String::from_utf8(make_tilde_tn(n)?.canonical_code()).unwrap();
        if record.extremal_code != expect {
            return Ok((
                false,
                format!("order {n}: extremal tree is not the center-cluster path tree"),
            ));
        }
        last = format!("n={n}: max Im {:.6}", record.extremal_value);
    }
    // loose sanity: the extremal root's real part stays near -1/2
    let p = WienerPoly::reduced_of_tree(&make_tilde_tn(14)?);
    let report = find_roots_default(&p)?;
    let top = report
        .roots
        .iter()
        .max_by(|a, b| a.im.partial_cmp(&b.im).unwrap())
        .unwrap();
    if (top.re + 0.5).abs() >= 0.5 {
        return Ok((false, format!("n = 14 extremal root {top} strays from -1/2")));
    }
    if let Some(overrun) = within_budget(started, 60, "max-imaginary censuses") {
        return Ok((false, overrun));
    }
    Ok((
        true,
        format!(
            "extremal tree matches for 9..={hi}; {last}; Re at n=14 = {:.4}",
            top.re
        ),
    ))
}

fn criterion_double_root(level: Level, jobs: usize) -> Outcome {
    let hi = match level {
        Level::Fast => 12,
        Level::Full => 16,
    };
    let cfg = ExecConfig::with_jobs(jobs);
    let mut nine = 0;
    let mut sixteen = None;
    for n in 3..=hi {
        let record = double_root_census(n, &cfg)?;
        if !record.repeated_other_than_minus1.is_empty() {
            return Ok((
                false,
                format!(
                    "order {n}: repeated root other than -1 at {:?}",
                    record.repeated_other_than_minus1
                ),
            ));
        }
        if n == 9 {
            nine = record.count_divisible_by_x_plus_1_squared;
        }
        if n == 16 {
            sixteen = Some(record.count_divisible_by_x_plus_1_squared);
        }
    }
    if nine != 2 {
        return Ok((
            false,
            format!("order 9: expected 2 trees divisible by (x+1)^2, got {nine}"),
        ));
    }
    match (level, sixteen) {
        (Level::Full, Some(54)) => Ok((
            true,
            "order 9: 2 trees; order 16: 54 trees; no repeated root != -1 up to order 16".into(),
        )),
        (Level::Full, Some(count)) => Ok((
            false,
            format!("order 16: expected 54 trees divisible by (x+1)^2, got {count}"),
        )),
        (Level::Full, None) => unreachable!("full level scans through 16"),
        (Level::Fast, _) => Ok((
            true,
            "order 9: 2 trees; no repeated root != -1 up to order 12 (fast level: orders 13..=16 skipped)"
                .into(),
        )),
    }
}

// ---------------------------------------------------------------------
// 9. All-real minima
// ---------------------------------------------------------------------

fn criterion_all_real(jobs: usize) -> Outcome {
    let cfg = ExecConfig::with_jobs(jobs);
    let expected = [(2usize, 3usize), (3, 7), (4, 10), (5, 15)];
    let mut measured = Vec::new();
    let mut pass = true;
    for (diameter, want) in expected {
        let record = all_real_census(diameter, &cfg)?;
        measured.push(format!(
            "D={diameter}: order {} (coeffs {:?})",
            record.order, record.witness_reduced_coeffs
        ));
        if record.order != want {
            pass = false;
        }
    }
    Ok((
        pass,
        format!(
            "expected orders 3, 7, 10, 15; census found: {}",
            measured.join("; ")
        ),
    ))
}

// ---------------------------------------------------------------------
// 10. The all-real caterpillar construction
// ---------------------------------------------------------------------

/// Kurtz gaps with base escalation: doubles `t` until the gap condition
/// holds, returning the base used, the polynomial, and whether escalation
/// was needed.
pub fn caterpillar_kurtz_probe(
    diameter: usize,
    base: u64,
    scale: u64,
) -> Result<(u64, WienerPoly, bool)> {
    let mut t = base;
    loop {
        let spec = RealRootCaterpillarSpec {
            diameter,
            base: t,
            scale,
        };
        let cat = make_real_root_caterpillar(&spec)?;
        let poly = WienerPoly::reduced_from_distribution(&cat.distance_distribution()?);
        let (holds, _) = exact::kurtz_condition(&poly)?;
        if holds {
            return Ok((t, poly, t != base));
        }
        t = t.checked_mul(2).ok_or_else(|| {
            crate::error::Error::BadParam("base overflow while escalating".into())
        })?;
    }
}

fn criterion_caterpillar() -> Outcome {
    let started = Instant::now();
    let mut details = Vec::new();
    for (diameter, base, want_order) in [(3usize, 37u64, 40u128), (4, 65, 278_854)] {
        let (t_used, poly, escalated) = caterpillar_kurtz_probe(diameter, base, 1)?;
        let spec = RealRootCaterpillarSpec {
            diameter,
            base: t_used,
            scale: 1,
        };
        let cat = make_real_root_caterpillar(&spec)?;
        let order = cat.order().to_u128().unwrap();
        if t_used == base && order != want_order {
            return Ok((
                false,
                format!("D={diameter}, t={base}: order {order} differs from expected {want_order}"),
            ));
        }
        let (distinct, cert) = exact::all_roots_real_distinct(&poly)?;
        if !distinct {
            return Ok((
                false,
                format!(
                    "D={diameter}, t={t_used}: Sturm found {} real roots of degree {}",
                    cert.real_root_count,
                    poly.degree()
                ),
            ));
        }
        details.push(format!(
            "D={diameter}: t={t_used}{}, order {order}, all {} roots real and distinct",
            if escalated { " (escalated)" } else { "" },
            poly.degree()
        ));
    }
    if let Some(overrun) = within_budget(started, 30, "caterpillar certificates") {
        return Ok((false, overrun));
    }
    Ok((true, details.join("; ")))
}

// ---------------------------------------------------------------------
// 11. Ratio bounds
// ---------------------------------------------------------------------

fn criterion_ratio_bounds(jobs: usize) -> Outcome {
    let cfg = ExecConfig::with_jobs(jobs);
    for n in 3..=14 {
        let report = ratio_bound_check(n, &cfg)?;
        if !report.violations.is_empty() {
            return Ok((false, report.violations.join("; ")));
        }
    }
    // spot values of the second-to-last coefficient
    for n in 10..=100usize {
        let nn = n as i64;
        let tn = make_tn(n)?.distance_distribution();
        let tp = make_tn_prime(n)?.distance_distribution();
        if tn.count_at(5) != BigInt::from(2 * nn - 14)
            || tp.count_at(5) != BigInt::from(2 * nn - 15)
        {
            return Ok((
                false,
                format!(
                    "n = {n}: d_5(T_n) = {}, d_5(T_n') = {}",
                    tn.count_at(5),
                    tp.count_at(5)
                ),
            ));
        }
    }
    Ok((
        true,
        "no ratio violations for 3 <= n <= 14; d_5 spot values hold for 10 <= n <= 100".into(),
    ))
}

// ---------------------------------------------------------------------
// 12. Density searches
// ---------------------------------------------------------------------

fn criterion_density() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(20_240_817);
    let budget = 100_000;
    let mut max_evals = 0usize;
    for i in 0..20 {
        let target = -0.9 + 0.8 * rng.random::<f64>();
        let hit = match find_real_root_tree(target, 0.01, budget) {
            Ok(hit) => hit,
            Err(e) => return Ok((false, format!("real target {i} ({target:.4}): {e}"))),
        };
        if hit.error >= 0.01 || hit.residual > HIT_RESIDUAL_BOUND {
            return Ok((
                false,
                format!(
                    "real target {target:.4}: error {} residual {}",
                    hit.error, hit.residual
                ),
            ));
        }
        max_evals = max_evals.max(hit.evaluations);
    }
    let complex_targets = [
        Complex64::new(1.0, 1.0),
        Complex64::new(-2.0, 0.5),
        Complex64::new(0.3, -0.8),
    ];
    let mut notes = Vec::new();
    for target in complex_targets {
        let hit = match find_complex_root_tree(target, 0.05, budget) {
            Ok(hit) => hit,
            Err(e) => return Ok((false, format!("complex target {target}: {e}"))),
        };
        if hit.error >= 0.05 || hit.residual > HIT_RESIDUAL_BOUND {
            return Ok((
                false,
                format!(
                    "complex target {target}: error {} residual {}",
                    hit.error, hit.residual
                ),
            ));
        }
        notes.push(format!("{target} -> {} (err {:.4})", hit.family, hit.error));
    }
    Ok((
        true,
        format!(
            "20 real targets (max {max_evals} evaluations) and 3 complex targets hit; {}",
            notes.join("; ")
        ),
    ))
}

// ---------------------------------------------------------------------
// 13. Convergence of normalized polynomials
// ---------------------------------------------------------------------

fn criterion_convergence() -> Outcome {
    let a: Vec<BigInt> = [1, 2, 3].iter().map(|&x| BigInt::from(x)).collect();
    let k = 2;
    let mut prev: Option<BigRational> = None;
    let mut first_product: Option<BigRational> = None;
    let mut rows = Vec::new();
    for c in [1u64, 2, 4, 8, 16, 32] {
        let dist = coefficient_distance(&a, k, c)?;
        let product = &dist * BigRational::from_integer(c.into());
        rows.push(format!("c={c}: {:.6}", dist.to_f64().unwrap()));
        if let Some(p) = &prev {
            if &dist >= p {
                return Ok((false, format!("distance did not decrease at c = {c}")));
            }
        }
        let bound = first_product.get_or_insert_with(|| product.clone());
        if product > BigRational::from_integer(2.into()) * &*bound {
            return Ok((
                false,
                format!(
                    "distance * c = {} escaped the 2x bound at c = {c}",
                    product.to_f64().unwrap()
                ),
            ));
        }
        prev = Some(dist);
    }
    Ok((
        true,
        format!(
            "strictly decreasing with bounded distance*c: {}",
            rows.join(", ")
        ),
    ))
}

// ---------------------------------------------------------------------
// 14. Eneström–Kakeya containment
// ---------------------------------------------------------------------

fn criterion_annulus(level: Level) -> Outcome {
    let hi = match level {
        Level::Fast => 12,
        Level::Full => 14,
    };
    let mut polys = 0usize;
    for n in 3..=hi {
        for tree in enumerate_trees(n)? {
            let poly = WienerPoly::reduced_of_tree(&tree);
            if poly.degree() == 0 {
                continue;
            }
            let annulus = exact::enestrom_kakeya(&poly)?;
            let inner = annulus.inner.to_f64().unwrap() - 1e-9;
            let outer = annulus.outer.to_f64().unwrap() + 1e-9;
            let report = find_roots_default(&poly)?;
            polys += 1;
            for z in &report.roots {
                let m = z.norm();
                if m < inner || m > outer {
                    return Ok((
                        false,
                        format!("order {n}: root modulus {m} escapes [{inner}, {outer}]"),
                    ));
                }
            }
        }
    }
    Ok((
        true,
        format!("all roots of {polys} reduced polynomials inside their annuli"),
    ))
}

// ---------------------------------------------------------------------
// 15. Resilience Monte Carlo agreement
// ---------------------------------------------------------------------

fn criterion_resilience() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(777);
    let probs: [f64; 5] = [0.1, 0.3, 0.5, 0.7, 0.9];
    let trials = 100_000u64;
    let mut within = 0usize;
    let total = 200usize;
    for case in 0..total {
        let n = 4 + rng.random_range(0..27);
        let tree = random_tree(n, &mut rng);
        let p = probs[case % probs.len()];
        let poly = WienerPoly::of_tree(&tree);
        let exact_value = poly
            .resilience(&BigRational::new(
                BigInt::from((p * 10.0).round() as i64),
                BigInt::from(10),
            ))?
            .to_f64()
            .unwrap();
        let mc = resilience_mc(&tree, p, trials, 9000 + case as u64)?;
        if (mc.estimate - exact_value).abs() <= 4.0 * mc.stderr {
            within += 1;
        }
    }
    let fraction = within as f64 / total as f64;
    Ok((
        fraction >= 0.95,
        format!("{within}/{total} cases within 4 standard errors"),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quick_criteria_pass() {
        // The cheap exact criteria; the heavy ones run in the acceptance suite.
        for id in [2, 3] {
            let result = run_criterion(id, Level::Fast, 1).unwrap();
            assert!(result.passed, "criterion {id}: {}", result.details);
        }
    }

    #[test]
    fn criterion_ids_are_bounded() {
        assert!(run_criterion(0, Level::Fast, 1).is_err());
        assert!(run_criterion(16, Level::Fast, 1).is_err());
    }
}
