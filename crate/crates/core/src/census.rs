//! Exhaustive experiments over all trees of a given order: extremal-root
//! censuses, double-root counts, all-real minima, ratio-bound sweeps, and
//! sign-bracket scans. Resumable, parallel, and deterministic.
//!
//! Work is split into fixed chunks of the enumeration index range. Each
//! chunk is processed independently (workers may steal freely), summaries
//! are merged in index order, and checkpoints are JSON lines written with
//! an atomic rename, so the final record never depends on the parallel
//! schedule and an interrupted run resumes exactly.

use std::path::PathBuf;
use std::sync::Mutex;
use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::enumerate::{count_trees, enumerate_trees};
use crate::error::{Error, Result};
use crate::exact::{
    self, cauchy_bound, count_real_roots, divide_out_x_plus_1, divisible_by_x_plus_1_squared,
    repeated_root_factor, squarefree_part, sturm_chain, RatBound,
};
use crate::families::{
    closed_form_reduced, make_tn, make_tn_dprime, make_tn_prime, ClosedFormKind,
};
use crate::poly::WienerPoly;
use crate::roots::{find_roots_with, RootReport, DEFAULT_TOL};
use crate::tree::Tree;

/// Relative gap under which an extremal decision counts as a tie and is
/// re-certified exactly.
pub const TIE_RELATIVE_TOL: f64 = 1e-6;

/// Execution knobs shared by all censuses.
#[derive(Debug, Clone)]
pub struct ExecConfig {
    /// Worker threads; 0 means one per logical CPU. Default 1 keeps the
    /// deterministic baseline.
    pub jobs: usize,
    /// Trees per work chunk.
    pub chunk_size: usize,
    /// JSON-lines checkpoint file, one record per completed chunk.
    pub checkpoint: Option<PathBuf>,
    /// Reuse completed chunks found in the checkpoint file.
    pub resume: bool,
}

impl Default for ExecConfig {
    fn default() -> Self {
        ExecConfig {
            jobs: 1,
            chunk_size: 1000,
            checkpoint: None,
            resume: false,
        }
    }
}

impl ExecConfig {
    pub fn with_jobs(jobs: usize) -> Self {
        ExecConfig {
            jobs,
            ..Default::default()
        }
    }
}

// ---------------------------------------------------------------------
// Chunked runner with JSONL checkpoints
// ---------------------------------------------------------------------

#[derive(Debug, Serialize, Deserialize)]
struct ChunkLine {
    kind: String,
    n: usize,
    start: usize,
    end: usize,
    payload: serde_json::Value,
}

struct Checkpoint {
    path: PathBuf,
    lines: Mutex<Vec<ChunkLine>>,
}

impl Checkpoint {
    fn open(path: &PathBuf, resume: bool) -> Result<Checkpoint> {
        let mut lines = Vec::new();
        if resume && path.exists() {
            let text = std::fs::read_to_string(path)?;
            for line in text.lines().filter(|l| !l.trim().is_empty()) {
                let parsed: ChunkLine = serde_json::from_str(line)
                    .map_err(|e| Error::Parse(format!("bad checkpoint line: {e}")))?;
                lines.push(parsed);
            }
        }
        Ok(Checkpoint {
            path: path.clone(),
            lines: Mutex::new(lines),
        })
    }

    fn lookup(&self, kind: &str, n: usize, start: usize, end: usize) -> Option<serde_json::Value> {
        let lines = self.lines.lock().unwrap();
        lines
            .iter()
            .find(|l| l.kind == kind && l.n == n && l.start == start && l.end == end)
            .map(|l| l.payload.clone())
    }

    /// Appends a completed chunk and rewrites the file through a
    /// temporary, renamed atomically into place.
    fn append(&self, line: ChunkLine) -> Result<()> {
        let mut lines = self.lines.lock().unwrap();
        lines.push(line);
        let mut text = String::new();
        for l in lines.iter() {
            text.push_str(&serde_json::to_string(l).expect("chunk serializes"));
            text.push('\n');
        }
        let tmp = self.path.with_extension("tmp");
        std::fs::write(&tmp, text)?;
        std::fs::rename(&tmp, &self.path)?;
        Ok(())
    }
}

/// Runs `work` over the enumeration range of order `n` in chunks,
/// returning per-chunk summaries in index order.
fn run_chunks<S, F>(kind: &str, n: usize, cfg: &ExecConfig, work: F) -> Result<Vec<S>>
where
    S: Serialize + DeserializeOwned + Send,
    F: Fn(usize, usize) -> Result<S> + Sync,
{
    let total = count_trees(n)?;
    let chunk = cfg.chunk_size.max(1);
    let ranges: Vec<(usize, usize)> = (0..total)
        .step_by(chunk)
        .map(|s| (s, (s + chunk).min(total)))
        .collect();
    let checkpoint = match &cfg.checkpoint {
        Some(path) => Some(Checkpoint::open(path, cfg.resume)?),
        None => None,
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.jobs)
        .build()
        .map_err(|e| Error::BadParam(format!("worker pool: {e}")))?;
    pool.install(|| {
        ranges
            .par_iter()
            .map(|&(start, end)| {
                if let Some(ckpt) = &checkpoint {
                    if let Some(value) = ckpt.lookup(kind, n, start, end) {
                        return serde_json::from_value(value)
                            .map_err(|e| Error::Parse(format!("bad checkpoint payload: {e}")));
                    }
                }
                let summary = work(start, end)?;
                if let Some(ckpt) = &checkpoint {
                    ckpt.append(ChunkLine {
                        kind: kind.to_string(),
                        n,
                        start,
                        end,
                        payload: serde_json::to_value(&summary)
                            .map_err(|e| Error::Parse(format!("serialize chunk: {e}")))?,
                    })?;
                }
                Ok(summary)
            })
            .collect::<Result<Vec<S>>>()
    })
}

fn for_range(n: usize, start: usize, end: usize, mut f: impl FnMut(usize, Tree)) -> Result<()> {
    let mut stream = enumerate_trees(n)?;
    stream.skip_trees(start);
    for (offset, tree) in stream.take(end - start).enumerate() {
        f(start + offset, tree);
    }
    Ok(())
}

// ---------------------------------------------------------------------
// Extremal censuses (max modulus / max imaginary part)
// ---------------------------------------------------------------------

/// One extremal candidate: numeric value, canonical code, and the exact
/// reduced coefficients for re-certification.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Candidate {
    pub value: f64,
    pub code: String,
    pub coeffs: Vec<String>,
}

#[derive(Debug, Default, Serialize, Deserialize)]
struct MaxChunk {
    best: Option<Candidate>,
    second: Option<Candidate>,
}

/// Outcome of an extremal census over all trees of order `n`.
#[derive(Debug, Clone, Serialize)]
pub struct CensusRecord {
    pub n: usize,
    pub kind: String,
    pub extremal_code: String,
    pub extremal_value: f64,
    pub runner_up_code: Option<String>,
    pub runner_up_value: Option<f64>,
    /// Set when the gap to the runner-up is inside [`TIE_RELATIVE_TOL`].
    pub tie: bool,
    /// Description of the exact or extended-precision re-certification
    /// performed for a tie.
    pub recertification: Option<String>,
    pub start_index: usize,
    pub end_index: usize,
    pub wall_ms: u128,
}

fn code_string(tree: &Tree) -> String {
    String::from_utf8(tree.canonical_code()).expect("AHU codes are ASCII")
}

fn coeff_strings(p: &WienerPoly) -> Vec<String> {
    p.coeffs().iter().map(BigInt::to_string).collect()
}

fn parse_coeffs(strings: &[String]) -> Vec<BigInt> {
    strings
        .iter()
        .map(|s| s.parse().expect("decimal coefficient"))
        .collect()
}

/// Strictly-better ordering for extremal candidates: larger value first,
/// canonical code as the deterministic tiebreak.
fn beats(a: &Candidate, b: &Candidate) -> bool {
    a.value > b.value || (a.value == b.value && a.code < b.code)
}

fn push_candidate(best: &mut Option<Candidate>, second: &mut Option<Candidate>, cand: Candidate) {
    match best {
        Some(b) if !beats(&cand, b) => {
            if second.as_ref().is_none_or(|s| beats(&cand, s)) {
                *second = Some(cand);
            }
        }
        _ => {
            if let Some(old) = best.take() {
                *second = Some(old);
            }
            *best = Some(cand);
        }
    }
}

fn robust_roots(p: &WienerPoly) -> Result<RootReport> {
    let report = find_roots_with(p, DEFAULT_TOL, 500)?;
    if report.converged {
        return Ok(report);
    }
    find_roots_with(p, DEFAULT_TOL, 4000)
}

fn max_census(kind: &str, n: usize, cfg: &ExecConfig) -> Result<CensusRecord> {
    if !(4..=18).contains(&n) {
        return Err(Error::OrderTooLarge(n, 18));
    }
    let started = Instant::now();
    let chunks = run_chunks(kind, n, cfg, |start, end| {
        let mut chunk = MaxChunk::default();
        let mut failure: Option<Error> = None;
        for_range(n, start, end, |_, tree| {
            if failure.is_some() {
                return;
            }
            let poly = WienerPoly::reduced_of_tree(&tree);
            if poly.degree() == 0 {
                return;
            }
            match robust_roots(&poly) {
                Ok(report) => {
                    let value = if kind == "max-mod" {
                        report.max_modulus.norm()
                    } else {
                        report.max_imaginary()
                    };
                    let cand = Candidate {
                        value,
                        code: code_string(&tree),
                        coeffs: coeff_strings(&poly),
                    };
                    push_candidate(&mut chunk.best, &mut chunk.second, cand);
                }
                Err(e) => failure = Some(e),
            }
        })?;
        match failure {
            Some(e) => Err(e),
            None => Ok(chunk),
        }
    })?;

    let mut best: Option<Candidate> = None;
    let mut second: Option<Candidate> = None;
    for chunk in chunks {
        for cand in [chunk.best, chunk.second].into_iter().flatten() {
            push_candidate(&mut best, &mut second, cand);
        }
    }
    let total = count_trees(n)?;
    let best = best.ok_or_else(|| Error::BadParam(format!("no trees of order {n}")))?;

    let tie = second.as_ref().is_some_and(|s| {
        (best.value - s.value).abs() < TIE_RELATIVE_TOL * best.value.abs().max(1.0)
    });
    let recertification = if tie {
        let s = second.as_ref().unwrap();
        Some(match kind {
            "max-mod" => recertify_max_modulus(&best, s),
            _ => recertify_max_imaginary(&best, s),
        })
    } else {
        None
    };

    Ok(CensusRecord {
        n,
        kind: kind.to_string(),
        extremal_code: best.code,
        extremal_value: best.value,
        runner_up_code: second.as_ref().map(|s| s.code.clone()),
        runner_up_value: second.as_ref().map(|s| s.value),
        tie,
        recertification,
        start_index: 0,
        end_index: total,
        wall_ms: started.elapsed().as_millis(),
    })
}

/// The tree of order `n` whose Wiener root has the largest modulus.
pub fn max_modulus_census(n: usize, cfg: &ExecConfig) -> Result<CensusRecord> {
    max_census("max-mod", n, cfg)
}

/// The tree of order `n` whose Wiener root has the largest imaginary part.
pub fn max_imaginary_census(n: usize, cfg: &ExecConfig) -> Result<CensusRecord> {
    max_census("max-im", n, cfg)
}

/// Bracket of the leftmost (most negative) real root via Sturm-counted
/// bisection; `None` when the polynomial has no real root.
fn leftmost_real_root_bracket(
    coeffs: &[BigInt],
    steps: u32,
) -> Option<(BigRational, BigRational)> {
    let sf = squarefree_part(coeffs);
    if sf.len() < 2 {
        return None;
    }
    let chain = sturm_chain(&sf);
    if count_real_roots(&chain, &RatBound::NegInf, &RatBound::PosInf) == 0 {
        return None;
    }
    let mut lo = -cauchy_bound(&sf);
    let mut hi = cauchy_bound(&sf);
    let two = BigRational::from_integer(2.into());
    for _ in 0..steps {
        let mid = (&lo + &hi) / &two;
        let left = count_real_roots(&chain, &RatBound::NegInf, &RatBound::Finite(mid.clone()));
        if left >= 1 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Some((lo, hi))
}

/// Exact comparison of dominant real roots backing a tied max-modulus
/// decision. Complex dominant roots fall back to the numeric values,
/// which is recorded in the certificate text.
fn recertify_max_modulus(best: &Candidate, second: &Candidate) -> String {
    let p1 = parse_coeffs(&best.coeffs);
    let p2 = parse_coeffs(&second.coeffs);
    match (
        leftmost_real_root_bracket(&p1, 96),
        leftmost_real_root_bracket(&p2, 96),
    ) {
        (Some((lo1, hi1)), Some((lo2, hi2))) => {
            if hi1 < lo2 {
                format!(
                    "exact: extremal dominant real root in ({lo1}, {hi1}) strictly left of runner-up's ({lo2}, {hi2})"
                )
            } else if hi2 < lo1 {
                format!(
                    "exact: runner-up dominant real root in ({lo2}, {hi2}) strictly left of extremal's ({lo1}, {hi1}); numeric ordering NOT confirmed"
                )
            } else {
                "exact brackets overlap at width 2^-96 of the Cauchy bound; values equal to certified precision".into()
            }
        }
        _ => "dominant root not real; kept numeric ordering from escalated tolerance".into(),
    }
}

fn recertify_max_imaginary(best: &Candidate, second: &Candidate) -> String {
    let refine = |cand: &Candidate| -> f64 {
        let coeffs = parse_coeffs(&cand.coeffs);
        let poly = WienerPoly::from_coeffs(coeffs, true);
        find_roots_with(&poly, 1e-15, 5000)
            .map(|r| r.max_imaginary())
            .unwrap_or(cand.value)
    };
    let b = refine(best);
    let s = refine(second);
    format!(
        "escalated precision: extremal max-Im {b:.15e} vs runner-up {s:.15e} ({})",
        if b >= s {
            "ordering confirmed"
        } else {
            "ordering NOT confirmed"
        }
    )
}

// ---------------------------------------------------------------------
// Double-root census
// ---------------------------------------------------------------------

#[derive(Debug, Default, Serialize, Deserialize)]
struct DoubleChunk {
    divisible: Vec<String>,
    repeated_other: Vec<String>,
}

/// Trees whose Wiener polynomial is divisible by `(x+1)^2`, plus any
/// repeated root other than -1, over all trees of order `n`.
#[derive(Debug, Clone, Serialize)]
pub struct DoubleRootCensus {
    pub n: usize,
    pub count_divisible_by_x_plus_1_squared: usize,
    pub tree_codes: Vec<String>,
    pub repeated_other_than_minus1: Vec<String>,
    pub wall_ms: u128,
}

pub fn double_root_census(n: usize, cfg: &ExecConfig) -> Result<DoubleRootCensus> {
    if !(3..=16).contains(&n) {
        return Err(Error::OrderTooLarge(n, 16));
    }
    let started = Instant::now();
    let chunks = run_chunks("double-root", n, cfg, |start, end| {
        let mut chunk = DoubleChunk::default();
        for_range(n, start, end, |_, tree| {
            let full = WienerPoly::of_tree(&tree);
            if divisible_by_x_plus_1_squared(full.coeffs()) {
                chunk.divisible.push(code_string(&tree));
            }
            let reduced = full.reduce().expect("full form divides by x");
            let mut factor = repeated_root_factor(&reduced);
            if exact::degree(&factor) >= 1 {
                while let Some(q) = divide_out_x_plus_1(&factor) {
                    factor = q;
                    if factor.is_empty() {
                        break;
                    }
                }
                if exact::degree(&factor) >= 1 {
                    chunk.repeated_other.push(code_string(&tree));
                }
            }
        })?;
        Ok(chunk)
    })?;
    let mut codes = Vec::new();
    let mut repeated = Vec::new();
    for chunk in chunks {
        codes.extend(chunk.divisible);
        repeated.extend(chunk.repeated_other);
    }
    Ok(DoubleRootCensus {
        n,
        count_divisible_by_x_plus_1_squared: codes.len(),
        tree_codes: codes,
        repeated_other_than_minus1: repeated,
        wall_ms: started.elapsed().as_millis(),
    })
}

// ---------------------------------------------------------------------
// All-real minima per diameter
// ---------------------------------------------------------------------

/// The cap up to which [`all_real_census`] scans orders.
pub const ALL_REAL_ORDER_CAP: usize = 20;

/// Smallest-order witness of a given diameter whose Wiener roots are all
/// real (repeated real roots accepted).
#[derive(Debug, Clone, Serialize)]
pub struct AllRealRecord {
    pub diameter: usize,
    pub order: usize,
    pub witness_code: String,
    pub witness_reduced_coeffs: Vec<String>,
    pub wall_ms: u128,
}

pub fn all_real_census(diameter: usize, cfg: &ExecConfig) -> Result<AllRealRecord> {
    if !(2..=5).contains(&diameter) {
        return Err(Error::BadRange(format!(
            "diameter {diameter} outside desk-scale range 2..=5"
        )));
    }
    let started = Instant::now();
    for n in (diameter + 1)..=ALL_REAL_ORDER_CAP {
        let chunks = run_chunks("all-real", n, cfg, |start, end| {
            let mut first: Option<(usize, String, Vec<String>)> = None;
            for_range(n, start, end, |index, tree| {
                if first.is_some() {
                    return;
                }
                let dd = tree.distance_distribution();
                if dd.diameter() != diameter {
                    return;
                }
                let poly = WienerPoly::reduced_from_distribution(&dd);
                if poly.degree() == 0 {
                    return;
                }
                let (all_real, _) = exact::all_roots_real(&poly).expect("nonzero polynomial");
                if all_real {
                    first = Some((index, code_string(&tree), coeff_strings(&poly)));
                }
            })?;
            Ok(first)
        })?;
        if let Some((_, code, coeffs)) = chunks.into_iter().flatten().min_by_key(|f| f.0) {
            return Ok(AllRealRecord {
                diameter,
                order: n,
                witness_code: code,
                witness_reduced_coeffs: coeffs,
                wall_ms: started.elapsed().as_millis(),
            });
        }
    }
    Err(Error::NotFoundWithinCap(ALL_REAL_ORDER_CAP))
}

// ---------------------------------------------------------------------
// Ratio-bound verification (good/bad classification)
// ---------------------------------------------------------------------

#[derive(Debug, Default, Serialize, Deserialize)]
struct RatioChunk {
    bad_seen: usize,
    violations: Vec<String>,
}

/// Exhaustive check of the coefficient-ratio bounds at order `n`: good
/// trees against `max{(3n-1)/2, 2n-16}`, the diameter-6 bad trees
/// against `max{(3n-1)/2, 2n-14}`.
#[derive(Debug, Clone, Serialize)]
pub struct RatioBoundReport {
    pub n: usize,
    pub trees_checked: usize,
    pub bad_trees_found: usize,
    pub violations: Vec<String>,
    pub wall_ms: u128,
}

pub fn ratio_bound_check(n: usize, cfg: &ExecConfig) -> Result<RatioBoundReport> {
    if !(3..=14).contains(&n) {
        return Err(Error::OrderTooLarge(n, 14));
    }
    let started = Instant::now();
    let mut bad_codes: Vec<(String, &'static str)> = Vec::new();
    if n >= 9 {
        bad_codes.push((code_string(&make_tn(n)?), "Tn"));
    }
    if n >= 10 {
        bad_codes.push((code_string(&make_tn_prime(n)?), "Tn'"));
    }
    if n >= 6 {
        bad_codes.push((code_string(&make_tn_dprime(n)?), "Tn''"));
    }
    let rational = |v: i64| BigRational::from_integer(BigInt::from(v));
    let good_bound = std::cmp::max(
        BigRational::new(BigInt::from(3 * n as i64 - 1), 2.into()),
        rational(2 * n as i64 - 16),
    );
    let bad6_bound = std::cmp::max(
        BigRational::new(BigInt::from(3 * n as i64 - 1), 2.into()),
        rational(2 * n as i64 - 14),
    );

    let chunks = run_chunks("ratio-bound", n, cfg, |start, end| {
        let mut chunk = RatioChunk::default();
        for_range(n, start, end, |_, tree| {
            let code = code_string(&tree);
            let badness = bad_codes
                .iter()
                .find(|(c, _)| *c == code)
                .map(|(_, name)| *name);
            if badness.is_some() {
                chunk.bad_seen += 1;
            }
            // Good trees satisfy the good bound; bad diameter-6 trees the
            // relaxed 2n-14 bound; the diameter-4 bad tree is exempt here.
            let bound = match badness {
                None => &good_bound,
                Some("Tn") | Some("Tn'") => &bad6_bound,
                Some(_) => return,
            };
            let dd = tree.distance_distribution();
            let counts = dd.counts();
            for k in 0..counts.len().saturating_sub(1) {
                if counts[k + 1].is_zero() {
                    continue;
                }
                let ratio = BigRational::new(counts[k].clone(), counts[k + 1].clone());
                if &ratio > bound {
                    chunk.violations.push(format!(
                        "order {n} tree {code} ({}): d_{}/d_{} = {ratio} > {bound}",
                        badness.unwrap_or("good"),
                        k + 1,
                        k + 2
                    ));
                }
            }
        })?;
        Ok(chunk)
    })?;
    let mut bad_seen = 0;
    let mut violations = Vec::new();
    for chunk in chunks {
        bad_seen += chunk.bad_seen;
        violations.extend(chunk.violations);
    }
    Ok(RatioBoundReport {
        n,
        trees_checked: count_trees(n)?,
        bad_trees_found: bad_seen,
        violations,
        wall_ms: started.elapsed().as_millis(),
    })
}

// ---------------------------------------------------------------------
// Sign-bracket scans for the closed-form families
// ---------------------------------------------------------------------

/// Per-order exact sign certificates and modulus bounds for `T_n`,
/// `T_n'`, and `T_n''`.
#[derive(Debug, Clone, Serialize)]
pub struct BracketScanReport {
    pub n_lo: usize,
    pub n_hi: usize,
    pub orders_checked: usize,
    pub failures: Vec<String>,
    pub wall_ms: u128,
}

pub fn tn_bracket_scan(n_lo: usize, n_hi: usize) -> Result<BracketScanReport> {
    if n_lo < 10 || n_lo > n_hi {
        return Err(Error::BadRange(format!(
            "need 10 <= n_lo <= n_hi, got {n_lo}..{n_hi}"
        )));
    }
    let started = Instant::now();
    let mut failures = Vec::new();
    for n in n_lo..=n_hi {
        let nn = n as i64;
        // T_n: W(-(2n-16)) > 0 and W(-(2n-15)) < 0.
        let tn = closed_form_reduced(ClosedFormKind::Tn, n)?;
        let at_outer = tn.evaluate_int(&BigInt::from(-(2 * nn - 16)));
        let at_inner = tn.evaluate_int(&BigInt::from(-(2 * nn - 15)));
        if !at_outer.is_positive() {
            failures.push(format!("T_{n}: W(-(2n-16)) = {at_outer} not positive"));
        }
        if !at_inner.is_negative() {
            failures.push(format!("T_{n}: W(-(2n-15)) = {at_inner} not negative"));
        }
        // T_n': W(-(2n-17)) > 0 (n >= 13) and W(-(2n-16)) < 0.
        if n >= 13 {
            let tp = closed_form_reduced(ClosedFormKind::TnPrime, n)?;
            let hi = tp.evaluate_int(&BigInt::from(-(2 * nn - 17)));
            let lo = tp.evaluate_int(&BigInt::from(-(2 * nn - 16)));
            if !hi.is_positive() {
                failures.push(format!("T_{n}': W(-(2n-17)) = {hi} not positive"));
            }
            if !lo.is_negative() {
                failures.push(format!("T_{n}': W(-(2n-16)) = {lo} not negative"));
            }
        }
        // T_n'': three distinct negative real roots, modulus below
        // (1 + 1/sqrt(2)) n - 7.
        let tpp = closed_form_reduced(ClosedFormKind::TnDoublePrime, n)?;
        let cert = exact::sturm_real_root_count(&tpp, RatBound::NegInf, RatBound::finite(0, 1))?;
        if cert.real_root_count != 3 || cert.squarefree_part_degree != 3 {
            failures.push(format!(
                "T_{n}'': expected 3 distinct negative roots, Sturm found {} (squarefree degree {})",
                cert.real_root_count, cert.squarefree_part_degree
            ));
        }
        let report = robust_roots(&tpp)?;
        let bound = (1.0 + std::f64::consts::FRAC_1_SQRT_2) * n as f64 - 7.0;
        let max_mod = report.max_modulus.norm();
        if max_mod >= bound + 1e-6 {
            failures.push(format!(
                "T_{n}'': max-modulus root {max_mod} is not below {bound}"
            ));
        }
    }
    Ok(BracketScanReport {
        n_lo,
        n_hi,
        orders_checked: n_hi - n_lo + 1,
        failures,
        wall_ms: started.elapsed().as_millis(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::make_tilde_tn;

    #[test]
    fn max_modulus_census_small_orders() {
        let cfg = ExecConfig::default();
        for n in [6usize, 8, 10] {
            let record = max_modulus_census(n, &cfg).unwrap();
            assert_eq!(
                record.extremal_code,
                code_string(&make_tn_dprime(n).unwrap()),
                "order {n}"
            );
            assert!(!record.tie, "clear winner at order {n}");
            assert!(record.runner_up_value.unwrap() < record.extremal_value);
        }
    }

    #[test]
    fn max_imaginary_census_small_orders() {
        let cfg = ExecConfig::default();
        let record = max_imaginary_census(9, &cfg).unwrap();
        assert_eq!(
            record.extremal_code,
            code_string(&make_tilde_tn(9).unwrap())
        );
    }

    #[test]
    fn census_is_deterministic_across_worker_counts() {
        let one = max_modulus_census(9, &ExecConfig::with_jobs(1)).unwrap();
        let four = max_modulus_census(9, &ExecConfig::with_jobs(4)).unwrap();
        assert_eq!(one.extremal_code, four.extremal_code);
        assert_eq!(one.extremal_value, four.extremal_value);
        assert_eq!(one.runner_up_code, four.runner_up_code);
        assert_eq!(one.runner_up_value, four.runner_up_value);
    }

    #[test]
    fn double_root_census_order_nine() {
        let record = double_root_census(9, &ExecConfig::default()).unwrap();
        assert_eq!(record.count_divisible_by_x_plus_1_squared, 2);
        assert!(record.repeated_other_than_minus1.is_empty());
    }

    #[test]
    fn all_real_minima_small_diameters() {
        let cfg = ExecConfig::default();
        assert_eq!(all_real_census(2, &cfg).unwrap().order, 3);
        assert_eq!(all_real_census(3, &cfg).unwrap().order, 7);
    }

    #[test]
    fn ratio_bounds_clean_at_order_twelve() {
        let report = ratio_bound_check(12, &ExecConfig::default()).unwrap();
        assert_eq!(report.trees_checked, 551);
        assert!(report.violations.is_empty());
        assert_eq!(report.bad_trees_found, 3);
    }

    #[test]
    fn bracket_scan_reference_values() {
        let report = tn_bracket_scan(10, 40).unwrap();
        assert!(report.failures.is_empty(), "{:?}", report.failures);
        // the displayed values at n = 10
        let tn = closed_form_reduced(ClosedFormKind::Tn, 10).unwrap();
        assert_eq!(tn.evaluate_int(&BigInt::from(-4)), 65.into());
        assert_eq!(tn.evaluate_int(&BigInt::from(-5)), (-291).into());
    }

    #[test]
    fn checkpoint_resume_reproduces_record() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("census.jsonl");
        let mut cfg = ExecConfig {
            chunk_size: 10,
            checkpoint: Some(path.clone()),
            ..Default::default()
        };
        let clean = max_modulus_census(8, &ExecConfig::default()).unwrap();
        let first = max_modulus_census(8, &cfg).unwrap();
        assert!(path.exists());
        // Drop some completed chunks to simulate an interruption, resume.
        let text = std::fs::read_to_string(&path).unwrap();
        let kept: Vec<&str> = text.lines().take(1).collect();
        std::fs::write(&path, kept.join("\n")).unwrap();
        cfg.resume = true;
        let resumed = max_modulus_census(8, &cfg).unwrap();
        assert_eq!(first.extremal_code, resumed.extremal_code);
        assert_eq!(first.extremal_value, resumed.extremal_value);
        assert_eq!(clean.extremal_code, resumed.extremal_code);
        assert_eq!(clean.extremal_value, resumed.extremal_value);
    }

    #[test]
    fn leftmost_bracket_finds_dominant_root() {
        // (x+1)(x+8) = 8 + 9x + x^2: leftmost root -8
        let coeffs: Vec<BigInt> = [8, 9, 1].iter().map(|&c| BigInt::from(c)).collect();
        let (lo, hi) = leftmost_real_root_bracket(&coeffs, 80).unwrap();
        let eight = BigRational::from_integer((-8).into());
        assert!(lo <= eight && eight <= hi);
        assert!((&hi - &lo) < BigRational::new(1.into(), BigInt::from(1u64 << 40)));
    }
}
