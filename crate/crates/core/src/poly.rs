//! Exact Wiener polynomials: construction, reduction, evaluation, the
//! Wiener index, and the resilience interpretation.
//!
//! Coefficients are arbitrary-precision integers throughout. Rational
//! evaluation is exact and backs every sign certificate; floating
//! evaluation exists separately for numeric work and is never used to
//! certify a sign.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::tree::{DistanceDistribution, Tree};

/// `W(G;x) = sum_{i=1..D} d_i x^i`, or its reduced form `W/x`.
///
/// Full form: `coeffs[i]` is `d_i`, so `coeffs[0] = 0`.
/// Reduced form: `coeffs[i]` is `d_{i+1}`; every coefficient of a tree's
/// reduced polynomial is strictly positive.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WienerPoly {
    coeffs: Vec<BigInt>,
    reduced: bool,
}

impl WienerPoly {
    /// Full-form polynomial from a distance distribution.
    pub fn from_distribution(dd: &DistanceDistribution) -> WienerPoly {
        let mut coeffs = Vec::with_capacity(dd.diameter() + 1);
        coeffs.push(BigInt::zero());
        coeffs.extend_from_slice(dd.counts());
        WienerPoly {
            coeffs,
            reduced: false,
        }
    }

    /// Reduced-form polynomial from a distance distribution.
    pub fn reduced_from_distribution(dd: &DistanceDistribution) -> WienerPoly {
        WienerPoly {
            coeffs: dd.counts().to_vec(),
            reduced: true,
        }
    }

    /// Full-form polynomial of a tree.
    pub fn of_tree(tree: &Tree) -> WienerPoly {
        Self::from_distribution(&tree.distance_distribution())
    }

    /// Reduced polynomial of a tree.
    pub fn reduced_of_tree(tree: &Tree) -> WienerPoly {
        Self::reduced_from_distribution(&tree.distance_distribution())
    }

    /// Wraps raw coefficients. Callers own the invariants; used by the
    /// family closed forms and tests.
    pub fn from_coeffs(coeffs: Vec<BigInt>, reduced: bool) -> WienerPoly {
        let mut coeffs = coeffs;
        while coeffs.len() > 1 && coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        WienerPoly { coeffs, reduced }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Divides by `x`: full form becomes reduced form.
    pub fn reduce(&self) -> Result<WienerPoly> {
        if self.reduced || !self.coeffs[0].is_zero() {
            return Err(Error::NotDivisible);
        }
        Ok(WienerPoly {
            coeffs: self.coeffs[1..].to_vec(),
            reduced: true,
        })
    }

    /// Multiplies by `x`: inverse of [`reduce`](Self::reduce).
    pub fn unreduce(&self) -> WienerPoly {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(BigInt::zero());
        coeffs.extend_from_slice(&self.coeffs);
        WienerPoly {
            coeffs,
            reduced: false,
        }
    }

    /// `W'(1) = sum i * d_i`, the sum of all pairwise distances.
    pub fn wiener_index(&self) -> BigInt {
        let shift = if self.reduced { 1 } else { 0 };
        self.coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| c * BigInt::from(i + shift))
            .sum()
    }

    /// Exact Horner evaluation at a rational point.
    pub fn evaluate_rational(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from_integer(c.clone());
        }
        acc
    }

    /// Exact Horner evaluation at an integer point.
    pub fn evaluate_int(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Floating Horner evaluation; not used for sign certificates.
    pub fn evaluate_complex(&self, x: Complex64) -> Complex64 {
        let mut acc = Complex64::ZERO;
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c.to_f64().unwrap_or(f64::INFINITY);
        }
        acc
    }

    /// Coefficients converted to `f64` for the numeric root solver.
    pub fn coeffs_f64(&self) -> Vec<f64> {
        self.coeffs
            .iter()
            .map(|c| c.to_f64().unwrap_or(f64::INFINITY))
            .collect()
    }

    /// Expected number of communicating vertex pairs when every edge
    /// survives independently with probability `prob`: exactly `W(T;p)`.
    ///
    /// Requires the full form built from a tree; exact in the rationals.
    pub fn resilience(&self, prob: &BigRational) -> Result<BigRational> {
        if prob < &BigRational::zero() || prob > &BigRational::one() {
            return Err(Error::ProbOutOfRange(prob.to_string()));
        }
        if self.reduced {
            return Err(Error::BadParam(
                "resilience requires the full-form polynomial".into(),
            ));
        }
        Ok(self.evaluate_rational(prob))
    }
}

/// Parses a probability given as a decimal string (e.g. `0.35`) into an
/// exact rational, avoiding binary-float surprises in reports.
pub fn parse_probability(text: &str) -> Result<BigRational> {
    let s = text.trim();
    let bad = || Error::ProbOutOfRange(text.to_string());
    let (int_part, frac_part) = match s.split_once('.') {
        Some((a, b)) => (a, b),
        None => (s, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(bad());
    }
    if !int_part.chars().all(|c| c.is_ascii_digit())
        || !frac_part.chars().all(|c| c.is_ascii_digit())
    {
        return Err(bad());
    }
    let mut numer: BigInt = if int_part.is_empty() {
        BigInt::zero()
    } else {
        int_part.parse().map_err(|_| bad())?
    };
    let mut denom = BigInt::one();
    for digit in frac_part.chars() {
        numer = numer * 10 + digit.to_digit(10).unwrap();
        denom *= 10;
    }
    let p = BigRational::new(numer, denom);
    if p < BigRational::zero() || p > BigRational::one() {
        return Err(bad());
    }
    Ok(p)
}

/// Monte Carlo estimate of resilience.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct McEstimate {
    pub estimate: f64,
    pub stderr: f64,
    pub trials: u64,
}

/// Simulates edge percolation: each trial deletes every edge independently
/// with probability `1 - prob` and counts communicating pairs through
/// component sizes.
///
/// The generator is re-keyed per trial from `(seed, trial index)`, so the
/// outcome is deterministic no matter how trials are partitioned across
/// workers; sums are accumulated in exact integers for the same reason.
pub fn resilience_mc(tree: &Tree, prob: f64, trials: u64, seed: u64) -> Result<McEstimate> {
    if !(0.0..=1.0).contains(&prob) {
        return Err(Error::ProbOutOfRange(prob.to_string()));
    }
    if trials == 0 {
        return Err(Error::BadParam("need at least one trial".into()));
    }
    let edges = tree.edges();
    let n = tree.order();
    let (sum, sum_sq) = (0..trials)
        .into_par_iter()
        .map(|trial| {
            let mut rng = trial_rng(seed, trial);
            let mut dsu = Dsu::new(n);
            for &(u, v) in &edges {
                if rng.random::<f64>() < prob {
                    dsu.union(u, v);
                }
            }
            let pairs = dsu.pair_count() as u128;
            (pairs, pairs * pairs)
        })
        .reduce(|| (0u128, 0u128), |a, b| (a.0 + b.0, a.1 + b.1));
    let t = trials as f64;
    let mean = sum as f64 / t;
    let stderr = if trials == 1 {
        0.0
    } else {
        let num = sum_sq as f64 - (sum as f64) * (sum as f64) / t;
        (num.max(0.0) / (t * (t - 1.0))).sqrt()
    };
    Ok(McEstimate {
        estimate: mean,
        stderr,
        trials,
    })
}

fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut key = [0u8; 32];
    key[..8].copy_from_slice(&seed.to_le_bytes());
    key[8..16].copy_from_slice(&trial.to_le_bytes());
    ChaCha8Rng::from_seed(key)
}

struct Dsu {
    parent: Vec<u32>,
    size: Vec<u32>,
}

impl Dsu {
    fn new(n: usize) -> Dsu {
        Dsu {
            parent: (0..n as u32).collect(),
            size: vec![1; n],
        }
    }

    fn find(&mut self, mut x: u32) -> u32 {
        while self.parent[x as usize] != x {
            self.parent[x as usize] = self.parent[self.parent[x as usize] as usize];
            x = self.parent[x as usize];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (mut ra, mut rb) = (self.find(a as u32), self.find(b as u32));
        if ra == rb {
            return;
        }
        if self.size[ra as usize] < self.size[rb as usize] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb as usize] = ra;
        self.size[ra as usize] += self.size[rb as usize];
    }

    fn pair_count(&mut self) -> u64 {
        let mut total = 0u64;
        for v in 0..self.parent.len() as u32 {
            if self.find(v) == v {
                let s = self.size[v as usize] as u64;
                total += s * (s - 1) / 2;
            }
        }
        total
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tree::{path_tree, star_tree};

    fn rational(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn full_polynomial_of_p4() {
        let p = WienerPoly::of_tree(&path_tree(4));
        let want: Vec<BigInt> = [0, 3, 2, 1].iter().map(|&c| c.into()).collect();
        assert_eq!(p.coeffs(), &want[..]);
        assert!(!p.is_reduced());
    }

    #[test]
    fn reduce_and_unreduce() {
        let p = WienerPoly::of_tree(&path_tree(4));
        let r = p.reduce().unwrap();
        let want: Vec<BigInt> = [3, 2, 1].iter().map(|&c| c.into()).collect();
        assert_eq!(r.coeffs(), &want[..]);
        assert!(matches!(r.reduce(), Err(Error::NotDivisible)));
        assert_eq!(r.unreduce(), p);
    }

    #[test]
    fn wiener_index_examples() {
        assert_eq!(WienerPoly::of_tree(&path_tree(4)).wiener_index(), 10.into());
        // star on 5 vertices: (n-1) + 2*C(n-1,2) = 4 + 12 = 16
        assert_eq!(
            WienerPoly::of_tree(&star_tree(4)).wiener_index(),
            16.into()
        );
    }

    #[test]
    fn rational_evaluation_is_exact() {
        let p = WienerPoly::from_coeffs(vec![3.into(), 2.into(), 1.into()], true);
        assert_eq!(p.evaluate_rational(&rational(0, 1)), rational(3, 1));
        assert_eq!(p.evaluate_rational(&rational(-1, 2)), rational(9, 4));
    }

    #[test]
    fn resilience_of_p3() {
        let p = WienerPoly::of_tree(&path_tree(3));
        let val = p.resilience(&rational(1, 2)).unwrap();
        assert_eq!(val, rational(5, 4));
        assert!(p.resilience(&rational(3, 2)).is_err());
    }

    #[test]
    fn resilience_extremes() {
        let t = star_tree(5);
        let p = WienerPoly::of_tree(&t);
        assert_eq!(p.resilience(&rational(1, 1)).unwrap(), rational(15, 1));
        assert_eq!(p.resilience(&rational(0, 1)).unwrap(), rational(0, 1));
    }

    #[test]
    fn parse_probability_decimal_strings() {
        assert_eq!(parse_probability("0.5").unwrap(), rational(1, 2));
        assert_eq!(parse_probability(".25").unwrap(), rational(1, 4));
        assert_eq!(parse_probability("1").unwrap(), rational(1, 1));
        assert!(parse_probability("1.5").is_err());
        assert!(parse_probability("-0.5").is_err());
        assert!(parse_probability("abc").is_err());
    }

    #[test]
    fn mc_is_deterministic_and_exact_at_p1() {
        let t = path_tree(6);
        let a = resilience_mc(&t, 0.7, 2000, 42).unwrap();
        let b = resilience_mc(&t, 0.7, 2000, 42).unwrap();
        assert_eq!(a, b);
        let c = resilience_mc(&t, 1.0, 500, 1).unwrap();
        assert_eq!(c.estimate, 15.0);
        assert_eq!(c.stderr, 0.0);
    }

    #[test]
    fn mc_agrees_with_polynomial_on_p3() {
        let t = path_tree(3);
        let p = WienerPoly::of_tree(&t);
        let exact = p
            .resilience(&rational(1, 2))
            .unwrap()
            .to_f64()
            .unwrap();
        let mc = resilience_mc(&t, 0.5, 100_000, 7).unwrap();
        assert!((mc.estimate - exact).abs() <= 4.0 * mc.stderr);
    }
}
