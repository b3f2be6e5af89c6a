//! Exact real-root machinery over the integers and rationals: polynomial
//! GCD, square-free parts, Sturm chains, the Eneström–Kakeya annulus, the
//! Kurtz all-real criterion, and certified sign-bracket bisection.
//!
//! Integer polynomials are little-endian coefficient vectors. Remainder
//! sequences are kept integral with primitive-part reduction after every
//! pseudo-remainder step; scalings are strictly positive so every sign
//! needed by Sturm's theorem is preserved.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::WienerPoly;

/// An endpoint for real-root counting.
#[derive(Debug, Clone, PartialEq)]
pub enum RatBound {
    NegInf,
    Finite(BigRational),
    PosInf,
}

impl RatBound {
    pub fn finite(n: i64, d: i64) -> RatBound {
        RatBound::Finite(BigRational::new(n.into(), d.into()))
    }

    fn strictly_below(&self, other: &RatBound) -> bool {
        match (self, other) {
            (RatBound::NegInf, RatBound::NegInf) | (RatBound::PosInf, RatBound::PosInf) => false,
            (RatBound::NegInf, _) | (_, RatBound::PosInf) => true,
            (RatBound::Finite(a), RatBound::Finite(b)) => a < b,
            _ => false,
        }
    }
}

impl std::fmt::Display for RatBound {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RatBound::NegInf => write!(f, "-inf"),
            RatBound::PosInf => write!(f, "+inf"),
            RatBound::Finite(q) => write!(f, "{q}"),
        }
    }
}

/// Exact count of distinct real roots in `(lo, hi]` of the square-free
/// part of a polynomial.
#[derive(Debug, Clone)]
pub struct SturmCertificate {
    pub lo: RatBound,
    pub hi: RatBound,
    pub real_root_count: usize,
    pub squarefree_part_degree: usize,
}

/// Root-modulus annulus `r <= |z| <= R` from consecutive coefficient
/// ratios of a positive-coefficient polynomial.
#[derive(Debug, Clone, PartialEq)]
pub struct Annulus {
    pub inner: BigRational,
    pub outer: BigRational,
}

// ---------------------------------------------------------------------
// Integer polynomial helpers (little-endian, zero = empty vec)
// ---------------------------------------------------------------------

pub(crate) fn trim(mut p: Vec<BigInt>) -> Vec<BigInt> {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

pub(crate) fn degree(p: &[BigInt]) -> usize {
    p.len().saturating_sub(1)
}

pub(crate) fn derivative(p: &[BigInt]) -> Vec<BigInt> {
    if p.len() <= 1 {
        return Vec::new();
    }
    p.iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * BigInt::from(i))
        .collect()
}

pub(crate) fn eval_rational(p: &[BigInt], x: &BigRational) -> BigRational {
    let mut acc = BigRational::zero();
    for c in p.iter().rev() {
        acc = acc * x + BigRational::from_integer(c.clone());
    }
    acc
}

fn sign_i8(x: &BigInt) -> i8 {
    match x.sign() {
        num_bigint::Sign::Minus => -1,
        num_bigint::Sign::NoSign => 0,
        num_bigint::Sign::Plus => 1,
    }
}

fn sign_rat(x: &BigRational) -> i8 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

/// Sign of `p` at a bound: at infinities this is the leading sign with the
/// usual degree-parity flip.
fn sign_at(p: &[BigInt], at: &RatBound) -> i8 {
    if p.is_empty() {
        return 0;
    }
    match at {
        RatBound::Finite(q) => sign_rat(&eval_rational(p, q)),
        RatBound::PosInf => sign_i8(p.last().unwrap()),
        RatBound::NegInf => {
            let lead = sign_i8(p.last().unwrap());
            if degree(p).is_multiple_of(2) {
                lead
            } else {
                -lead
            }
        }
    }
}

fn content(p: &[BigInt]) -> BigInt {
    let mut g = BigInt::zero();
    for c in p {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

/// Divides by the (positive) content; sign pattern is unchanged.
fn primitive(p: Vec<BigInt>) -> Vec<BigInt> {
    let p = trim(p);
    if p.is_empty() {
        return p;
    }
    let g = content(&p);
    if g.is_one() || g.is_zero() {
        return p;
    }
    p.into_iter().map(|c| c / &g).collect()
}

/// Pseudo-remainder of `a` by `b`, rescaled by a positive constant so it
/// equals a positive multiple of the true rational remainder.
fn positive_pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = degree(b);
    let lead_b = b.last().expect("divisor must be nonzero").clone();
    let mut r = a.to_vec();
    let mut scalings = 0usize;
    loop {
        r = trim(r);
        if r.is_empty() || degree(&r) < db {
            break;
        }
        let shift = degree(&r) - db;
        let lead_r = r.last().unwrap().clone();
        // r <- lead_b * r - lead_r * x^shift * b
        for c in r.iter_mut() {
            *c *= &lead_b;
        }
        for (i, c) in b.iter().enumerate() {
            r[i + shift] -= &lead_r * c;
        }
        scalings += 1;
    }
    if lead_b.is_negative() && scalings % 2 == 1 {
        for c in r.iter_mut() {
            *c = -std::mem::take(c);
        }
    }
    r
}

/// Primitive GCD over the integers, leading coefficient positive.
pub(crate) fn gcd_primitive(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut a = primitive(a.to_vec());
    let mut b = primitive(b.to_vec());
    if degree(&a) < degree(&b) {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        let r = primitive(positive_pseudo_rem(&a, &b));
        a = b;
        b = r;
    }
    if a.last().is_some_and(|c| c.is_negative()) {
        for c in a.iter_mut() {
            *c = -std::mem::take(c);
        }
    }
    a
}

/// Exact division `a / b`, panicking if the division is not exact. By
/// Gauss's lemma this stays integral for the square-free quotient.
pub(crate) fn exact_div(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    assert!(!b.is_empty(), "division by zero polynomial");
    let mut rem: Vec<BigRational> = a
        .iter()
        .map(|c| BigRational::from_integer(c.clone()))
        .collect();
    let db = degree(b);
    let lead_b = BigRational::from_integer(b.last().unwrap().clone());
    let mut quot = vec![BigRational::zero(); a.len().saturating_sub(db)];
    for k in (0..quot.len()).rev() {
        let coef = &rem[k + db] / &lead_b;
        if coef.is_zero() {
            continue;
        }
        for (i, c) in b.iter().enumerate() {
            let sub = &coef * BigRational::from_integer(c.clone());
            rem[k + i] -= sub;
        }
        quot[k] = coef;
    }
    assert!(rem.iter().all(Zero::is_zero), "division was not exact");
    trim(
        quot.into_iter()
            .map(|q| {
                assert!(q.is_integer(), "quotient not integral");
                q.to_integer()
            })
            .collect(),
    )
}

/// `p / gcd(p, p')`: same roots, all simple. Primitive with positive lead.
pub(crate) fn squarefree_part(p: &[BigInt]) -> Vec<BigInt> {
    let p = trim(p.to_vec());
    if degree(&p) == 0 {
        return p;
    }
    let g = gcd_primitive(&p, &derivative(&p));
    if degree(&g) == 0 {
        return primitive(p);
    }
    primitive(exact_div(&p, &g))
}

/// Sturm chain of a (square-free) polynomial with primitive-part reduction
/// at every step.
pub(crate) fn sturm_chain(p: &[BigInt]) -> Vec<Vec<BigInt>> {
    let mut chain = vec![primitive(p.to_vec())];
    let d = derivative(p);
    if trim(d.clone()).is_empty() {
        return chain;
    }
    chain.push(primitive(d));
    loop {
        let k = chain.len();
        let mut r = primitive(positive_pseudo_rem(&chain[k - 2], &chain[k - 1]));
        if r.is_empty() {
            break;
        }
        for c in r.iter_mut() {
            *c = -std::mem::take(c);
        }
        chain.push(r);
    }
    chain
}

fn sign_variations(chain: &[Vec<BigInt>], at: &RatBound) -> usize {
    let mut count = 0;
    let mut prev = 0i8;
    for p in chain {
        let s = sign_at(p, at);
        if s != 0 {
            if prev != 0 && s != prev {
                count += 1;
            }
            prev = s;
        }
    }
    count
}

/// Number of distinct real roots of square-free `p` in `(lo, hi]`.
pub(crate) fn count_real_roots(chain: &[Vec<BigInt>], lo: &RatBound, hi: &RatBound) -> usize {
    sign_variations(chain, lo) - sign_variations(chain, hi)
}

/// Cauchy bound: every root modulus is below `1 + max |a_i| / |a_deg|`.
pub(crate) fn cauchy_bound(p: &[BigInt]) -> BigRational {
    let lead = BigRational::from_integer(p.last().expect("nonzero polynomial").abs());
    let biggest = p
        .iter()
        .map(|c| BigRational::from_integer(c.abs()))
        .max()
        .unwrap();
    BigRational::one() + biggest / lead
}

// ---------------------------------------------------------------------
// Public operations on Wiener polynomials
// ---------------------------------------------------------------------

/// Exact count of distinct real roots of `p` in `(lo, hi]`, computed on
/// the square-free part via a Sturm chain over the rationals.
pub fn sturm_real_root_count(p: &WienerPoly, lo: RatBound, hi: RatBound) -> Result<SturmCertificate> {
    if !lo.strictly_below(&hi) {
        return Err(Error::BadRange(format!("need lo < hi, got {lo} .. {hi}")));
    }
    let sf = squarefree_part(p.coeffs());
    if sf.is_empty() {
        return Err(Error::BadParam("zero polynomial".into()));
    }
    let chain = sturm_chain(&sf);
    let count = count_real_roots(&chain, &lo, &hi);
    Ok(SturmCertificate {
        lo,
        hi,
        real_root_count: count,
        squarefree_part_degree: degree(&sf),
    })
}

/// True when every root of `p` is real and simple: the square-free part
/// has full degree and as many real roots as its degree.
pub fn all_roots_real_distinct(p: &WienerPoly) -> Result<(bool, SturmCertificate)> {
    let cert = sturm_real_root_count(p, RatBound::NegInf, RatBound::PosInf)?;
    let ok =
        cert.squarefree_part_degree == p.degree() && cert.real_root_count == p.degree();
    Ok((ok, cert))
}

/// True when every root of `p` is real, allowing repeated roots: the
/// square-free part has only real roots.
pub fn all_roots_real(p: &WienerPoly) -> Result<(bool, SturmCertificate)> {
    let cert = sturm_real_root_count(p, RatBound::NegInf, RatBound::PosInf)?;
    let ok = cert.real_root_count == cert.squarefree_part_degree;
    Ok((ok, cert))
}

/// Kurtz criterion: positive coefficients with `a_i^2 - 4 a_{i-1} a_{i+1} > 0`
/// for every interior index force all roots real and distinct. Returns the
/// first failing index, if any.
pub fn kurtz_condition(p: &WienerPoly) -> Result<(bool, Option<usize>)> {
    let c = p.coeffs();
    if degree(c) < 2 {
        return Err(Error::DegreeTooSmall(degree(c), 2));
    }
    if let Some(i) = c.iter().position(|a| !a.is_positive()) {
        return Err(Error::NonPositiveCoefficient(i));
    }
    for i in 1..degree(c) {
        if (&c[i] * &c[i] - BigInt::from(4) * &c[i - 1] * &c[i + 1]).is_positive() {
            continue;
        }
        return Ok((false, Some(i)));
    }
    Ok((true, None))
}

/// `gcd(p, p')` as a primitive integer polynomial; degree 0 exactly when
/// `p` is square-free.
pub fn repeated_root_factor(p: &WienerPoly) -> Vec<BigInt> {
    let c = trim(p.coeffs().to_vec());
    if degree(&c) == 0 {
        return vec![BigInt::one()];
    }
    gcd_primitive(&c, &derivative(&c))
}

/// Eneström–Kakeya annulus from consecutive coefficient ratios. Requires
/// strictly positive coefficients.
pub fn enestrom_kakeya(p: &WienerPoly) -> Result<Annulus> {
    let c = p.coeffs();
    if c.len() < 2 {
        return Err(Error::DegreeTooSmall(degree(c), 1));
    }
    if let Some(i) = c.iter().position(|a| !a.is_positive()) {
        return Err(Error::NonPositiveCoefficient(i));
    }
    let ratios: Vec<BigRational> = c
        .windows(2)
        .map(|w| BigRational::new(w[0].clone(), w[1].clone()))
        .collect();
    Ok(Annulus {
        inner: ratios.iter().min().unwrap().clone(),
        outer: ratios.iter().max().unwrap().clone(),
    })
}

/// Number of bisection steps in [`bracket_real_root`]: the returned width
/// is `2^-50` times the input width.
pub const BRACKET_STEPS: u32 = 50;

/// Shrinks a sign-changing interval around a root by exact bisection.
/// Requires `sign p(lo) * sign p(hi) < 0`; the result keeps certified
/// opposite signs (or pins the root exactly if a midpoint evaluates to 0).
pub fn bracket_real_root(
    p: &WienerPoly,
    lo: &BigRational,
    hi: &BigRational,
) -> Result<(BigRational, BigRational)> {
    let mut lo = lo.clone();
    let mut hi = hi.clone();
    if lo >= hi {
        return Err(Error::BadRange(format!("need lo < hi, got {lo} .. {hi}")));
    }
    let sign_lo = sign_rat(&p.evaluate_rational(&lo));
    let sign_hi = sign_rat(&p.evaluate_rational(&hi));
    if sign_lo * sign_hi >= 0 {
        return Err(Error::NoSignChange(lo.to_string(), hi.to_string()));
    }
    let two = BigRational::from_integer(2.into());
    for _ in 0..BRACKET_STEPS {
        let mid = (&lo + &hi) / &two;
        let sign_mid = sign_rat(&p.evaluate_rational(&mid));
        if sign_mid == 0 {
            return Ok((mid.clone(), mid));
        }
        if sign_mid == sign_lo {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok((lo, hi))
}

/// Exact synthetic division by `(x + 1)`; `None` when the remainder is
/// nonzero.
pub fn divide_out_x_plus_1(p: &[BigInt]) -> Option<Vec<BigInt>> {
    if p.is_empty() {
        return Some(Vec::new());
    }
    let mut quot = vec![BigInt::zero(); p.len() - 1];
    let mut acc = BigInt::zero();
    for i in (0..p.len()).rev() {
        acc = &p[i] - acc;
        if i == 0 {
            if !acc.is_zero() {
                return None;
            }
        } else {
            quot[i - 1] = acc.clone();
        }
    }
    Some(trim(quot))
}

/// True exactly when `(x+1)^2` divides the polynomial.
pub fn divisible_by_x_plus_1_squared(p: &[BigInt]) -> bool {
    divide_out_x_plus_1(p)
        .and_then(|q| divide_out_x_plus_1(&q))
        .is_some()
}
