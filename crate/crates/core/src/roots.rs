//! Numeric complex root finding with residual certificates.
//!
//! Simultaneous Aberth–Ehrlich iteration on the monic-normalized
//! polynomial, started from Newton-polygon circles so that polynomials
//! with wildly different coefficient magnitudes (caterpillar polynomials
//! carry hundred-digit coefficients) still converge. Convergence is
//! declared on relative backward error: `|p(z)| / sum |a_i||z|^i`.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::poly::WienerPoly;

/// Default residual tolerance for [`find_roots`].
pub const DEFAULT_TOL: f64 = 1e-12;
/// Default iteration cap for the Aberth sweep.
pub const DEFAULT_MAX_ITER: usize = 500;
/// Absolute tolerance used when pairing conjugate roots.
pub const CONJUGATE_PAIR_TOL: f64 = 1e-8;

/// Numeric roots of a polynomial, with per-root relative residuals.
#[derive(Debug, Clone)]
pub struct RootReport {
    /// All `deg` roots, with multiplicity.
    pub roots: Vec<Complex64>,
    /// Relative backward error `|p(r)| / sum |a_i||r|^i` per root.
    pub residuals: Vec<f64>,
    /// The root of largest modulus.
    pub max_modulus: Complex64,
    pub iterations: usize,
    /// All residuals at or below the requested tolerance.
    pub converged: bool,
}

impl RootReport {
    /// Roots with `|Im|` below the pairing tolerance, sorted ascending.
    pub fn real_roots(&self) -> Vec<f64> {
        let mut out: Vec<f64> = self
            .roots
            .iter()
            .filter(|z| z.im.abs() < 1e-7 * (1.0 + z.norm()))
            .map(|z| z.re)
            .collect();
        out.sort_by(|a, b| a.partial_cmp(b).unwrap());
        out
    }

    /// Largest imaginary part over all roots.
    pub fn max_imaginary(&self) -> f64 {
        self.roots.iter().map(|z| z.im).fold(f64::NEG_INFINITY, f64::max)
    }
}

/// Finds all complex roots of `p` with the default tolerance.
pub fn find_roots_default(p: &WienerPoly) -> Result<RootReport> {
    find_roots(p, DEFAULT_TOL)
}

/// Finds all complex roots of `p`. On iteration exhaustion the partial
/// result is returned with `converged = false` rather than an error.
pub fn find_roots(p: &WienerPoly, tol: f64) -> Result<RootReport> {
    find_roots_with(p, tol, DEFAULT_MAX_ITER)
}

pub fn find_roots_with(p: &WienerPoly, tol: f64, max_iter: usize) -> Result<RootReport> {
    let coeffs = p.coeffs_f64();
    if coeffs.len() < 2 {
        return Err(Error::DegreeTooSmall(0, 1));
    }
    if coeffs.iter().any(|c| !c.is_finite()) {
        return Err(Error::BadParam(
            "coefficient exceeds f64 range; use exact machinery".into(),
        ));
    }
    solve(&coeffs, tol, max_iter)
}

fn solve(coeffs: &[f64], tol: f64, max_iter: usize) -> Result<RootReport> {
    // Exact zero roots come from trailing zero low-order coefficients
    // (the full-form polynomial has a_0 = 0); strip them up front.
    let zero_roots = coeffs.iter().take_while(|&&c| c == 0.0).count();
    let work = &coeffs[zero_roots..];
    let deg = work.len() - 1;
    assert!(work[deg] != 0.0, "leading coefficient must be nonzero");
    let monic: Vec<f64> = work.iter().map(|c| c / work[deg]).collect();
    let deriv: Vec<f64> = monic
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * i as f64)
        .collect();

    let mut z = initial_guesses(&monic);
    let mut iterations = 0;
    while iterations < max_iter && deg > 0 {
        iterations += 1;
        let mut max_step = 0.0f64;
        for i in 0..deg {
            let zi = z[i];
            let (pv, dv) = eval_with_derivative(&monic, &deriv, zi);
            if pv.norm() == 0.0 {
                continue;
            }
            let newton = if dv.norm() > 0.0 { pv / dv } else { pv };
            let mut repulsion = Complex64::ZERO;
            for (j, &zj) in z.iter().enumerate() {
                if j != i {
                    let diff = zi - zj;
                    if diff.norm() > 0.0 {
                        repulsion += diff.inv();
                    }
                }
            }
            let denom = Complex64::new(1.0, 0.0) - newton * repulsion;
            let step = if denom.norm() > 1e-300 {
                newton / denom
            } else {
                newton
            };
            if !step.re.is_finite() || !step.im.is_finite() {
                continue;
            }
            z[i] = zi - step;
            max_step = max_step.max(step.norm() / (1.0 + zi.norm()));
        }
        if max_step < 1e-15 || residuals_below(&monic, &z, tol) {
            break;
        }
    }

    // Newton polish, guarded against derivative blow-ups.
    for zi in z.iter_mut() {
        for _ in 0..2 {
            let (pv, dv) = eval_with_derivative(&monic, &deriv, *zi);
            if dv.norm() == 0.0 {
                break;
            }
            let step = pv / dv;
            if !step.re.is_finite() || !step.im.is_finite() {
                break;
            }
            *zi -= step;
        }
    }

    // Repeated real roots surface as a conjugate pair with a spurious
    // imaginary sliver; snap to the real axis whenever the real
    // projection already meets the tolerance on its own.
    for zi in z.iter_mut() {
        if zi.im != 0.0 {
            let projected = Complex64::new(zi.re, 0.0);
            if relative_residual(&monic, projected) <= tol {
                *zi = projected;
            }
        }
    }

    // A double root limits plain Newton to half precision. Where a close
    // pair is numerically a multiple root (p and p' both vanish at the
    // refined point), polish with a multiplicity-2 Schroeder step and give
    // both copies the refined value.
    for i in 0..z.len() {
        for j in (i + 1)..z.len() {
            let (zi, zj) = (z[i], z[j]);
            if (zi - zj).norm() > 1e-3 * (1.0 + zi.norm()) {
                continue;
            }
            let mut w = (zi + zj) / 2.0;
            for _ in 0..8 {
                let (pv, dv) = eval_with_derivative(&monic, &deriv, w);
                if dv.norm() == 0.0 {
                    break;
                }
                let step = 2.0 * pv / dv;
                if !step.re.is_finite() || !step.im.is_finite() || step.norm() == 0.0 {
                    break;
                }
                w -= step;
            }
            if w.im != 0.0 && relative_residual(&monic, Complex64::new(w.re, 0.0)) <= tol {
                w = Complex64::new(w.re, 0.0);
            }
            if relative_residual(&monic, w) <= tol && relative_residual(&deriv, w) <= 1e-6 {
                if w.im == 0.0 {
                    // f64 evaluation noise caps plain refinement near
                    // sqrt(eps); exact rational steps go to full precision.
                    w = Complex64::new(exact_real_schroeder(&monic, w.re), 0.0);
                }
                z[i] = w;
                z[j] = w;
            }
        }
    }

    for _ in 0..zero_roots {
        z.push(Complex64::ZERO);
    }
    z.sort_by(|a, b| {
        a.re.partial_cmp(&b.re)
            .unwrap()
            .then(a.im.partial_cmp(&b.im).unwrap())
    });
    let residuals: Vec<f64> = z.iter().map(|&zi| relative_residual(coeffs, zi)).collect();
    let converged = residuals.iter().all(|&r| r <= tol);
    let max_modulus = *z
        .iter()
        .max_by(|a, b| a.norm().partial_cmp(&b.norm()).unwrap())
        .unwrap();
    Ok(RootReport {
        roots: z,
        residuals,
        max_modulus,
        iterations,
        converged,
    })
}

/// Multiplicity-2 Schroeder refinement in exact rational arithmetic,
/// rounding back to `f64` after each step so denominators stay bounded.
fn exact_real_schroeder(coeffs: &[f64], start: f64) -> f64 {
    use num_rational::BigRational;
    use num_traits::{FromPrimitive, ToPrimitive, Zero};
    let exact: Option<Vec<BigRational>> = coeffs.iter().map(|&c| BigRational::from_f64(c)).collect();
    let Some(exact) = exact else { return start };
    let eval = |w: &BigRational, poly: &[BigRational]| -> BigRational {
        let mut acc = BigRational::zero();
        for c in poly.iter().rev() {
            acc = acc * w + c;
        }
        acc
    };
    let deriv: Vec<BigRational> = exact
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * BigRational::from_usize(i).unwrap())
        .collect();
    let mut w = start;
    for _ in 0..3 {
        let Some(wr) = BigRational::from_f64(w) else { return w };
        let dv = eval(&wr, &deriv);
        if dv.is_zero() {
            return w;
        }
        let pv = eval(&wr, &exact);
        let next = wr - BigRational::from_i32(2).unwrap() * pv / dv;
        match next.to_f64() {
            Some(v) if v.is_finite() => {
                if v == w {
                    return w;
                }
                w = v;
            }
            _ => return w,
        }
    }
    w
}

fn eval_with_derivative(p: &[f64], dp: &[f64], z: Complex64) -> (Complex64, Complex64) {
    let mut pv = Complex64::ZERO;
    for &c in p.iter().rev() {
        pv = pv * z + c;
    }
    let mut dv = Complex64::ZERO;
    for &c in dp.iter().rev() {
        dv = dv * z + c;
    }
    (pv, dv)
}

fn relative_residual(p: &[f64], z: Complex64) -> f64 {
    let mut pv = Complex64::ZERO;
    let mut scale = 0.0f64;
    let zn = z.norm();
    for &c in p.iter().rev() {
        pv = pv * z + c;
        scale = scale * zn + c.abs();
    }
    if scale == 0.0 {
        pv.norm()
    } else {
        pv.norm() / scale
    }
}

fn residuals_below(p: &[f64], z: &[Complex64], tol: f64) -> bool {
    z.iter().all(|&zi| relative_residual(p, zi) <= tol)
}

/// Newton-polygon initial guesses (the start phase of Bini's algorithm):
/// the upper convex hull of `(i, log |a_i|)` splits the index range into
/// segments; each segment contributes guesses on a circle whose radius is
/// the segment's slope scale.
fn initial_guesses(monic: &[f64]) -> Vec<Complex64> {
    let deg = monic.len() - 1;
    let logs: Vec<Option<f64>> = monic
        .iter()
        .map(|&c| if c == 0.0 { None } else { Some(c.abs().ln()) })
        .collect();
    // Upper convex hull over points (i, log|a_i|), treating zero
    // coefficients as -inf (never on the hull).
    let mut hull: Vec<usize> = Vec::new();
    for i in 0..=deg {
        let Some(li) = logs[i] else { continue };
        while hull.len() >= 2 {
            let a = hull[hull.len() - 2];
            let b = hull[hull.len() - 1];
            let (la, lb) = (logs[a].unwrap(), logs[b].unwrap());
            // drop b if it lies below segment a-i
            let cross = (lb - la) * (i as f64 - a as f64) - (li - la) * (b as f64 - a as f64);
            if cross <= 0.0 {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(i);
    }
    let mut guesses = Vec::with_capacity(deg);
    let golden = 0.618_033_988_749_894_9_f64;
    for w in hull.windows(2) {
        let (k1, k2) = (w[0], w[1]);
        let span = k2 - k1;
        let radius = ((logs[k1].unwrap() - logs[k2].unwrap()) / span as f64).exp();
        let radius = radius.clamp(1e-150, 1e150);
        for j in 0..span {
            // Spread angles; the extra irrational offset keeps guesses off
            // the real axis and off each other's conjugates.
            let angle = std::f64::consts::TAU * (j as f64 / span as f64 + golden * k1 as f64 + 0.25);
            guesses.push(Complex64::from_polar(radius, angle));
        }
    }
    debug_assert_eq!(guesses.len(), deg);
    while guesses.len() < deg {
        let angle = std::f64::consts::TAU * golden * guesses.len() as f64;
        guesses.push(Complex64::from_polar(1.0, angle));
    }
    guesses
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn wp(coeffs: &[i64]) -> WienerPoly {
        WienerPoly::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect(), true)
    }

    #[test]
    fn linear_polynomial_root() {
        // reduced star K_{1,3}: 3 + 3x -> root -1
        let report = find_roots_default(&wp(&[3, 3])).unwrap();
        assert!(report.converged);
        assert_eq!(report.roots.len(), 1);
        assert!((report.roots[0] - Complex64::new(-1.0, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn limit_polynomial_roots() {
        // 2 x^3 + x = x (2x^2 + 1): roots 0, ±i/sqrt(2)
        let report = find_roots_default(&wp(&[0, 1, 0, 2])).unwrap();
        assert!(report.converged);
        let mut moduli: Vec<f64> = report.roots.iter().map(|z| z.norm()).collect();
        moduli.sort_by(|a, b| a.partial_cmp(b).unwrap());
        assert!(moduli[0] < 1e-9);
        let inv_sqrt2 = std::f64::consts::FRAC_1_SQRT_2;
        assert!((moduli[1] - inv_sqrt2).abs() < 1e-9);
        assert!((moduli[2] - inv_sqrt2).abs() < 1e-9);
        assert!((report.max_modulus.norm() - inv_sqrt2).abs() < 1e-9);
    }

    #[test]
    fn conjugate_pairs_within_tolerance() {
        let report = find_roots_default(&wp(&[3, 2, 1])).unwrap();
        assert!(report.converged);
        assert_eq!(report.roots.len(), 2);
        let (a, b) = (report.roots[0], report.roots[1]);
        assert!((a - b.conj()).norm() < CONJUGATE_PAIR_TOL);
    }

    #[test]
    fn product_of_roots_reconstructs_constant_term() {
        // T_10 reduced: 9 + 10x + 10x^2 + 9x^3 + 6x^4 + x^5
        let p = wp(&[9, 10, 10, 9, 6, 1]);
        let report = find_roots_default(&p).unwrap();
        assert!(report.converged);
        let prod = report
            .roots
            .iter()
            .fold(Complex64::new(1.0, 0.0), |acc, &z| acc * z);
        // product = (-1)^deg a_0 / a_deg = -9
        assert!((prod - Complex64::new(-9.0, 0.0)).norm() < 1e-8 * 9.0);
    }

    #[test]
    fn double_root_converges_by_residual() {
        // (x+1)^2 (x+8) = 8 + 17x + 10x^2 + x^3
        let report = find_roots_default(&wp(&[8, 17, 10, 1])).unwrap();
        assert!(report.converged, "residual-based convergence at a double root");
        let near_minus1 = report
            .roots
            .iter()
            .filter(|z| (*z - Complex64::new(-1.0, 0.0)).norm() < 1e-4)
            .count();
        assert_eq!(near_minus1, 2);
    }

    #[test]
    fn t10_has_real_root_between_minus5_and_minus4() {
        let p = wp(&[9, 10, 10, 9, 6, 1]);
        let report = find_roots_default(&p).unwrap();
        let reals = report.real_roots();
        assert!(
            reals.iter().any(|&r| (-5.0..-4.0).contains(&r)),
            "reals: {reals:?}"
        );
    }

    #[test]
    fn degree_zero_is_rejected() {
        let p = WienerPoly::from_coeffs(vec![BigInt::from(5)], true);
        assert!(find_roots_default(&p).is_err());
    }
}
