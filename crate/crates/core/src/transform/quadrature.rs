//! Adaptive Simpson quadrature and the Hankel transform of radial profiles.

use statrs::function::gamma::gamma;

use crate::error::{DunklError, Result};
use crate::radial::RadialProfile;
use crate::rational::to_f64;
use crate::transform::bessel::normalized_bessel;

const MAX_DEPTH: u32 = 40;

struct Simpson<'a, F: Fn(f64) -> Result<f64>> {
    f: &'a F,
    failed: bool,
}

impl<F: Fn(f64) -> Result<f64>> Simpson<'_, F> {
    /// Refines `[a, b]` given `f` at `a`, the midpoint and `b`. All three
    /// Simpson estimates use widths taken from the actual endpoints, so the
    /// comparison is free of width-rounding error on tiny intervals.
    fn refine(&mut self, a: f64, b: f64, fa: f64, fm: f64, fb: f64, tol: f64, depth: u32) -> Result<f64> {
        let m = 0.5 * (a + b);
        let lm = 0.5 * (a + m);
        let rm = 0.5 * (m + b);
        let flm = (self.f)(lm)?;
        let frm = (self.f)(rm)?;
        let whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
        let left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
        let right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
        let diff = left + right - whole;
        // below ~64 ulps of the panel value the estimate is rounding noise
        let floor = 64.0 * f64::EPSILON * (left.abs() + right.abs());
        if diff.abs() <= 15.0 * tol.max(floor) {
            return Ok(left + right + diff / 15.0);
        }
        if depth == 0 {
            self.failed = true;
            return Ok(left + right + diff / 15.0);
        }
        Ok(self.refine(a, m, fa, flm, fm, tol / 2.0, depth - 1)? + self.refine(m, b, fm, frm, fb, tol / 2.0, depth - 1)?)
    }
}

/// `int_a^b f` by adaptive Simpson over `panels` equal panels, each to
/// absolute tolerance `tol / panels`.
pub fn adaptive_simpson<F: Fn(f64) -> Result<f64>>(f: &F, a: f64, b: f64, tol: f64, panels: usize) -> Result<f64> {
    let panels = panels.max(1);
    let width = (b - a) / panels as f64;
    let mut s = Simpson { f, failed: false };
    let mut total = 0.0;
    let mut fa = f(a)?;
    for i in 0..panels {
        let lo = a + width * i as f64;
        let hi = if i + 1 == panels { b } else { lo + width };
        let mid = 0.5 * (lo + hi);
        let fm = f(mid)?;
        let fb = f(hi)?;
        total += s.refine(lo, hi, fa, fm, fb, tol / panels as f64, MAX_DEPTH)?;
        fa = fb;
    }
    if s.failed {
        return Err(DunklError::ToleranceNotReached(format!("adaptive Simpson on [{a}, {b}] to {tol:e}")));
    }
    Ok(total)
}

/// Upper bound for `int_R^inf |phi(r)| r^{2 nu + 1} dr / (2^nu Gamma(nu + 1))`,
/// which dominates the Hankel tail since `|J_nu(z) / z^nu| <= 1/(2^nu Gamma(nu+1))`.
fn hankel_tail_bound(phi: &RadialProfile, nu: f64, r: f64) -> f64 {
    let a = to_f64(phi.gauss_coeff()).abs();
    let front = 1.0 / (2f64.powf(nu) * gamma(nu + 1.0));
    let mut total = 0.0;
    for (t, c) in phi.terms() {
        let q = to_f64(&t) + 2.0 * nu + 1.0;
        let denom = 2.0 * a * r - q / r;
        if denom <= 0.0 {
            return f64::INFINITY;
        }
        // int_R^inf r^q e^{-a r^2} dr <= R^q e^{-a R^2} / (2 a R - q / R)
        total += to_f64(c).abs() * (q * r.ln() - a * r * r).exp() / denom;
    }
    front * total
}

/// `(H_nu phi)(s) = int_0^inf phi(r) J_nu(r s) / (r s)^nu r^{2 nu + 1} dr` for a
/// profile with a Gaussian factor `e^{a r^2}`, `a < 0`.
pub fn hankel_numeric(phi: &RadialProfile, nu: f64, s: f64) -> Result<f64> {
    if phi.is_zero() {
        return Ok(0.0);
    }
    if to_f64(phi.gauss_coeff()) >= 0.0 {
        return Err(DunklError::Invalid("Hankel transform needs a decaying Gaussian factor".into()));
    }
    if !(0.0..=10.0).contains(&s) {
        return Err(DunklError::OutOfRange(format!("s = {s}")));
    }
    for (t, _) in phi.terms() {
        if to_f64(&t) + 2.0 * nu + 1.0 < 0.0 {
            return Err(DunklError::Invalid(format!("r^{t} r^(2nu+1) is not integrable at 0")));
        }
    }
    let mut r_max = (s + 10.0 * (2.0 * nu + 2.0).sqrt()).max(10.0);
    while hankel_tail_bound(phi, nu, r_max) >= 1e-12 {
        r_max *= 1.5;
        if r_max > 1e3 {
            return Err(DunklError::ToleranceNotReached("Hankel tail bound".into()));
        }
    }
    // phi(r) r^{2nu+1} as (coefficient, power) pairs in floating point
    let gauss = to_f64(phi.gauss_coeff());
    let weighted: Vec<(f64, f64)> = phi.terms().map(|(t, c)| (to_f64(c), to_f64(&t) + 2.0 * nu + 1.0)).collect();
    let integrand = |r: f64| -> Result<f64> {
        if r == 0.0 {
            // only the r^0 coefficient survives
            let v: f64 = weighted.iter().filter(|(_, q)| *q == 0.0).map(|(c, _)| c).sum();
            return Ok(v * normalized_bessel(nu, 0.0)?);
        }
        let radial: f64 = weighted.iter().map(|(c, q)| c * r.powf(*q)).sum();
        Ok(radial * (gauss * r * r).exp() * normalized_bessel(nu, r * s)?)
    };
    let panels = (r_max * (1.0 + s)).ceil() as usize;
    adaptive_simpson(&integrand, 0.0, r_max, 1e-13, panels)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    #[test]
    fn simpson_polynomial_and_smooth() {
        let v = adaptive_simpson(&|x: f64| Ok(x * x * x), 0.0, 2.0, 1e-12, 1).unwrap();
        assert!((v - 4.0).abs() < 1e-12);
        let v = adaptive_simpson(&|x: f64| Ok(x.sin()), 0.0, std::f64::consts::PI, 1e-12, 4).unwrap();
        assert!((v - 2.0).abs() < 1e-11);
    }

    #[test]
    fn gaussian_is_fixed() {
        let g = RadialProfile::gaussian(frac(-1, 2));
        for nu in [-0.5, 0.0, 1.5, 3.0] {
            for s in [0.0, 0.5, 1.0, 2.0, 3.0] {
                let v = hankel_numeric(&g, nu, s).unwrap();
                let e = (-s * s / 2.0).exp();
                assert!(((v - e) / e).abs() <= 1e-10, "nu = {nu}, s = {s}: {v} vs {e}");
            }
        }
    }

    #[test]
    fn second_moment_profile() {
        // H_nu(r^2 e^{-r^2/2})(s) = (2 nu + 2 - s^2) e^{-s^2/2}
        let f = RadialProfile::power_gaussian(int(2), frac(-1, 2));
        for (nu, s) in [(1.0, 1.0), (2.5, 0.7), (0.0, 2.0)] {
            let v = hankel_numeric(&f, nu, s).unwrap();
            let e = (2.0 * nu + 2.0 - s * s) * (-s * s / 2.0f64).exp();
            assert!((v - e).abs() <= 1e-10);
        }
    }

    #[test]
    fn rejects_growing_profile() {
        assert!(hankel_numeric(&RadialProfile::power(int(2)), 0.5, 1.0).is_err());
    }
}
