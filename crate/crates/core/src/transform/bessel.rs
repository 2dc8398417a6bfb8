//! Bessel functions of the first kind for real order `nu >= -1/2`.
//!
//! Small arguments use the ascending series. Larger ones use Miller's
//! backward recurrence normalised by `(x/2)^mu = sum_k c_k J_{mu+2k}(x)`, or
//! the Hankel asymptotic expansion once it converges to `1e-15`.

use std::f64::consts::PI;

use statrs::function::gamma::{gamma, ln_gamma};

use crate::error::{DunklError, Result};

/// Largest argument evaluated by the ascending series; cancellation there
/// costs at most `e^x` times the rounding unit relative to the largest term.
pub const SERIES_LIMIT: f64 = 5.0;
/// Arguments above this try the asymptotic expansion first.
pub const ASYMPTOTIC_LIMIT: f64 = 25.0;

fn check_order(nu: f64) -> Result<()> {
    if !(nu >= -0.5) || !nu.is_finite() {
        return Err(DunklError::OutOfRange(format!("order nu = {nu}")));
    }
    Ok(())
}

/// `sum_j (-1)^j (x/2)^{2j} / (j! Gamma(nu + j + 1))`, i.e. `2^nu J_nu(x) / x^nu`.
fn scaled_series(nu: f64, x: f64) -> f64 {
    let q = -(x * x) / 4.0;
    let mut term = (-ln_gamma(nu + 1.0)).exp();
    let mut sum = term;
    let mut j = 0.0;
    loop {
        j += 1.0;
        term *= q / (j * (nu + j));
        sum += term;
        if term.abs() <= 1e-17 * sum.abs().max(1e-300) && j > x / 2.0 {
            break;
        }
        if j > 500.0 {
            break;
        }
    }
    sum
}

/// `J_nu(x)` by backward recurrence from far above the order.
fn miller(nu: f64, x: f64) -> f64 {
    let n = (nu + 0.5).floor();
    let mu = nu - n;
    let n = n as usize;
    let mut top = n + x.ceil() as usize + 60;
    if top % 2 == 1 {
        top += 1;
    }
    // c_0 = Gamma(mu + 1), c_k = (mu + 2k) g_k with g_k = Gamma(mu + k) / k!,
    // g_1 = Gamma(mu + 1) and g_{k+1} = g_k (mu + k) / (k + 1)
    let half_top = top / 2;
    let g0 = gamma(mu + 1.0);
    let mut c = vec![g0; half_top + 1];
    let mut g = g0;
    for k in 1..=half_top {
        if k > 1 {
            g *= (mu + (k - 1) as f64) / k as f64;
        }
        c[k] = (mu + 2.0 * k as f64) * g;
    }
    let mut upper = 0.0; // f_{k+1}
    let mut cur = 1e-30; // f_k
    let mut target = if top == n { cur } else { 0.0 };
    let mut norm = c[half_top] * cur;
    for k in (1..=top).rev() {
        let lower = 2.0 * (mu + k as f64) / x * cur - upper;
        upper = cur;
        cur = lower;
        let idx = k - 1;
        if idx == n {
            target = cur;
        }
        if idx % 2 == 0 {
            norm += c[idx / 2] * cur;
        }
        if cur.abs() > 1e250 {
            cur *= 1e-250;
            upper *= 1e-250;
            norm *= 1e-250;
            target *= 1e-250;
        }
    }
    target * (x / 2.0).powf(mu) / norm
}

fn hankel_asymptotic(nu: f64, x: f64) -> Result<f64> {
    let mu = 4.0 * nu * nu;
    let mut p = 0.0;
    let mut q = 0.0;
    let mut a = 1.0; // a_k(nu) / x^k
    let mut k = 0usize;
    let mut smallest = f64::INFINITY;
    loop {
        match k % 4 {
            0 => p += a,
            1 => q += a,
            2 => p -= a,
            _ => q -= a,
        }
        let odd = (2 * k + 1) as f64;
        let next = a * (mu - odd * odd) / ((k + 1) as f64 * 8.0 * x);
        if next.abs() >= a.abs() && k > 0 {
            break;
        }
        smallest = next.abs();
        a = next;
        k += 1;
        if a == 0.0 || smallest < 1e-17 || k > 200 {
            break;
        }
    }
    if smallest > 1e-15 {
        return Err(DunklError::OutOfRange(format!(
            "J_{nu}({x}): asymptotic expansion does not converge to 1e-15"
        )));
    }
    let w = x - nu * PI / 2.0 - PI / 4.0;
    Ok((2.0 / (PI * x)).sqrt() * (p * w.cos() - q * w.sin()))
}

/// `J_nu(x)` for `x >= 0`.
pub fn bessel_j(nu: f64, x: f64) -> Result<f64> {
    check_order(nu)?;
    if !(x >= 0.0) || !x.is_finite() {
        return Err(DunklError::OutOfRange(format!("x = {x}")));
    }
    if x == 0.0 {
        return Ok(if nu == 0.0 { 1.0 } else { 0.0 });
    }
    if x <= SERIES_LIMIT {
        return Ok((x / 2.0).powf(nu) * scaled_series(nu, x));
    }
    if x > ASYMPTOTIC_LIMIT {
        if let Ok(v) = hankel_asymptotic(nu, x) {
            return Ok(v);
        }
    }
    if x > 1e4 {
        return Err(DunklError::OutOfRange(format!("x = {x}")));
    }
    Ok(miller(nu, x))
}

/// `J_nu(x) / x^nu`, continuous at `0` with value `1 / (2^nu Gamma(nu + 1))`.
pub fn normalized_bessel(nu: f64, x: f64) -> Result<f64> {
    check_order(nu)?;
    if !(x >= 0.0) || !x.is_finite() {
        return Err(DunklError::OutOfRange(format!("x = {x}")));
    }
    if x <= SERIES_LIMIT {
        Ok(scaled_series(nu, x) / 2f64.powf(nu))
    } else {
        Ok(bessel_j(nu, x)? / x.powf(nu))
    }
}

/// `Gamma(nu + 1) (x/2)^{-nu} J_nu(x)`, the normalised spherical mean of the
/// kernel; equals `1` at `x = 0`.
pub fn spherical_bessel_mean(nu: f64, x: f64) -> Result<f64> {
    Ok(gamma(nu + 1.0) * 2f64.powf(nu) * normalized_bessel(nu, x)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn j_half(x: f64) -> f64 {
        (2.0 / (PI * x)).sqrt() * x.sin()
    }

    fn j_three_halves(x: f64) -> f64 {
        (2.0 / (PI * x)).sqrt() * (x.sin() / x - x.cos())
    }

    #[test]
    fn half_integer_closed_forms() {
        let v = bessel_j(0.5, 1.0).unwrap();
        assert!(((v - j_half(1.0)) / j_half(1.0)).abs() <= 1e-12);
        for x in [0.3, 2.0, 7.5, 19.5, 20.5, 33.0, 60.0] {
            let a = bessel_j(1.5, x).unwrap();
            assert!((a - j_three_halves(x)).abs() <= 1e-12, "x = {x}: {a}");
        }
    }

    #[test]
    fn integer_order_reference_values() {
        // J_0(1), J_1(2.5), J_0(25)
        assert!((bessel_j(0.0, 1.0).unwrap() - 0.765_197_686_557_966_6).abs() < 1e-14);
        assert!((bessel_j(1.0, 2.5).unwrap() - 0.497_094_102_464_274).abs() < 1e-14);
        assert!((bessel_j(0.0, 25.0).unwrap() - 0.096_266_783_275_958_2).abs() < 1e-13);
    }

    #[test]
    fn recurrence_matches_series() {
        for nu in [-0.5, 0.0, 0.3, 1.5, 4.25, 9.0] {
            for x in [0.5, 2.0, 4.9] {
                let a = miller(nu, x);
                let b = (x / 2.0).powf(nu) * scaled_series(nu, x);
                assert!((a - b).abs() <= 1e-13 * b.abs().max(1e-3), "nu = {nu}, x = {x}: {a} vs {b}");
            }
        }
        for nu in [0.0, 2.5, 7.0] {
            let a = miller(nu, 40.0);
            let b = hankel_asymptotic(nu, 40.0).unwrap();
            assert!((a - b).abs() < 1e-13);
        }
    }

    #[test]
    fn normalized_value_at_origin() {
        for nu in [-0.5, 0.0, 0.5, 1.0, 3.25] {
            let expect = 1.0 / (2f64.powf(nu) * gamma(nu + 1.0));
            assert!((normalized_bessel(nu, 0.0).unwrap() - expect).abs() < 1e-15);
        }
        assert!((spherical_bessel_mean(1.7, 0.0).unwrap() - 1.0).abs() < 1e-14);
    }

    #[test]
    fn derivative_identity() {
        // (1/r) d/dr (r^{-nu} J_nu) = -r^{-nu-1} J_{nu+1}, central differences at r = 2
        for nu in [0.0, 0.5, 1.5, 2.25] {
            let h = 1e-5;
            let r = 2.0;
            let f = |t: f64| normalized_bessel(nu, t).unwrap();
            let lhs = (f(r + h) - f(r - h)) / (2.0 * h) / r;
            let rhs = -normalized_bessel(nu + 1.0, r).unwrap();
            assert!((lhs - rhs).abs() < 1e-6, "nu = {nu}");
        }
    }

    #[test]
    fn rejects_bad_arguments() {
        assert!(bessel_j(-1.0, 1.0).is_err());
        assert!(bessel_j(0.5, -1.0).is_err());
        assert!(bessel_j(0.5, f64::NAN).is_err());
    }
}
