//! Exact spherical and Gaussian integrals of polynomials against `h_k^2`.
//!
//! Everything is normalised so the answers are rationals:
//! spherical means are divided by `int_{S^{d-1}} h_k^2 dw`, Gaussian
//! integrals are multiplied by `b_k = (int h_k^2 e^{-|x|^2/2} dx)^{-1}`.

use num_traits::{One, Zero};

use crate::dunkl::DunklContext;
use crate::error::{DunklError, Result};
use crate::poly::Poly;
use crate::rational::{factorial, frac, int, pochhammer, pow_int, Rational};

/// Normalised spherical mean
/// `sum_l Delta_k^l p_{2l}(0) / (4^l l! (lambda_k + 1)_l)`.
///
/// The coefficients are positive; see the oracle suite in the tests.
pub fn pizzetti_mean(ctx: &DunklContext, p: &Poly) -> Result<Rational> {
    ctx.check_poly(p)?;
    let lam1 = ctx.lambda() + Rational::one();
    let mut acc = Rational::zero();
    for (deg, comp) in p.homogeneous_components() {
        if deg % 2 == 1 {
            continue;
        }
        let l = deg / 2;
        let value = ctx.lap_pow(&comp, l).constant_term();
        acc += value / (pow_int(&int(4), l) * factorial(l) * pochhammer(&lam1, l));
    }
    Ok(acc)
}

/// Normalised mean of `prod x_i^{2 beta_i}` on the sphere against
/// `prod |x_i|^{2 kappa_i}`: `prod (kappa_i + 1/2)_{beta_i} / (sum kappa + d/2)_{|beta|}`.
///
/// `exponents` are the full (even) exponents.
pub fn sphere_oracle_z2d(kappa: &[Rational], exponents: &[u32]) -> Result<Rational> {
    if kappa.len() != exponents.len() {
        return Err(DunklError::DimensionMismatch {
            expected: kappa.len(),
            found: exponents.len(),
        });
    }
    if exponents.iter().any(|e| e % 2 == 1) {
        return Err(DunklError::OddExponent);
    }
    let half = frac(1, 2);
    let mut num = Rational::one();
    let mut total = 0;
    for (k, e) in kappa.iter().zip(exponents) {
        num *= pochhammer(&(k + &half), e / 2);
        total += e / 2;
    }
    let sum: Rational = kappa.iter().sum::<Rational>() + frac(kappa.len() as i64, 2);
    Ok(num / pochhammer(&sum, total))
}

/// `b_k int p e^{-|x|^2/2} h_k^2 dx = sum_l Delta_k^l p(0) / (2^l l!)`.
pub fn gaussian_moment(ctx: &DunklContext, p: &Poly) -> Result<Rational> {
    ctx.check_poly(p)?;
    let mut acc = Rational::zero();
    for (deg, comp) in p.homogeneous_components() {
        if deg % 2 == 1 {
            continue;
        }
        let l = deg / 2;
        let value = ctx.lap_pow(&comp, l).constant_term();
        acc += value / (pow_int(&int(2), l) * factorial(l));
    }
    Ok(acc)
}

/// Gaussian moment of `prod x_i^{2 beta_i}` for `Z2^d`:
/// `prod 2^{beta_i} (kappa_i + 1/2)_{beta_i}` (product of one-dimensional
/// Gamma-integral ratios).
pub fn gaussian_oracle_z2d(kappa: &[Rational], exponents: &[u32]) -> Result<Rational> {
    if exponents.iter().any(|e| e % 2 == 1) {
        return Ok(Rational::zero());
    }
    let half = frac(1, 2);
    Ok(kappa
        .iter()
        .zip(exponents)
        .map(|(k, e)| pow_int(&int(2), e / 2) * pochhammer(&(k + &half), e / 2))
        .product())
}

/// Mean-value property: for k-harmonic `p`, the spherical mean is `p(0)`.
/// Returns the mean.
pub fn mean_value_check(ctx: &DunklContext, p: &Poly) -> Result<Rational> {
    ctx.check_poly(p)?;
    if !ctx.lap(p).is_zero() {
        return Err(DunklError::NotHarmonic);
    }
    let mean = pizzetti_mean(ctx, p)?;
    if mean != p.constant_term() {
        return Err(DunklError::Invalid(format!(
            "mean {} differs from p(0) = {}",
            mean,
            p.constant_term()
        )));
    }
    Ok(mean)
}
