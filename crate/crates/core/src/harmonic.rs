//! k-harmonic polynomials: the Clebsch projection, harmonic decomposition,
//! and generalized Hermite polynomials.

use num_traits::{One, Zero};
use serde::Serialize;

use crate::dunkl::DunklContext;
use crate::error::{DunklError, Result};
use crate::poly::Poly;
use crate::radial::{hobson_lhs, RadialProfile, WeightedFunction};
use crate::rational::{factorial, frac, int, pochhammer, pow_int, Rational};

pub fn is_k_harmonic(ctx: &DunklContext, p: &Poly) -> Result<bool> {
    ctx.check_poly(p)?;
    Ok(ctx.lap(p).is_zero())
}

/// `1 / (4^j j! (-lambda_k - m + 1)_j)` for `j = 0..=m/2`.
fn projection_coefficients(ctx: &DunklContext, m: u32) -> Result<Vec<Rational>> {
    let base = int(1 - m as i64) - ctx.lambda();
    (0..=m / 2)
        .map(|j| {
            let poch = pochhammer(&base, j);
            if poch.is_zero() {
                return Err(DunklError::VanishingPochhammer(j));
            }
            Ok((pow_int(&int(4), j) * factorial(j) * poch).recip())
        })
        .collect()
}

/// Clebsch projection onto k-harmonics,
/// `sum_j ||x||^{2j} Delta_k^j p / (4^j j! (-lambda_k - m + 1)_j)`.
pub fn clebsch_project_series(ctx: &DunklContext, p: &Poly) -> Result<Poly> {
    ctx.check_poly(p)?;
    let m = p.homogeneous_degree()?;
    let coeffs = projection_coefficients(ctx, m)?;
    let laps = ctx.lap_powers(p, m / 2);
    let mut out = Poly::zero(ctx.dim());
    for (j, (c, lp)) in coeffs.iter().zip(&laps).enumerate() {
        if lp.is_zero() {
            continue;
        }
        let term = &Poly::norm_sq_pow(ctx.dim(), j as u32) * lp;
        out.add_scaled(&term, c);
    }
    Ok(out)
}

/// Maxwell form `||x||^{2 lambda + 2m} p(D) ||x||^{-2 lambda}`, evaluated in
/// the radial calculus and normalised by its leading constant
/// `(-2)^m (lambda_k)_m` so that harmonics are fixed.
///
/// Fails with [`DunklError::DegenerateMaxwell`] when `lambda_k = 0` and
/// `m >= 1`: then `||x||^{-2 lambda} = 1` and `p(D) 1 = 0`.
pub fn clebsch_project_maxwell(ctx: &DunklContext, p: &Poly) -> Result<Poly> {
    ctx.check_poly(p)?;
    let m = p.homogeneous_degree()?;
    let lam = ctx.lambda().clone();
    let norm = pow_int(&int(-2), m) * pochhammer(&lam, m);
    if norm.is_zero() {
        return Err(DunklError::DegenerateMaxwell);
    }
    let phi = RadialProfile::power(int(-2) * &lam);
    let w = hobson_lhs(ctx, p, &phi)?;
    let lifted = w.mul_radial(&(int(2) * &lam + int(2 * m as i64)), &Rational::zero());
    Ok(lifted.to_poly()?.scale(&norm.recip()))
}

/// Raw Maxwell form without normalisation, as a weighted function.
pub fn maxwell_form(ctx: &DunklContext, p: &Poly) -> Result<WeightedFunction> {
    let m = p.homogeneous_degree()?;
    let lam = ctx.lambda().clone();
    let w = hobson_lhs(ctx, p, &RadialProfile::power(int(-2) * &lam))?;
    Ok(w.mul_radial(&(int(2) * &lam + int(2 * m as i64)), &Rational::zero()))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct HarmonicComponent {
    pub j: u32,
    #[serde(serialize_with = "ser_poly")]
    pub h: Poly,
}

fn ser_poly<S: serde::Serializer>(p: &Poly, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&p.to_string())
}

/// `p = sum_j ||x||^{2j} h_j` with every `h_j` k-harmonic of degree `m - 2j`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct HarmonicDecomposition {
    pub components: Vec<HarmonicComponent>,
}

impl HarmonicDecomposition {
    pub fn recompose(&self, dim: usize) -> Poly {
        let mut out = Poly::zero(dim);
        for c in &self.components {
            out.add_scaled(&(&Poly::norm_sq_pow(dim, c.j) * &c.h), &Rational::one());
        }
        out
    }
}

pub fn harmonic_decompose(ctx: &DunklContext, p: &Poly) -> Result<HarmonicDecomposition> {
    ctx.check_poly(p)?;
    p.homogeneous_degree()?;
    let mut components = Vec::new();
    let mut rest = p.clone();
    let mut j = 0;
    while !rest.is_zero() {
        let h = clebsch_project_series(ctx, &rest)?;
        let remainder = &rest - &h;
        if !h.is_zero() {
            components.push(HarmonicComponent { j, h });
        }
        rest = remainder.divide_exact_by_norm_sq()?;
        j += 1;
    }
    Ok(HarmonicDecomposition { components })
}

/// `H_{p,k} = sum_j (-1)^j / (4^j j!) Delta_k^j p`.
pub fn hermite_poly(ctx: &DunklContext, p: &Poly) -> Result<Poly> {
    ctx.check_poly(p)?;
    let m = p.homogeneous_degree()?;
    let mut out = Poly::zero(ctx.dim());
    for (j, lp) in ctx.lap_powers(p, m / 2).iter().enumerate() {
        let j = j as u32;
        let c = pow_int(&frac(-1, 4), j) / factorial(j);
        out.add_scaled(lp, &c);
    }
    Ok(out)
}

/// `(-1/2)^m e^{||x||^2} p(D) e^{-||x||^2} - H_{p,k}`, computed in the radial
/// calculus.
pub fn rodrigues_residual(ctx: &DunklContext, p: &Poly) -> Result<WeightedFunction> {
    ctx.check_poly(p)?;
    let m = p.homogeneous_degree()?;
    let w = hobson_lhs(ctx, p, &RadialProfile::gaussian(int(-1)))?;
    let stripped = w.mul_radial(&Rational::zero(), &int(1)).scale(&pow_int(&frac(-1, 2), m));
    let h = hermite_poly(ctx, p)?;
    Ok(stripped.sub(&WeightedFunction::from_poly(h)).canonical())
}

/// `p(D) e^{-||x||^2/2} - sum_j (-1)^{m-j} / (2^j j!) e^{-||x||^2/2} Delta_k^j p`.
pub fn diffgauss_residual(ctx: &DunklContext, p: &Poly) -> Result<WeightedFunction> {
    ctx.check_poly(p)?;
    let m = p.homogeneous_degree()?;
    let g = RadialProfile::gaussian(frac(-1, 2));
    let lhs = hobson_lhs(ctx, p, &g)?;
    let mut rhs = Poly::zero(ctx.dim());
    for (j, lp) in ctx.lap_powers(p, m / 2).iter().enumerate() {
        let j = j as u32;
        let sign = if (m - j) % 2 == 0 { int(1) } else { int(-1) };
        rhs.add_scaled(lp, &(sign / (pow_int(&int(2), j) * factorial(j))));
    }
    Ok(lhs.sub(&WeightedFunction::from_parts(rhs, &g)).canonical())
}
