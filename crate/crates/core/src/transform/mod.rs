//! Numerical checks of the transform-side identities for `Z2^d`.
//!
//! The kernel factorises into one-dimensional series, so spherical and
//! Gaussian pairings reduce to sums of exact rational moments. Those sums are
//! accumulated exactly (the argument `y` is converted to a rational without
//! rounding) and only the final value is rounded. Spherical quantities are
//! reported as normalised means: the common factor `2^lambda Gamma(lambda+1)`
//! between `b_k` and the spherical measure cancels from both sides.

pub mod bessel;
pub mod kernel;
pub mod quadrature;

use num_complex::Complex64;
use num_traits::{One, Zero};
use statrs::function::gamma::gamma;

use crate::dunkl::DunklContext;
use crate::error::{DunklError, Result};
use crate::harmonic::hermite_poly;
use crate::poly::Poly;
use crate::radial::{weighted_dunkl_apply, RadialProfile, WeightedFunction};
use crate::rational::{factorial, frac, from_f64, int, pochhammer, pow_int, to_f64, Rational};

pub use bessel::{bessel_j, normalized_bessel, spherical_bessel_mean};
pub use kernel::{dunkl_kernel_z2d, truncation_order, KernelSeries1D, TRUNCATION_CAP};
pub use quadrature::{adaptive_simpson, hankel_numeric};

pub type ComplexValue = Complex64;

/// Gaussian-series terms below this magnitude (after the series has started
/// to decrease) end the summation.
const GAUSS_TAIL: f64 = 1e-20;

/// Exact value `sum_k b_k (-i)^k`, bucketed by `k mod 4`.
#[derive(Clone, Debug, Default)]
struct PhaseSum([Rational; 4]);

impl PhaseSum {
    fn add(&mut self, power: usize, v: &Rational) {
        self.0[power % 4] += v;
    }

    fn value(&self) -> Complex64 {
        Complex64::new(to_f64(&(&self.0[0] - &self.0[2])), to_f64(&(&self.0[3] - &self.0[1])))
    }
}

/// `(-i)^m`.
pub fn minus_i_pow(m: u32) -> Complex64 {
    match m % 4 {
        0 => Complex64::new(1.0, 0.0),
        1 => Complex64::new(0.0, -1.0),
        2 => Complex64::new(-1.0, 0.0),
        _ => Complex64::new(0.0, 1.0),
    }
}

/// Per-coordinate multiplicities of a `Z2^d` context.
pub fn z2d_kappa(ctx: &DunklContext) -> Result<Vec<Rational>> {
    if !ctx.system().is_z2d() {
        return Err(DunklError::NotZ2d);
    }
    Ok(ctx.system().orbit_multiplicities().to_vec())
}

fn exact_point(ctx: &DunklContext, y: &[f64]) -> Result<Vec<Rational>> {
    if y.len() != ctx.dim() {
        return Err(DunklError::DimensionMismatch { expected: ctx.dim(), found: y.len() });
    }
    if let Some(v) = y.iter().find(|v| !v.is_finite()) {
        return Err(DunklError::OutOfRange(format!("y component {v}")));
    }
    Ok(y.iter().map(|&v| from_f64(v)).collect())
}

fn norm(y: &[f64]) -> f64 {
    y.iter().map(|v| v * v).sum::<f64>().sqrt()
}

/// `2^lambda Gamma(lambda + 1) J_{lambda+n}(rho) / rho^{lambda+n}`
/// `= 2^{-n} sum_k (-rho^2/4)^k / (k! (lambda + 1)_{n+k})`, summed exactly.
pub fn scaled_bessel(lambda: &Rational, n: u32, rho_sq: &Rational) -> Result<f64> {
    let lam1 = lambda + Rational::one();
    let q = -(rho_sq / int(4));
    let mut term = pow_int(&frac(1, 2), n) / pochhammer(&lam1, n);
    let mut sum = term.clone();
    let mut prev = f64::INFINITY;
    for k in 1..=400u32 {
        term = term * &q / (int(k as i64) * (&lam1 + int((n + k - 1) as i64)));
        sum += &term;
        let mag = to_f64(&term).abs();
        if mag < 1e-20 && mag < prev {
            return Ok(to_f64(&sum));
        }
        prev = mag;
    }
    Err(DunklError::TruncationFailure(400))
}

fn rho_sq(y: &[Rational]) -> Rational {
    y.iter().map(|v| v * v).sum()
}

// ---------------------------------------------------------------------------
// spherical pairing

/// Normalised spherical mean of `p(x) E(x, -i y)` against `h_k^2`, with the
/// kernel truncated at total degree `order` (default: the tail rule for
/// `||y||`).
pub fn sphere_pairing_mean_with(ctx: &DunklContext, p: &Poly, y: &[f64], order: Option<usize>) -> Result<Complex64> {
    let kappa = z2d_kappa(ctx)?;
    ctx.check_poly(p)?;
    let yq = exact_point(ctx, y)?;
    let d = ctx.dim();
    let n_max = match order {
        Some(n) => n,
        None => truncation_order(norm(y))?,
    };
    let deg = p.degree().unwrap_or(0) as usize;
    let half = frac(1, 2);
    let series: Vec<KernelSeries1D> = kappa.iter().map(|k| KernelSeries1D::new(k, n_max)).collect::<Result<_>>()?;
    // t[j][n] = a_n(kappa_j) y_j^n
    let t: Vec<Vec<Rational>> = (0..d)
        .map(|j| {
            let mut pw = Rational::one();
            (0..=n_max)
                .map(|n| {
                    let v = series[j].exact_coeff(n) * &pw;
                    pw *= &yq[j];
                    v
                })
                .collect()
        })
        .collect();
    let top = (deg + n_max) / 2 + 1;
    let poch_j: Vec<Vec<Rational>> = kappa
        .iter()
        .map(|k| {
            let a = k + &half;
            let mut acc = Rational::one();
            (0..=top)
                .map(|i| {
                    let v = acc.clone();
                    acc *= &a + int(i as i64);
                    v
                })
                .collect()
        })
        .collect();
    let s: Rational = kappa.iter().sum::<Rational>() + frac(d as i64, 2);
    let mut poch_total = Vec::with_capacity(top + 1);
    let mut acc = Rational::one();
    for i in 0..=top {
        poch_total.push(acc.clone());
        acc *= &s + int(i as i64);
    }

    // the total Pochhammer index is (|beta| + |n|) / 2, so per monomial it is
    // enough to convolve the coordinates keyed by the used degree |n|
    let mut sum = PhaseSum::default();
    for (m, c) in p.terms() {
        let beta = m.exps();
        let mut acc: Vec<Option<Rational>> = vec![None; n_max + 1];
        acc[0] = Some(c.clone());
        for j in 0..d {
            let b = beta[j] as usize;
            let mut next: Vec<Option<Rational>> = vec![None; n_max + 1];
            for (used, v) in acc.iter().enumerate() {
                let Some(v) = v else { continue };
                let mut n = b % 2;
                while used + n <= n_max {
                    let tn = &t[j][n];
                    if !tn.is_zero() {
                        let add = v * tn * &poch_j[j][(b + n) / 2];
                        match &mut next[used + n] {
                            Some(x) => *x += add,
                            slot => *slot = Some(add),
                        }
                    }
                    n += 2;
                }
            }
            acc = next;
        }
        let total: usize = beta.iter().map(|&e| e as usize).sum();
        for (used, v) in acc.into_iter().enumerate() {
            if let Some(v) = v {
                sum.add(used, &(v / &poch_total[(total + used) / 2]));
            }
        }
    }
    Ok(sum.value())
}

pub fn sphere_pairing_mean(ctx: &DunklContext, p: &Poly, y: &[f64]) -> Result<Complex64> {
    sphere_pairing_mean_with(ctx, p, y, None)
}

/// `b_k int_{S^{d-1}} p(x) E(x, -i y) h_k^2(x) dw(x)`.
pub fn sphere_pairing_numeric(ctx: &DunklContext, p: &Poly, y: &[f64]) -> Result<Complex64> {
    let lam = to_f64(ctx.lambda());
    Ok(sphere_pairing_mean(ctx, p, y)? / (2f64.powf(lam) * gamma(lam + 1.0)))
}

/// Right side of the spherical pairing formula, in the normalised-mean scale:
/// `(-i)^m sum_j (-1)^j / (2^j j!) S(lambda, m - j, ||y||) Delta_k^j p(y)`.
pub fn sph1_rhs(ctx: &DunklContext, p: &Poly, y: &[f64]) -> Result<Complex64> {
    z2d_kappa(ctx)?;
    ctx.check_poly(p)?;
    let m = p.homogeneous_degree()?;
    let yq = exact_point(ctx, y)?;
    let r2 = rho_sq(&yq);
    let mut acc = 0.0;
    for (j, lp) in ctx.lap_powers(p, m / 2).iter().enumerate() {
        let j = j as u32;
        let c = pow_int(&frac(-1, 2), j) / factorial(j) * lp.eval(&yq);
        if c.is_zero() {
            continue;
        }
        acc += to_f64(&c) * scaled_bessel(ctx.lambda(), m - j, &r2)?;
    }
    Ok(minus_i_pow(m) * acc)
}

/// `(lhs, rhs)` of the spherical pairing formula.
pub fn sph1_values(ctx: &DunklContext, p: &Poly, y: &[f64]) -> Result<(Complex64, Complex64)> {
    Ok((sphere_pairing_mean(ctx, p, y)?, sph1_rhs(ctx, p, y)?))
}

pub fn sph1_residual(ctx: &DunklContext, p: &Poly, y: &[f64]) -> Result<f64> {
    let (l, r) = sph1_values(ctx, p, y)?;
    Ok((l - r).norm())
}

/// Spherical mean of the kernel itself against the Bessel closed form
/// `Gamma(lambda+1) (||y||/2)^{-lambda} J_lambda(||y||)`, evaluated through
/// [`bessel_j`] rather than the rational series.
pub fn dts_values(ctx: &DunklContext, y: &[f64]) -> Result<(Complex64, Complex64)> {
    let lhs = sphere_pairing_mean(ctx, &Poly::one(ctx.dim()), y)?;
    let rhs = spherical_bessel_mean(to_f64(ctx.lambda()), norm(y))?;
    Ok((lhs, Complex64::new(rhs, 0.0)))
}

/// For k-harmonic `p`: mean of `p E(., -iy)` against `S(lambda, m, ||y||) p(-iy)`.
pub fn sph2_values(ctx: &DunklContext, p: &Poly, y: &[f64]) -> Result<(Complex64, Complex64)> {
    let m = p.homogeneous_degree()?;
    if !ctx.lap(p).is_zero() {
        return Err(DunklError::NotHarmonic);
    }
    let yq = exact_point(ctx, y)?;
    let lhs = sphere_pairing_mean(ctx, p, y)?;
    let rhs = minus_i_pow(m) * to_f64(&p.eval(&yq)) * scaled_bessel(ctx.lambda(), m, &rho_sq(&yq))?;
    Ok((lhs, rhs))
}

// ---------------------------------------------------------------------------
// Gaussian transform

/// One-dimensional Gaussian moment `2^{e/2} (kappa + 1/2)_{e/2}` (zero for odd `e`).
fn gauss_moment_1d(kappa: &Rational, e: usize) -> Rational {
    if e % 2 == 1 {
        return Rational::zero();
    }
    let k = (e / 2) as u32;
    pow_int(&int(2), k) * pochhammer(&(kappa + frac(1, 2)), k)
}

/// `b int x^e e^{-x^2/2} E_kappa(x, -i y) |x|^{2 kappa} dx` in one variable.
/// Returns the value and the last series index used.
fn gauss_factor_1d(kappa: &Rational, e: usize, y: &Rational, order: Option<usize>) -> Result<(Complex64, usize)> {
    let limit = order.unwrap_or(2 * TRUNCATION_CAP);
    let two_kappa = kappa * int(2);
    // a_n / a_{n-1} = 1 / (n + 2 kappa [n odd])
    let step = |n: usize| -> Rational {
        if n % 2 == 1 {
            int(n as i64) + &two_kappa
        } else {
            int(n as i64)
        }
    };
    let mut n = e % 2;
    // a_n y^n G(e + n); consecutive even steps multiply by
    // y^2 (2 kappa + 1 + e + n) / (step(n + 1) step(n + 2))
    let mut term = if n == 1 { y / step(1) } else { Rational::one() } * gauss_moment_1d(kappa, e + n);
    let mut sum = PhaseSum::default();
    let mut prev = f64::INFINITY;
    let mut last = n;
    let y_sq = y * y;
    while n <= limit {
        sum.add(n, &term);
        last = n;
        let mag = to_f64(&term).abs();
        if order.is_none() && (mag == 0.0 || (mag < GAUSS_TAIL && mag < prev)) && n >= 2 {
            return Ok((sum.value(), last));
        }
        if order.is_none() && y.is_zero() {
            return Ok((sum.value(), last));
        }
        prev = mag;
        let grow = &two_kappa + int((1 + e + n) as i64);
        term = term * &y_sq * grow / (step(n + 1) * step(n + 2));
        n += 2;
    }
    if order.is_none() {
        return Err(DunklError::TruncationFailure(limit));
    }
    Ok((sum.value(), last))
}

/// `b_k int p(x) e^{-||x||^2/2} E(x, -i y) h_k^2(x) dx` with an optional fixed
/// per-coordinate truncation order. Returns the value and the largest series
/// index used.
pub fn dunkl_transform_gauss_poly_with(
    ctx: &DunklContext,
    p: &Poly,
    y: &[f64],
    order: Option<usize>,
) -> Result<(Complex64, usize)> {
    let kappa = z2d_kappa(ctx)?;
    ctx.check_poly(p)?;
    let yq = exact_point(ctx, y)?;
    let mut cache: Vec<std::collections::HashMap<usize, Complex64>> = vec![Default::default(); ctx.dim()];
    let mut used = 0;
    let mut total = Complex64::zero();
    for (m, c) in p.terms() {
        let mut prod = Complex64::new(to_f64(c), 0.0);
        for (j, &e) in m.exps().iter().enumerate() {
            let e = e as usize;
            let v = match cache[j].get(&e) {
                Some(v) => *v,
                None => {
                    let (v, n) = gauss_factor_1d(&kappa[j], e, &yq[j], order)?;
                    used = used.max(n);
                    cache[j].insert(e, v);
                    v
                }
            };
            prod *= v;
        }
        total += prod;
    }
    Ok((total, used))
}

pub fn dunkl_transform_gauss_poly(ctx: &DunklContext, p: &Poly, y: &[f64]) -> Result<Complex64> {
    Ok(dunkl_transform_gauss_poly_with(ctx, p, y, None)?.0)
}

/// `e^{-||y||^2/2} sum_j (-1)^j / (2^j j!) Delta_k^j p_m(y)` summed over the
/// homogeneous components `p_m`, each with phase `(-i)^m`.
pub fn hecke_rhs(ctx: &DunklContext, p: &Poly, y: &[f64]) -> Result<Complex64> {
    ctx.check_poly(p)?;
    let yq = exact_point(ctx, y)?;
    let mut acc = Complex64::zero();
    for (m, comp) in p.homogeneous_components() {
        let mut v = Rational::zero();
        for (j, lp) in ctx.lap_powers(&comp, m / 2).iter().enumerate() {
            let j = j as u32;
            v += pow_int(&frac(-1, 2), j) / factorial(j) * lp.eval(&yq);
        }
        acc += minus_i_pow(m) * to_f64(&v);
    }
    Ok(acc * (-to_f64(&rho_sq(&yq)) / 2.0).exp())
}

pub fn hecke_values(ctx: &DunklContext, p: &Poly, y: &[f64]) -> Result<(Complex64, Complex64)> {
    Ok((dunkl_transform_gauss_poly(ctx, p, y)?, hecke_rhs(ctx, p, y)?))
}

pub fn hecke_residual(ctx: &DunklContext, p: &Poly, y: &[f64]) -> Result<f64> {
    let (l, r) = hecke_values(ctx, p, y)?;
    Ok((l - r).norm())
}

/// Transform of `e^{-||x||^2/2} H_{p,k}` against `(-i)^m e^{-||y||^2/2} H_{p,k}(y)`.
pub fn hermite_eigen_values(ctx: &DunklContext, p: &Poly, y: &[f64]) -> Result<(Complex64, Complex64)> {
    let m = p.homogeneous_degree()?;
    let h = hermite_poly(ctx, p)?;
    let yq = exact_point(ctx, y)?;
    let lhs = dunkl_transform_gauss_poly(ctx, &h, y)?;
    let rhs = minus_i_pow(m) * to_f64(&h.eval(&yq)) * (-to_f64(&rho_sq(&yq)) / 2.0).exp();
    Ok((lhs, rhs))
}

pub fn hermite_eigen_residual(ctx: &DunklContext, p: &Poly, y: &[f64]) -> Result<f64> {
    let (l, r) = hermite_eigen_values(ctx, p, y)?;
    Ok((l - r).norm())
}

// ---------------------------------------------------------------------------
// Hankel form of the Bochner identity

/// For `f(x) = ||x||^{2n} e^{-||x||^2/2}`: the transform of `p f` computed by
/// kernel expansion, against
/// `(-i)^m sum_j (-1)^j / (2^j j!) (H_{lambda+m-j} f_0)(||y||) Delta_k^j p(y)`
/// with the Hankel transforms done by quadrature.
pub fn bochner_hankel_values(ctx: &DunklContext, p: &Poly, n: u32, y: &[f64]) -> Result<(Complex64, Complex64)> {
    let m = p.homogeneous_degree()?;
    let lifted = &Poly::norm_sq_pow(ctx.dim(), n) * p;
    let lhs = dunkl_transform_gauss_poly(ctx, &lifted, y)?;
    let yq = exact_point(ctx, y)?;
    let f0 = RadialProfile::power_gaussian(int(2 * n as i64), frac(-1, 2));
    let lam = to_f64(ctx.lambda());
    let rho = norm(y);
    let mut acc = 0.0;
    for (j, lp) in ctx.lap_powers(p, m / 2).iter().enumerate() {
        let j = j as u32;
        let c = pow_int(&frac(-1, 2), j) / factorial(j) * lp.eval(&yq);
        if c.is_zero() {
            continue;
        }
        acc += to_f64(&c) * hankel_numeric(&f0, lam + (m - j) as f64, rho)?;
    }
    Ok((lhs, minus_i_pow(m) * acc))
}

// ---------------------------------------------------------------------------
// multiplication rule

/// Exact transform of `f e^{-||x||^2/2}` as `(real part, imaginary part)`,
/// each a polynomial times `e^{-||y||^2/2}`.
pub fn gauss_poly_transform_exact(ctx: &DunklContext, f: &Poly) -> Result<(WeightedFunction, WeightedFunction)> {
    ctx.check_poly(f)?;
    let mut re = Poly::zero(ctx.dim());
    let mut im = Poly::zero(ctx.dim());
    for (m, comp) in f.homogeneous_components() {
        let mut v = Poly::zero(ctx.dim());
        for (j, lp) in ctx.lap_powers(&comp, m / 2).iter().enumerate() {
            let j = j as u32;
            v.add_scaled(lp, &(pow_int(&frac(-1, 2), j) / factorial(j)));
        }
        match m % 4 {
            0 => re.add_scaled(&v, &int(1)),
            1 => im.add_scaled(&v, &int(-1)),
            2 => re.add_scaled(&v, &int(-1)),
            _ => im.add_scaled(&v, &int(1)),
        }
    }
    let g = RadialProfile::gaussian(frac(-1, 2));
    Ok((WeightedFunction::from_parts(re, &g), WeightedFunction::from_parts(im, &g)))
}

/// One-dimensional check of `F(x f) = i D F(f)` for `f = q(x) e^{-x^2/2}` on a
/// grid of `y`; returns the largest absolute residual.
pub fn dtmul_check(ctx: &DunklContext, q: &Poly, ys: &[f64]) -> Result<f64> {
    z2d_kappa(ctx)?;
    if ctx.dim() != 1 {
        return Err(DunklError::DimensionMismatch { expected: 1, found: ctx.dim() });
    }
    let (re, im) = gauss_poly_transform_exact(ctx, q)?;
    let xi = [Rational::one()];
    let d_re = weighted_dunkl_apply(ctx, &xi, &re)?;
    let d_im = weighted_dunkl_apply(ctx, &xi, &im)?;
    let xq = &Poly::var(1, 0) * q;
    let mut worst: f64 = 0.0;
    for &y in ys {
        let lhs = dunkl_transform_gauss_poly(ctx, &xq, &[y])?;
        // i (R + i I)' = -I' + i R'
        let rhs = Complex64::new(-d_im.eval_f64(&[y]), d_re.eval_f64(&[y]));
        worst = worst.max((lhs - rhs).norm());
    }
    Ok(worst)
}

// ---------------------------------------------------------------------------
// truncation stability

fn rel_change(a: Complex64, b: Complex64, bound: f64) -> f64 {
    let scale = a.norm().max(b.norm()).max(bound);
    if scale == 0.0 {
        0.0
    } else {
        (a - b).norm() / scale
    }
}

/// Relative change of the spherical pairing and the Gaussian transform when
/// the truncation order is doubled. Since `|E(x, -i y)| <= 1`, the change is
/// measured against `max(|a|, |b|)` or an a-priori bound on `|value|`,
/// whichever is larger, so a transform vanishing at `y` does not turn
/// rounding noise into a relative change of one.
pub fn truncation_doubling(ctx: &DunklContext, p: &Poly, y: &[f64]) -> Result<f64> {
    let kappa = z2d_kappa(ctx)?;
    let n = truncation_order(norm(y))?;
    let a = sphere_pairing_mean_with(ctx, p, y, Some(n))?;
    let b = sphere_pairing_mean_with(ctx, p, y, Some(2 * n))?;
    let (g, used) = dunkl_transform_gauss_poly_with(ctx, p, y, None)?;
    let (h, _) = dunkl_transform_gauss_poly_with(ctx, p, y, Some(2 * used.max(1)))?;
    // |x^m| <= 1 on the sphere; |x|^e <= 1 + x^{2 ceil(e/2)} for the Gaussian
    let mut sphere_bound = 0.0;
    let mut gauss_bound = 0.0;
    for (m, c) in p.terms() {
        let c = to_f64(c).abs();
        sphere_bound += c;
        gauss_bound += c * m
            .exps()
            .iter()
            .zip(&kappa)
            .map(|(&e, k)| 1.0 + to_f64(&gauss_moment_1d(k, e as usize + e as usize % 2)))
            .product::<f64>();
    }
    Ok(rel_change(a, b, sphere_bound).max(rel_change(g, h, gauss_bound)))
}

/// Helper for reports: absolute and relative residual of a complex pair.
pub fn residuals(lhs: Complex64, rhs: Complex64) -> (f64, f64) {
    let abs = (lhs - rhs).norm();
    let scale = rhs.norm().max(lhs.norm());
    let rel = if scale == 0.0 { 0.0 } else { abs / scale };
    (abs, rel)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harmonic::clebsch_project_series;
    use crate::integrate::{gaussian_moment, pizzetti_mean};
    use crate::poly::parse_poly;
    use crate::rational::parse_rational_list;
    use crate::rootsys::RootSystemData;

    fn ctx(name: &str, kappa: &str) -> DunklContext {
        DunklContext::new(RootSystemData::from_name(name, &parse_rational_list(kappa).unwrap()).unwrap())
    }

    fn p(s: &str, d: usize) -> Poly {
        parse_poly(s, d).unwrap()
    }

    #[test]
    fn pairing_at_origin_is_pizzetti() {
        let c = ctx("z2:d=2", "1/2,3/2");
        let q = p("x1^2*x2^2 + 3*x1^4", 2);
        let v = sphere_pairing_mean(&c, &q, &[0.0, 0.0]).unwrap();
        assert!((v.re - to_f64(&pizzetti_mean(&c, &q).unwrap())).abs() < 1e-15);
        let (l, r) = sph1_values(&c, &q, &[0.0, 0.0]).unwrap();
        assert!((l - r).norm() < 1e-14);
    }

    #[test]
    fn pairing_of_one_is_bessel() {
        for (sys, kap) in [("z2:d=1", "1/2"), ("z2:d=2", "1,0"), ("z2:d=2", "3/2,1/2")] {
            let c = ctx(sys, kap);
            let d = c.dim();
            for r in [0.5, 1.0, 2.5, 4.0] {
                let y: Vec<f64> = (0..d).map(|i| if i == 0 { r } else { 0.75 }).collect();
                let (l, rr) = dts_values(&c, &y).unwrap();
                assert!((l - rr).norm() / rr.norm() <= 1e-9, "{sys} {kap} {r}");
            }
        }
    }

    #[test]
    fn harmonic_pairing() {
        let c = ctx("z2:d=2", "1,1/2");
        let h = clebsch_project_series(&c, &p("x1^2*x2", 2)).unwrap();
        for y in [[0.5, 0.25], [1.5, -1.25], [-3.0, 2.5]] {
            let (l, r) = sph2_values(&c, &h, &y).unwrap();
            assert!((l - r).norm() <= 1e-9 * r.norm().max(1.0));
        }
    }

    #[test]
    fn sph1_small_cases() {
        let c = ctx("z2:d=2", "1/2,1");
        for q in ["x1^2", "x1*x2", "x1^3*x2 - x2^4", "x2"] {
            for y in [[0.5, 0.25], [-1.0, 0.75], [2.5, 1.5]] {
                assert!(sph1_residual(&c, &p(q, 2), &y).unwrap() <= 1e-9, "{q} {y:?}");
            }
        }
    }

    #[test]
    fn gaussian_fixed_point() {
        for kap in ["0", "1/2", "3/2"] {
            let c = ctx("z2:d=1", kap);
            for y in [0.0, 0.5, 1.0, 2.0, 3.0] {
                let v = dunkl_transform_gauss_poly(&c, &Poly::one(1), &[y]).unwrap();
                let e = (-y * y / 2.0).exp();
                assert!((v.re - e).abs() / e <= 1e-10 && v.im.abs() < 1e-14);
            }
        }
    }

    #[test]
    fn gaussian_at_origin_is_moment() {
        let c = ctx("z2:d=2", "1,3/2");
        let q = p("x1^4*x2^2 - x1^2 + 7", 2);
        let v = dunkl_transform_gauss_poly(&c, &q, &[0.0, 0.0]).unwrap();
        assert!((v.re - to_f64(&gaussian_moment(&c, &q).unwrap())).abs() < 1e-12);
    }

    #[test]
    fn hecke_and_hermite() {
        let c = ctx("z2:d=1", "1/2");
        for y in [0.5, 1.0, 2.0] {
            assert!(hecke_residual(&c, &p("x1", 1), &[y]).unwrap() <= 1e-9);
        }
        let c = ctx("z2:d=1", "1");
        for y in [0.5, 1.5, -3.0] {
            assert!(hermite_eigen_residual(&c, &p("x1^2", 1), &[y]).unwrap() <= 1e-8);
        }
        let c = ctx("z2:d=2", "1/2,0");
        assert!(hermite_eigen_residual(&c, &p("x1^2*x2 - x2^3", 2), &[1.5, -1.25]).unwrap() <= 1e-8);
    }

    #[test]
    fn bochner_hankel() {
        let c = ctx("z2:d=1", "3/2");
        let (l, r) = bochner_hankel_values(&c, &p("x1", 1), 1, &[1.0]).unwrap();
        assert!((l - r).norm() <= 1e-8);
    }

    #[test]
    fn dtmul_examples() {
        let ys = [0.5, 1.0, 2.0, -1.5];
        assert!(dtmul_check(&ctx("z2:d=1", "0"), &Poly::one(1), &ys).unwrap() <= 1e-10);
        assert!(dtmul_check(&ctx("z2:d=1", "1/2"), &Poly::one(1), &ys).unwrap() <= 1e-8);
        assert!(dtmul_check(&ctx("z2:d=1", "1"), &p("x1^2", 1), &ys).unwrap() <= 1e-8);
    }

    #[test]
    fn doubling_is_stable() {
        let c = ctx("z2:d=2", "1/2,1");
        let v = truncation_doubling(&c, &p("x1^2*x2", 2), &[2.5, 1.5]).unwrap();
        assert!(v < 1e-12, "{v}");
    }

    #[test]
    fn doubling_at_a_zero_of_the_transform() {
        // F(x^2 e^{-x^2/2})(y) = (1 - y^2) e^{-y^2/2} vanishes at y = 1
        let c = ctx("z2:d=1", "0");
        let (g, _) = dunkl_transform_gauss_poly_with(&c, &p("x1^2", 1), &[-1.0], None).unwrap();
        assert!(g.norm() < 1e-15);
        assert!(truncation_doubling(&c, &p("x1^2", 1), &[-1.0]).unwrap() < 1e-12);
    }

    #[test]
    fn general_systems_rejected() {
        let c = ctx("b:d=2", "1");
        assert_eq!(sphere_pairing_mean(&c, &Poly::one(2), &[0.0, 0.0]), Err(DunklError::NotZ2d));
    }
}
