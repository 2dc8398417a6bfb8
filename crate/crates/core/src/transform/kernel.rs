//! The one-dimensional Dunkl kernel series and its product over `Z2^d`.
//!
//! For `Z2` with multiplicity `kappa`, `E(x, y) = sum_n a_n (x y)^n` with
//! `a_0 = 1`, `a_n = a_{n-1} / (n + 2 kappa [n odd])`; the recursion is forced
//! by `D x^n = (n + 2 kappa [n odd]) x^{n-1}` and `D E = y E`.

use num_complex::Complex64;
use num_traits::{One, Zero};
use statrs::function::gamma::ln_gamma;

use crate::error::{DunklError, Result};
use crate::rational::{int, is_nonnegative, to_f64, Rational};

pub const TRUNCATION_CAP: usize = 120;
const TAIL: f64 = 1e-16;

/// Exact one-dimensional recursion factor `n + 2 kappa [n odd]`.
pub fn recursion_factor(kappa: &Rational, n: usize) -> Rational {
    let mut f = int(n as i64);
    if n % 2 == 1 {
        f += int(2) * kappa;
    }
    f
}

#[derive(Clone, Debug)]
pub struct KernelSeries1D {
    kappa: Rational,
    exact: Vec<Rational>,
    coeffs: Vec<f64>,
}

impl KernelSeries1D {
    /// Coefficients `a_0..=a_order`.
    pub fn new(kappa: &Rational, order: usize) -> Result<Self> {
        if !is_nonnegative(kappa) {
            return Err(DunklError::NegativeMultiplicity(kappa.to_string()));
        }
        let mut exact = Vec::with_capacity(order + 1);
        exact.push(Rational::one());
        for n in 1..=order {
            let prev = &exact[n - 1];
            exact.push(prev / recursion_factor(kappa, n));
        }
        let coeffs = exact.iter().map(to_f64).collect();
        Ok(KernelSeries1D { kappa: kappa.clone(), exact, coeffs })
    }

    pub fn kappa(&self) -> &Rational {
        &self.kappa
    }

    pub fn order(&self) -> usize {
        self.exact.len() - 1
    }

    pub fn coeff(&self, n: usize) -> f64 {
        self.coeffs[n]
    }

    pub fn exact_coeff(&self, n: usize) -> &Rational {
        &self.exact[n]
    }

    /// `sum_n a_n z^n` by Horner.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.coeffs.iter().rev().fold(Complex64::zero(), |acc, &a| acc * z + a)
    }

    /// Largest relative defect of `a_n (n + 2 kappa [n odd]) = a_{n-1}` in
    /// floating point.
    pub fn recursion_residual(&self) -> f64 {
        let kappa = to_f64(&self.kappa);
        (1..self.coeffs.len())
            .map(|n| {
                let f = n as f64 + if n % 2 == 1 { 2.0 * kappa } else { 0.0 };
                ((self.coeffs[n] * f - self.coeffs[n - 1]) / self.coeffs[n - 1]).abs()
            })
            .fold(0.0, f64::max)
    }

    /// Relative defect of the eigen-property `D_x E(x, y) = y E(x, y)` at a
    /// point, with `D_x` applied term by term to the truncated series.
    pub fn eigen_residual(&self, x: f64, y: Complex64) -> f64 {
        let kappa = to_f64(&self.kappa);
        let n_max = self.order();
        let mut lhs = Complex64::zero();
        let mut rhs = Complex64::zero();
        for n in 1..=n_max {
            let f = n as f64 + if n % 2 == 1 { 2.0 * kappa } else { 0.0 };
            lhs += self.coeffs[n] * f * x.powi(n as i32 - 1) * y.powi(n as i32);
        }
        // y * sum_{n < N} a_n x^n y^n: the same truncation as the left side
        for n in 0..n_max {
            rhs += self.coeffs[n] * x.powi(n as i32) * y.powi(n as i32 + 1);
        }
        let scale = rhs.norm().max(lhs.norm()).max(f64::MIN_POSITIVE);
        (lhs - rhs).norm() / scale
    }
}

/// Smallest `N >= 1` with `bound^N / N! < 1e-16`; fails past `cap`.
pub fn truncation_order_capped(bound: f64, cap: usize) -> Result<usize> {
    if !bound.is_finite() || bound < 0.0 {
        return Err(DunklError::OutOfRange(format!("truncation bound {bound}")));
    }
    let target = TAIL.ln();
    for n in 1..=cap {
        if bound == 0.0 {
            return Ok(n);
        }
        let nf = n as f64;
        if nf * bound.ln() - ln_gamma(nf + 1.0) < target {
            return Ok(n);
        }
    }
    Err(DunklError::TruncationFailure(cap))
}

pub fn truncation_order(bound: f64) -> Result<usize> {
    truncation_order_capped(bound, TRUNCATION_CAP)
}

/// `E_kappa(x, y) = prod_j sum_n a_n(kappa_j) (x_j y_j)^n` for `Z2^d`.
pub fn dunkl_kernel_z2d(kappa: &[Rational], x: &[f64], y: &[Complex64]) -> Result<Complex64> {
    if kappa.len() != x.len() || x.len() != y.len() {
        return Err(DunklError::DimensionMismatch { expected: kappa.len(), found: x.len().max(y.len()) });
    }
    let bound = x.iter().zip(y).map(|(a, b)| (a * b.norm()).abs()).fold(0.0, f64::max);
    let order = truncation_order(bound)?;
    let mut out = Complex64::one();
    for ((k, &xj), &yj) in kappa.iter().zip(x).zip(y) {
        out *= KernelSeries1D::new(k, order)?.eval(yj * xj);
    }
    Ok(out)
}
