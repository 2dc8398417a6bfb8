//! Sparse multivariate polynomials over the rationals.
//!
//! Terms are kept in a `BTreeMap` keyed by exponent vectors ordered
//! graded-lexicographically, so iteration order is deterministic and the
//! printed form is canonical. No stored coefficient is ever zero.

mod parse;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::error::{DunklError, Result};
use crate::rational::{to_f64, Rational};

pub use parse::parse_poly;

/// Exponent vector `[e1, ..., ed]` for `x1^e1 ... xd^ed`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(dim: usize) -> Self {
        Monomial(vec![0; dim])
    }

    pub fn var(dim: usize, i: usize) -> Self {
        let mut e = vec![0; dim];
        e[i] = 1;
        Monomial(e)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn is_even(&self) -> bool {
        self.0.iter().all(|e| e % 2 == 0)
    }
}

impl Ord for Monomial {
    /// Graded lexicographic: total degree first, then `x1` dominates `x2` ...
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly {
    dim: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl Poly {
    pub fn zero(dim: usize) -> Self {
        Poly {
            dim,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(dim: usize, c: Rational) -> Self {
        let mut p = Poly::zero(dim);
        p.add_term(Monomial::one(dim), c);
        p
    }

    pub fn one(dim: usize) -> Self {
        Poly::constant(dim, Rational::one())
    }

    /// The coordinate function `x_{i+1}` (zero-based index).
    pub fn var(dim: usize, i: usize) -> Self {
        Poly::monomial(Monomial::var(dim, i), Rational::one())
    }

    pub fn monomial(m: Monomial, c: Rational) -> Self {
        let mut p = Poly::zero(m.dim());
        p.add_term(m, c);
        p
    }

    /// The linear form `<a, x>`.
    pub fn linear(a: &[Rational]) -> Self {
        let dim = a.len();
        let mut p = Poly::zero(dim);
        for (i, c) in a.iter().enumerate() {
            p.add_term(Monomial::var(dim, i), c.clone());
        }
        p
    }

    /// `||x||^2 = x1^2 + ... + xd^2`.
    pub fn norm_sq(dim: usize) -> Self {
        let mut p = Poly::zero(dim);
        for i in 0..dim {
            let mut e = vec![0; dim];
            e[i] = 2;
            p.add_term(Monomial(e), Rational::one());
        }
        p
    }

    /// `||x||^(2n)` expanded.
    pub fn norm_sq_pow(dim: usize, n: u32) -> Self {
        let base = Poly::norm_sq(dim);
        let mut acc = Poly::one(dim);
        for _ in 0..n {
            acc = &acc * &base;
        }
        acc
    }

    pub fn from_terms(dim: usize, terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut p = Poly::zero(dim);
        for (m, c) in terms {
            assert_eq!(m.dim(), dim, "exponent vector length must equal dim");
            p.add_term(m, c);
        }
        p
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Adds `c * m` in place, keeping the representation canonical.
    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, other: &Poly, c: &Rational) {
        debug_assert_eq!(self.dim, other.dim);
        if c.is_zero() {
            return;
        }
        for (m, a) in &other.terms {
            self.add_term(m.clone(), a * c);
        }
    }

    /// `self += c * x^shift * other`.
    pub fn add_scaled_shifted(&mut self, other: &Poly, c: &Rational, shift: &Monomial) {
        if c.is_zero() {
            return;
        }
        for (m, a) in &other.terms {
            self.add_term(m.mul(shift), a * c);
        }
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.dim);
        }
        Poly {
            dim: self.dim,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    fn check_dim(&self, other: &Poly) -> Result<()> {
        if self.dim != other.dim {
            return Err(DunklError::DimensionMismatch {
                expected: self.dim,
                found: other.dim,
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Poly) -> Result<Poly> {
        self.check_dim(other)?;
        Ok(self + other)
    }

    pub fn checked_sub(&self, other: &Poly) -> Result<Poly> {
        self.check_dim(other)?;
        Ok(self - other)
    }

    pub fn checked_mul(&self, other: &Poly) -> Result<Poly> {
        self.check_dim(other)?;
        Ok(self * other)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(Monomial::degree)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// Degree of a homogeneous polynomial (`0` for the zero polynomial).
    pub fn homogeneous_degree(&self) -> Result<u32> {
        if !self.is_homogeneous() {
            return Err(DunklError::NotHomogeneous);
        }
        Ok(self.degree().unwrap_or(0))
    }

    /// Value at the origin.
    pub fn constant_term(&self) -> Rational {
        self.coeff(&Monomial::one(self.dim))
    }

    pub fn eval(&self, x: &[Rational]) -> Rational {
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (xi, &e) in x.iter().zip(&m.0) {
                if e > 0 {
                    t *= crate::rational::pow_int(xi, e);
                }
            }
            acc += t;
        }
        acc
    }

    pub fn eval_f64(&self, x: &[f64]) -> f64 {
        self.terms
            .iter()
            .map(|(m, c)| {
                m.0.iter()
                    .zip(x)
                    .fold(to_f64(c), |acc, (&e, xi)| acc * xi.powi(e as i32))
            })
            .sum()
    }

    pub fn partial(&self, j: usize) -> Poly {
        let mut out = Poly::zero(self.dim);
        for (m, c) in &self.terms {
            let e = m.0[j];
            if e == 0 {
                continue;
            }
            let mut n = m.clone();
            n.0[j] -= 1;
            out.add_term(n, c * Rational::from_integer(e.into()));
        }
        out
    }

    /// Directional derivative `<xi, grad> p`.
    pub fn directional(&self, xi: &[Rational]) -> Poly {
        let mut out = Poly::zero(self.dim);
        for (j, c) in xi.iter().enumerate() {
            if !c.is_zero() {
                out.add_scaled(&self.partial(j), c);
            }
        }
        out
    }

    pub fn laplacian(&self) -> Poly {
        let mut out = Poly::zero(self.dim);
        for (m, c) in &self.terms {
            for j in 0..self.dim {
                let e = m.0[j];
                if e >= 2 {
                    let mut n = m.clone();
                    n.0[j] -= 2;
                    out.add_term(n, c * Rational::from_integer((e * (e - 1)).into()));
                }
            }
        }
        out
    }

    /// Euler operator `sum_l x_l d_l`.
    pub fn euler(&self) -> Poly {
        Poly {
            dim: self.dim,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c * Rational::from_integer(m.degree().into())))
                .filter(|(_, c)| !c.is_zero())
                .collect(),
        }
    }

    pub fn homogeneous_part(&self, degree: u32) -> Poly {
        Poly {
            dim: self.dim,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == degree)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Nonzero homogeneous components in increasing degree.
    pub fn homogeneous_components(&self) -> Vec<(u32, Poly)> {
        let mut out: Vec<(u32, Poly)> = Vec::new();
        for (m, c) in &self.terms {
            let d = m.degree();
            match out.last_mut() {
                Some((deg, p)) if *deg == d => {
                    p.terms.insert(m.clone(), c.clone());
                }
                _ => out.push((d, Poly::monomial(m.clone(), c.clone()))),
            }
        }
        out
    }

    /// `p(r_alpha x)` for the reflection in the hyperplane orthogonal to `alpha`.
    pub fn compose_reflection(&self, alpha: &[Rational]) -> Result<Poly> {
        let refl = Reflection::new(alpha)?;
        Ok(refl.apply(self))
    }

    /// Exact quotient `p / <alpha, x>`; fails if the division leaves a remainder.
    pub fn divide_exact_by_linear(&self, alpha: &[Rational]) -> Result<Poly> {
        if alpha.len() != self.dim {
            return Err(DunklError::DimensionMismatch {
                expected: self.dim,
                found: alpha.len(),
            });
        }
        // pivot on the coordinate with the largest |alpha_k|
        let pivot = alpha
            .iter()
            .enumerate()
            .filter(|(_, a)| !a.is_zero())
            .max_by(|(_, a), (_, b)| a.abs().cmp(&b.abs()))
            .map(|(k, _)| k)
            .ok_or(DunklError::ZeroRoot)?;
        let lead = &alpha[pivot];
        let mut tail = alpha.to_vec();
        tail[pivot] = Rational::zero();
        let tail = Poly::linear(&tail);
        let quotient = synthetic_divide(self, pivot, 1, &tail, lead).ok_or_else(|| {
            DunklError::NonzeroRemainder {
                divisor: format!("<{}, x>", fmt_vec(alpha)),
            }
        })?;
        Ok(quotient)
    }

    /// Exact quotient `p / ||x||^2`.
    pub fn divide_exact_by_norm_sq(&self) -> Result<Poly> {
        let mut tail = Poly::norm_sq(self.dim);
        let mut e = vec![0; self.dim];
        e[0] = 2;
        tail.terms.remove(&Monomial(e));
        synthetic_divide(self, 0, 2, &tail, &Rational::one()).ok_or_else(|| {
            DunklError::NonzeroRemainder {
                divisor: "||x||^2".into(),
            }
        })
    }

    /// Number of times `||x||^2` divides `p` exactly, with the cofactor.
    pub fn strip_norm_sq(&self) -> (u32, Poly) {
        let mut k = 0;
        let mut cur = self.clone();
        if cur.is_zero() {
            return (0, cur);
        }
        while cur.degree().unwrap_or(0) >= 2 {
            match cur.divide_exact_by_norm_sq() {
                Ok(q) => {
                    cur = q;
                    k += 1;
                }
                Err(_) => break,
            }
        }
        (k, cur)
    }

    /// Polynomial with all exponents of coordinate `j` removed; helper for
    /// grouping by a pivot variable.
    fn split_by_var(&self, j: usize) -> Vec<Poly> {
        let mut parts: Vec<Poly> = Vec::new();
        for (m, c) in &self.terms {
            let e = m.0[j] as usize;
            if parts.len() <= e {
                parts.resize_with(e + 1, || Poly::zero(self.dim));
            }
            let mut n = m.clone();
            n.0[j] = 0;
            parts[e].terms.insert(n, c.clone());
        }
        parts
    }
}

/// Divides `p` by `lead * x_pivot^step + tail`, where `tail` does not involve
/// `x_pivot`. Returns `None` on a nonzero remainder.
fn synthetic_divide(p: &Poly, pivot: usize, step: usize, tail: &Poly, lead: &Rational) -> Option<Poly> {
    let mut coeffs = p.split_by_var(pivot);
    let mut quotient = Poly::zero(p.dim);
    let inv = lead.recip();
    let mut e = coeffs.len();
    while e > step {
        e -= 1;
        let c = std::mem::replace(&mut coeffs[e], Poly::zero(p.dim));
        if c.is_zero() {
            continue;
        }
        let q = c.scale(&inv);
        let mut shift = Monomial::one(p.dim);
        shift.0[pivot] = (e - step) as u32;
        quotient.add_scaled_shifted(&q, &Rational::one(), &shift);
        let qt = &q * tail;
        coeffs[e - step].add_scaled(&qt, &-Rational::one());
    }
    if coeffs.iter().take(step).any(|c| !c.is_zero()) {
        return None;
    }
    Some(quotient)
}

fn fmt_vec(v: &[Rational]) -> String {
    v.iter()
        .map(crate::rational::fmt_rational)
        .collect::<Vec<_>>()
        .join(",")
}

/// The reflection `x -> x - 2 <alpha,x>/<alpha,alpha> alpha` as a linear
/// substitution, with a fast path for signed permutations (every catalog
/// root system reflects by one).
#[derive(Clone, Debug)]
pub struct Reflection {
    /// Row i gives `(r x)_i` as a linear form in x.
    rows: Vec<Vec<Rational>>,
    signed_perm: Option<Vec<(usize, bool)>>,
}

impl Reflection {
    pub fn new(alpha: &[Rational]) -> Result<Self> {
        let norm: Rational = alpha.iter().map(|a| a * a).sum();
        if norm.is_zero() {
            return Err(DunklError::ZeroRoot);
        }
        let d = alpha.len();
        let two = Rational::from_integer(2.into());
        let rows: Vec<Vec<Rational>> = (0..d)
            .map(|i| {
                (0..d)
                    .map(|k| {
                        let delta = if i == k { Rational::one() } else { Rational::zero() };
                        delta - &two * &alpha[i] * &alpha[k] / &norm
                    })
                    .collect()
            })
            .collect();
        let signed_perm = rows
            .iter()
            .map(|row| {
                let nz: Vec<usize> = (0..d).filter(|&k| !row[k].is_zero()).collect();
                match nz.as_slice() {
                    [k] if row[*k].abs().is_one() => Some((*k, row[*k].is_negative())),
                    _ => None,
                }
            })
            .collect::<Option<Vec<_>>>();
        Ok(Reflection { rows, signed_perm })
    }

    pub fn apply(&self, p: &Poly) -> Poly {
        let d = p.dim;
        if let Some(perm) = &self.signed_perm {
            let mut out = Poly::zero(d);
            for (m, c) in &p.terms {
                let mut e = vec![0u32; d];
                let mut neg = false;
                for (i, &(k, s)) in perm.iter().enumerate() {
                    e[k] += m.0[i];
                    if s && m.0[i] % 2 == 1 {
                        neg = !neg;
                    }
                }
                out.add_term(Monomial(e), if neg { -c.clone() } else { c.clone() });
            }
            return out;
        }
        let forms: Vec<Poly> = self.rows.iter().map(|r| Poly::linear(r)).collect();
        let mut powers: Vec<Vec<Poly>> = forms.iter().map(|f| vec![Poly::one(d), f.clone()]).collect();
        let mut out = Poly::zero(d);
        for (m, c) in &p.terms {
            let mut t = Poly::constant(d, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().unwrap() * &forms[i];
                    powers[i].push(next);
                }
                t = &t * &powers[i][e as usize];
            }
            out.add_scaled(&t, &Rational::one());
        }
        out
    }

    pub fn apply_point(&self, x: &[Rational]) -> Vec<Rational> {
        self.rows
            .iter()
            .map(|row| row.iter().zip(x).map(|(a, b)| a * b).sum())
            .collect()
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        let mut out = self.clone();
        out.add_scaled(rhs, &Rational::one());
        out
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        let mut out = self.clone();
        out.add_scaled(rhs, &-Rational::one());
        out
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        let mut out = Poly::zero(self.dim);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.scale(&-Rational::one())
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(self, rhs: Poly) -> Poly {
        &self + &rhs
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(self, rhs: Poly) -> Poly {
        &self - &rhs
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        &self * &rhs
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&parse::format_poly(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    fn p(s: &str, dim: usize) -> Poly {
        parse_poly(s, dim).unwrap()
    }

    #[test]
    fn ring_examples() {
        assert_eq!(&p("x1+x2", 2) * &p("x1-x2", 2), p("x1^2-x2^2", 2));
        assert_eq!(&p("x1+x2", 2) + &Poly::zero(2), p("x1+x2", 2));
        assert_eq!(&p("1/2*x1", 1) * &p("2/3*x1", 1), p("1/3*x1^2", 1));
        assert!(p("x1", 2).checked_add(&p("x1", 3)).is_err());
    }

    #[test]
    fn derivatives() {
        assert_eq!(p("x1^3", 1).partial(0), p("3*x1^2", 1));
        assert_eq!(p("x1*x2", 2).directional(&[int(1), int(1)]), p("x1+x2", 2));
        assert!(p("7/3", 2).directional(&[int(1), int(5)]).is_zero());
    }

    #[test]
    fn reflection_composition() {
        assert_eq!(p("x1^2", 2).compose_reflection(&[int(1), int(0)]).unwrap(), p("x1^2", 2));
        assert_eq!(p("x1", 2).compose_reflection(&[int(1), int(-1)]).unwrap(), p("x2", 2));
        assert_eq!(p("x1", 1).compose_reflection(&[int(0)]), Err(DunklError::ZeroRoot));
        // non-permutation reflection: alpha = (1, 2)
        let a = [int(1), int(2)];
        let q = p("x1^2*x2 - 3*x2 + 1/2", 2);
        let r = q.compose_reflection(&a).unwrap();
        assert_eq!(r.compose_reflection(&a).unwrap(), q);
        assert_ne!(r, q);
    }

    #[test]
    fn linear_division() {
        let a = [int(1), int(-1)];
        assert_eq!(p("x1^2-x2^2", 2).divide_exact_by_linear(&a).unwrap(), p("x1+x2", 2));
        let cube = p("x1^3 - 3*x1^2*x2 + 3*x1*x2^2 - x2^3", 2);
        assert_eq!(cube.divide_exact_by_linear(&a).unwrap(), p("x1^2-2*x1*x2+x2^2", 2));
        assert!(matches!(
            p("x1", 2).divide_exact_by_linear(&a),
            Err(DunklError::NonzeroRemainder { .. })
        ));
        let b = [frac(1, 3), int(2), int(-5)];
        let q = p("x1*x3 - 2/7*x2^2 + 4", 3);
        let prod = &q * &Poly::linear(&b);
        assert_eq!(prod.divide_exact_by_linear(&b).unwrap(), q);
    }

    #[test]
    fn norm_sq_division() {
        let q = p("x1*x2 - 3*x3^2", 3);
        let prod = &q * &Poly::norm_sq(3);
        assert_eq!(prod.divide_exact_by_norm_sq().unwrap(), q);
        assert!(p("x1^2", 2).divide_exact_by_norm_sq().is_err());
        assert_eq!(p("x1^2", 1).divide_exact_by_norm_sq().unwrap(), Poly::one(1));
        let (k, rest) = (&Poly::norm_sq_pow(2, 2) * &p("x1", 2)).strip_norm_sq();
        assert_eq!((k, rest), (2, p("x1", 2)));
    }

    #[test]
    fn classical_laplacian() {
        assert_eq!(p("x1^2+x2^2", 2).laplacian(), p("4", 2));
        assert!(p("x1^2-x2^2", 2).laplacian().is_zero());
        assert!(p("x1*x2", 2).laplacian().is_zero());
    }

    #[test]
    fn components() {
        let comps = p("x1^2+x2", 2).homogeneous_components();
        assert_eq!(comps, vec![(1, p("x2", 2)), (2, p("x1^2", 2))]);
        assert!(Poly::zero(2).homogeneous_components().is_empty());
        let h = p("x1^3 - x1*x2^2", 2);
        assert_eq!(h.homogeneous_components(), vec![(3, h.clone())]);
        assert_eq!(h.euler(), h.scale(&int(3)));
    }
}
