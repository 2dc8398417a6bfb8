//! Radially weighted polynomials.
//!
//! A [`RadialProfile`] is `sum_j c_j r^(s+2j) exp(a r^2)` with rational `s`,
//! `a` and `c_j`; this class is closed under `(1/r) d/dr`. A
//! [`WeightedFunction`] is a finite sum of polynomial times profile and is
//! closed under every Dunkl operator, because radial factors are
//! G-invariant:
//!
//! `D_xi (p phi) = (D_xi p) phi + <xi,x> p (1/r d/dr) phi`.
//!
//! Functions are treated formally off the origin, so negative and fractional
//! powers of `r` are fine.

use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::dunkl::{DunklContext, DunklTarget};
use crate::error::{DunklError, Result};
use crate::poly::Poly;
use crate::rational::{factorial, fmt_rational, int, parse_rational, pow_int, to_f64, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RadialProfile {
    base: Rational,
    gauss: Rational,
    /// offset j -> c_j for the term c_j r^(base + 2j)
    coeffs: BTreeMap<i64, Rational>,
}

impl RadialProfile {
    pub fn zero() -> Self {
        RadialProfile {
            base: Rational::zero(),
            gauss: Rational::zero(),
            coeffs: BTreeMap::new(),
        }
    }

    /// `c r^t exp(a r^2)`.
    pub fn monomial(c: Rational, t: Rational, a: Rational) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(0, c);
        }
        RadialProfile {
            base: t,
            gauss: a,
            coeffs,
        }
    }

    /// `r^s`.
    pub fn power(s: Rational) -> Self {
        Self::monomial(Rational::one(), s, Rational::zero())
    }

    /// `exp(a r^2)`.
    pub fn gaussian(a: Rational) -> Self {
        Self::monomial(Rational::one(), Rational::zero(), a)
    }

    /// `r^s exp(a r^2)`.
    pub fn power_gaussian(s: Rational, a: Rational) -> Self {
        Self::monomial(Rational::one(), s, a)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn gauss_coeff(&self) -> &Rational {
        &self.gauss
    }

    pub fn base_exponent(&self) -> &Rational {
        &self.base
    }

    /// `(exponent, coefficient)` pairs in increasing exponent.
    pub fn terms(&self) -> impl Iterator<Item = (Rational, &Rational)> + '_ {
        self.coeffs
            .iter()
            .map(move |(j, c)| (&self.base + int(2 * j), c))
    }

    fn normalized(mut self) -> Self {
        self.coeffs.retain(|_, c| !c.is_zero());
        match self.coeffs.keys().next().copied() {
            None => RadialProfile::zero(),
            Some(0) => self,
            Some(k) => {
                self.base += int(2 * k);
                self.coeffs = self.coeffs.into_iter().map(|(j, c)| (j - k, c)).collect();
                self
            }
        }
    }

    /// Same Gaussian coefficient and exponents differing by an even integer.
    pub fn mergeable(&self, other: &Self) -> bool {
        if self.is_zero() || other.is_zero() {
            return true;
        }
        if self.gauss != other.gauss {
            return false;
        }
        let diff: Rational = (&self.base - &other.base) / int(2);
        diff.is_integer()
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        if self.is_zero() {
            return Ok(other.clone());
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        if !self.mergeable(other) {
            return Err(DunklError::Invalid(format!(
                "profiles `{self}` and `{other}` are not in the same class"
            )));
        }
        let base = if self.base <= other.base { self.base.clone() } else { other.base.clone() };
        let mut coeffs: BTreeMap<i64, Rational> = BTreeMap::new();
        for p in [self, other] {
            let shift = ((&p.base - &base) / int(2)).to_integer().to_i64().unwrap();
            for (j, c) in &p.coeffs {
                *coeffs.entry(j + shift).or_insert_with(Rational::zero) += c;
            }
        }
        Ok(RadialProfile {
            base,
            gauss: self.gauss.clone(),
            coeffs,
        }
        .normalized())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        RadialProfile {
            base: self.base.clone(),
            gauss: self.gauss.clone(),
            coeffs: self.coeffs.iter().map(|(j, v)| (*j, v * c)).collect(),
        }
        .normalized()
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut coeffs: BTreeMap<i64, Rational> = BTreeMap::new();
        for (i, a) in &self.coeffs {
            for (j, b) in &other.coeffs {
                *coeffs.entry(i + j).or_insert_with(Rational::zero) += a * b;
            }
        }
        RadialProfile {
            base: &self.base + &other.base,
            gauss: &self.gauss + &other.gauss,
            coeffs,
        }
        .normalized()
    }

    /// Applies `(1/r) d/dr` `n` times:
    /// `c r^t e^{a r^2} -> (c t r^{t-2} + 2 a c r^t) e^{a r^2}`.
    pub fn inv_r_ddr(&self, n: u32) -> Self {
        let mut cur = self.clone();
        for _ in 0..n {
            let mut coeffs: BTreeMap<i64, Rational> = BTreeMap::new();
            for (j, c) in &cur.coeffs {
                let t = &cur.base + int(2 * j);
                *coeffs.entry(j - 1).or_insert_with(Rational::zero) += c * &t;
                *coeffs.entry(*j).or_insert_with(Rational::zero) += c * &cur.gauss * int(2);
            }
            cur = RadialProfile {
                base: cur.base.clone(),
                gauss: cur.gauss.clone(),
                coeffs,
            }
            .normalized();
        }
        cur
    }

    /// `d/dr`, which moves the base exponent by one.
    pub fn ddr(&self) -> Self {
        let mut coeffs: BTreeMap<i64, Rational> = BTreeMap::new();
        for (j, c) in &self.coeffs {
            let t = &self.base + int(2 * j);
            *coeffs.entry(*j).or_insert_with(Rational::zero) += c * &t;
            *coeffs.entry(j + 1).or_insert_with(Rational::zero) += c * &self.gauss * int(2);
        }
        RadialProfile {
            base: &self.base - Rational::one(),
            gauss: self.gauss.clone(),
            coeffs,
        }
        .normalized()
    }

    /// Multiplication by `r^k`.
    pub fn shift(&self, k: &Rational) -> Self {
        RadialProfile {
            base: &self.base + k,
            ..self.clone()
        }
    }

    pub fn eval_f64(&self, r: f64) -> f64 {
        let g = (to_f64(&self.gauss) * r * r).exp();
        self.terms()
            .map(|(t, c)| to_f64(c) * r.powf(to_f64(&t)))
            .sum::<f64>()
            * g
    }

    /// Parses sums of terms like `3/2*r^(7/2)*exp(-1/2*r^2)`; all terms must
    /// lie in one class (shared Gaussian factor, exponents differing by even
    /// integers).
    pub fn parse(text: &str) -> Result<Self> {
        let src: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if src.is_empty() {
            return Err(DunklError::Parse {
                pos: 0,
                msg: "empty profile".into(),
            });
        }
        let mut acc = RadialProfile::zero();
        let mut start = 0;
        let bytes = src.as_bytes();
        let mut depth = 0;
        let mut pieces: Vec<(usize, usize)> = Vec::new();
        for (i, &b) in bytes.iter().enumerate() {
            match b {
                b'(' => depth += 1,
                b')' => depth -= 1,
                b'+' | b'-' if depth == 0 && i > start => {
                    // a sign directly after '^' or '*' belongs to the factor
                    let prev = bytes[i - 1];
                    if prev != b'^' && prev != b'*' {
                        pieces.push((start, i));
                        start = i;
                    }
                }
                _ => {}
            }
        }
        pieces.push((start, src.len()));
        for (s, e) in pieces {
            let term = parse_profile_term(&src[s..e], s)?;
            acc = acc.checked_add(&term)?;
        }
        Ok(acc)
    }
}

fn parse_profile_term(term: &str, offset: usize) -> Result<RadialProfile> {
    let err = |msg: &str| DunklError::Parse {
        pos: offset,
        msg: format!("{msg} in `{term}`"),
    };
    let (mut sign, body) = match term.as_bytes().first() {
        Some(b'-') => (-Rational::one(), &term[1..]),
        Some(b'+') => (Rational::one(), &term[1..]),
        _ => (Rational::one(), term),
    };
    if body.is_empty() {
        return Err(err("empty term"));
    }
    let mut t = Rational::zero();
    let mut a = Rational::zero();
    for factor in split_top_level(body, b'*') {
        if let Some(inner) = factor.strip_prefix("exp(").and_then(|f| f.strip_suffix(')')) {
            // a*r^2, optionally written r^2/q
            let (coef, div) = match inner.split_once("r^2/") {
                Some((c, q)) => (c, parse_rational(q).map_err(|_| err("bad Gaussian divisor"))?),
                None => (
                    inner.strip_suffix("r^2").ok_or_else(|| err("exp argument must be `a*r^2`"))?,
                    Rational::one(),
                ),
            };
            if div.is_zero() {
                return Err(err("bad Gaussian divisor"));
            }
            let coef = coef.strip_suffix('*').unwrap_or(coef);
            a += match coef {
                "" | "+" => Rational::one(),
                "-" => -Rational::one(),
                c => parse_rational(c).map_err(|_| err("bad Gaussian coefficient"))?,
            } / div;
        } else if let Some(exp) = factor.strip_prefix("r^") {
            let exp = exp.strip_prefix('(').and_then(|e| e.strip_suffix(')')).unwrap_or(exp);
            t += parse_rational(exp).map_err(|_| err("bad exponent"))?;
        } else if factor == "r" {
            t += Rational::one();
        } else {
            sign *= parse_rational(factor).map_err(|_| err("unknown factor"))?;
        }
    }
    Ok(RadialProfile::monomial(sign, t, a))
}

fn split_top_level(s: &str, sep: u8) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0;
    let mut start = 0;
    for (i, b) in s.bytes().enumerate() {
        match b {
            b'(' => depth += 1,
            b')' => depth -= 1,
            _ if b == sep && depth == 0 => {
                out.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(&s[start..]);
    out
}

fn fmt_radial_factor(t: &Rational, a: &Rational) -> Vec<String> {
    let mut parts = Vec::new();
    if !t.is_zero() {
        if t.is_integer() && t.is_positive() {
            parts.push(format!("r^{}", fmt_rational(t)));
        } else {
            parts.push(format!("r^({})", fmt_rational(t)));
        }
    }
    if !a.is_zero() {
        if a.is_one() {
            parts.push("exp(r^2)".into());
        } else if (-a).is_one() {
            parts.push("exp(-r^2)".into());
        } else {
            parts.push(format!("exp({}*r^2)", fmt_rational(a)));
        }
    }
    parts
}

impl fmt::Display for RadialProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (t, c) in self.terms() {
            let mut parts = fmt_radial_factor(&t, &self.gauss);
            let neg = c.is_negative();
            let abs = c.abs();
            if !abs.is_one() || parts.is_empty() {
                parts.insert(0, fmt_rational(&abs));
            }
            let body = parts.join("*");
            match (first, neg) {
                (true, true) => write!(f, "-{body}")?,
                (true, false) => write!(f, "{body}")?,
                (false, true) => write!(f, " - {body}")?,
                (false, false) => write!(f, " + {body}")?,
            }
            first = false;
        }
        Ok(())
    }
}

/// Class of `r^t e^{a r^2}` up to even shifts of `t`.
fn class_of(a: &Rational, t: &Rational) -> (Rational, Rational) {
    let two = int(2);
    let q = (t / &two).floor();
    (a.clone(), t - q * two)
}

/// Finite sum of `P(x) r^t exp(a r^2)`, keyed by `(a, t)`.
#[derive(Clone, Debug)]
pub struct WeightedFunction {
    dim: usize,
    terms: BTreeMap<(Rational, Rational), Poly>,
}

impl WeightedFunction {
    pub fn zero(dim: usize) -> Self {
        WeightedFunction {
            dim,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_poly(p: Poly) -> Self {
        Self::from_parts(p, &RadialProfile::power(Rational::zero()))
    }

    /// `p * phi`.
    pub fn from_parts(p: Poly, phi: &RadialProfile) -> Self {
        let mut w = WeightedFunction::zero(p.dim());
        for (t, c) in phi.terms() {
            w.add_poly(phi.gauss.clone(), t, &p, c);
        }
        w
    }

    pub fn radial(dim: usize, phi: &RadialProfile) -> Self {
        Self::from_parts(Poly::one(dim), phi)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    fn add_poly(&mut self, a: Rational, t: Rational, p: &Poly, c: &Rational) {
        if p.is_zero() || c.is_zero() {
            return;
        }
        let key = (a, t);
        let entry = self.terms.entry(key.clone()).or_insert_with(|| Poly::zero(p.dim()));
        entry.add_scaled(p, c);
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn add_scaled(&mut self, other: &WeightedFunction, c: &Rational) {
        for ((a, t), p) in &other.terms {
            self.add_poly(a.clone(), t.clone(), p, c);
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = WeightedFunction::zero(self.dim);
        out.add_scaled(self, c);
        out
    }

    pub fn sub(&self, other: &WeightedFunction) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, &-Rational::one());
        out
    }

    /// Multiplication by `r^k exp(b r^2)`.
    pub fn mul_radial(&self, k: &Rational, b: &Rational) -> Self {
        WeightedFunction {
            dim: self.dim,
            terms: self
                .terms
                .iter()
                .map(|((a, t), p)| ((a + b, t + k), p.clone()))
                .collect(),
        }
    }

    pub fn mul_poly(&self, q: &Poly) -> Self {
        let mut out = WeightedFunction::zero(self.dim);
        for ((a, t), p) in &self.terms {
            out.add_poly(a.clone(), t.clone(), &(p * q), &Rational::one());
        }
        out
    }

    /// `D_{j+1}` in the weighted calculus.
    pub fn dunkl_coord(&self, ctx: &DunklContext, j: usize) -> Self {
        let xj = Poly::var(self.dim, j);
        let mut out = WeightedFunction::zero(self.dim);
        for ((a, t), p) in &self.terms {
            out.add_poly(a.clone(), t.clone(), &ctx.d(j, p), &Rational::one());
            if t.is_zero() && a.is_zero() {
                continue;
            }
            let xp = &xj * p;
            if !t.is_zero() {
                out.add_poly(a.clone(), t - int(2), &xp, t);
            }
            if !a.is_zero() {
                out.add_poly(a.clone(), t.clone(), &xp, &(a * int(2)));
            }
        }
        out
    }

    /// Collapses every class `(a, t mod 2)` onto its smallest exponent.
    fn collapsed(&self) -> BTreeMap<(Rational, Rational), (Rational, Poly)> {
        let mut classes: BTreeMap<(Rational, Rational), Vec<(&Rational, &Poly)>> = BTreeMap::new();
        for ((a, t), p) in &self.terms {
            classes.entry(class_of(a, t)).or_default().push((t, p));
        }
        let mut out = BTreeMap::new();
        for (key, members) in classes {
            let tmin = members.iter().map(|(t, _)| (*t).clone()).min().unwrap();
            let mut acc = Poly::zero(self.dim);
            for (t, p) in members {
                let k = ((t - &tmin) / int(2)).to_integer().to_u32().unwrap();
                if k == 0 {
                    acc.add_scaled(p, &Rational::one());
                } else {
                    acc.add_scaled(&(p * &Poly::norm_sq_pow(self.dim, k)), &Rational::one());
                }
            }
            if !acc.is_zero() {
                out.insert(key, (tmin, acc));
            }
        }
        out
    }

    /// Canonical form: one term per class, with every factor of `||x||^2`
    /// moved into the radial exponent.
    pub fn canonical(&self) -> Self {
        let mut terms = BTreeMap::new();
        for ((a, _), (t, p)) in self.collapsed() {
            let (k, rest) = p.strip_norm_sq();
            terms.insert((a, t + int(2 * k as i64)), rest);
        }
        WeightedFunction { dim: self.dim, terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty() || self.collapsed().is_empty()
    }

    /// Canonical `(Poly, RadialProfile)` pairs.
    pub fn terms(&self) -> Vec<(Poly, RadialProfile)> {
        self.canonical()
            .terms
            .into_iter()
            .map(|((a, t), p)| (p, RadialProfile::monomial(Rational::one(), t, a)))
            .collect()
    }

    /// Raw `(a, t, P)` triples, not canonicalised.
    pub fn raw_terms(&self) -> impl Iterator<Item = (&Rational, &Rational, &Poly)> {
        self.terms.iter().map(|((a, t), p)| (a, t, p))
    }

    /// The polynomial this function equals, if it is one.
    pub fn to_poly(&self) -> Result<Poly> {
        let collapsed = self.collapsed();
        let mut out = Poly::zero(self.dim);
        for ((a, _), (t, p)) in collapsed {
            let ok = a.is_zero() && t.is_integer() && !t.is_negative() && t.to_integer().is_even();
            let (k, rest) = if ok {
                (t.to_integer().to_u32().unwrap() / 2, p)
            } else {
                // a negative power may still cancel against ||x||^2 factors
                let (k, rest) = p.strip_norm_sq();
                let t2 = &t + int(2 * k as i64);
                let ok2 = a.is_zero() && t2.is_integer() && !t2.is_negative() && t2.to_integer().is_even();
                if !ok2 {
                    return Err(DunklError::NotPolynomial(self.to_string()));
                }
                (t2.to_integer().to_u32().unwrap() / 2, rest)
            };
            out.add_scaled(&(&rest * &Poly::norm_sq_pow(self.dim, k)), &Rational::one());
        }
        Ok(out)
    }

    pub fn eval_f64(&self, x: &[f64]) -> f64 {
        let r = x.iter().map(|v| v * v).sum::<f64>().sqrt();
        self.terms
            .iter()
            .map(|((a, t), p)| p.eval_f64(x) * r.powf(to_f64(t)) * (to_f64(a) * r * r).exp())
            .sum()
    }
}

impl PartialEq for WeightedFunction {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.sub(other).is_zero()
    }
}

impl DunklTarget for WeightedFunction {
    fn apply_dunkl(&self, ctx: &DunklContext, j: usize) -> Self {
        self.dunkl_coord(ctx, j)
    }

    fn add_scaled(&mut self, other: &Self, c: &Rational) {
        WeightedFunction::add_scaled(self, other, c)
    }

    fn zero_like(&self) -> Self {
        WeightedFunction::zero(self.dim)
    }
}

impl fmt::Display for WeightedFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let canon = self.canonical();
        if canon.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for ((a, t), p) in &canon.terms {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            let factors = fmt_radial_factor(t, a);
            if factors.is_empty() {
                write!(f, "({p})")?;
            } else {
                write!(f, "({p})*{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

/// `D_xi W`.
pub fn weighted_dunkl_apply(ctx: &DunklContext, xi: &[Rational], w: &WeightedFunction) -> Result<WeightedFunction> {
    if xi.len() != ctx.dim() || w.dim() != ctx.dim() {
        return Err(DunklError::DimensionMismatch {
            expected: ctx.dim(),
            found: if xi.len() != ctx.dim() { xi.len() } else { w.dim() },
        });
    }
    let mut out = WeightedFunction::zero(ctx.dim());
    for (j, c) in xi.iter().enumerate() {
        if !c.is_zero() {
            out.add_scaled(&w.dunkl_coord(ctx, j), c);
        }
    }
    Ok(out)
}

/// Left side of Hobson's formula: `p(D)` applied to the radial function `phi(||x||)`.
pub fn hobson_lhs(ctx: &DunklContext, p: &Poly, phi: &RadialProfile) -> Result<WeightedFunction> {
    ctx.check_poly(p)?;
    Ok(ctx.poly_of_dunkl_on(p, &WeightedFunction::radial(ctx.dim(), phi)))
}

/// Right side of Hobson's formula:
/// `sum_{j <= m/2} 1/(2^j j!) [(1/r d/dr)^{m-j} phi] Delta_k^j p`.
pub fn hobson_rhs(ctx: &DunklContext, p: &Poly, phi: &RadialProfile) -> Result<WeightedFunction> {
    ctx.check_poly(p)?;
    let m = p.homogeneous_degree()?;
    let laps = ctx.lap_powers(p, m / 2);
    let mut out = WeightedFunction::zero(ctx.dim());
    for (j, lp) in laps.into_iter().enumerate() {
        let j = j as u32;
        let c = (pow_int(&int(2), j) * factorial(j)).recip();
        let prof = phi.inv_r_ddr(m - j);
        out.add_scaled(&WeightedFunction::from_parts(lp, &prof), &c);
    }
    Ok(out)
}

pub fn hobson_residual(ctx: &DunklContext, p: &Poly, phi: &RadialProfile) -> Result<WeightedFunction> {
    let lhs = hobson_lhs(ctx, p, phi)?;
    let rhs = hobson_rhs(ctx, p, phi)?;
    Ok(lhs.sub(&rhs).canonical())
}

/// `f'' + (d - 1 + 2 gamma_k) f' / r` for `f = phi`.
pub fn radial_laplacian(ctx: &DunklContext, phi: &RadialProfile) -> RadialProfile {
    let d1 = phi.ddr();
    let d2 = d1.ddr();
    let c = int(ctx.dim() as i64 - 1) + int(2) * &ctx.constants().gamma_k;
    let first = d1.shift(&-Rational::one()).scale(&c);
    d2.checked_add(&first).expect("f'' and f'/r share a class")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;
    use crate::rational::{frac, parse_rational_list};
    use crate::rootsys::RootSystemData;

    fn ctx(name: &str, kappa: &str) -> DunklContext {
        DunklContext::new(RootSystemData::from_name(name, &parse_rational_list(kappa).unwrap()).unwrap())
    }

    #[test]
    fn inv_r_ddr_examples() {
        let r2 = RadialProfile::power(int(2));
        assert_eq!(r2.inv_r_ddr(1), RadialProfile::power(int(0)).scale(&int(2)));
        let s = frac(7, 3);
        assert_eq!(
            RadialProfile::power(s.clone()).inv_r_ddr(1),
            RadialProfile::monomial(s.clone(), &s - int(2), int(0))
        );
        let g = RadialProfile::gaussian(frac(-1, 2));
        assert_eq!(g.inv_r_ddr(1), g.scale(&int(-1)));
        assert_eq!(r2.inv_r_ddr(2), RadialProfile::zero());
    }

    #[test]
    fn weighted_dunkl_examples() {
        let c = ctx("z2:d=1", "5/2");
        let g = WeightedFunction::radial(1, &RadialProfile::gaussian(frac(-1, 2)));
        let out = weighted_dunkl_apply(&c, &[int(1)], &g).unwrap();
        let expected = WeightedFunction::from_parts(parse_poly("-x1", 1).unwrap(), &RadialProfile::gaussian(frac(-1, 2)));
        assert_eq!(out, expected);

        let c2 = ctx("b:d=2", "1,2");
        let q = parse_poly("x1^3*x2 - x2", 2).unwrap();
        let xi = [int(1), frac(1, 2)];
        let w = weighted_dunkl_apply(&c2, &xi, &WeightedFunction::from_poly(q.clone())).unwrap();
        assert_eq!(w.to_poly().unwrap(), c2.dunkl_apply(&xi, &q).unwrap());

        let free = ctx("b:d=2", "0");
        let s = frac(5, 3);
        let w = weighted_dunkl_apply(&free, &xi, &WeightedFunction::radial(2, &RadialProfile::power(s.clone()))).unwrap();
        let expect = WeightedFunction::from_parts(Poly::linear(&xi), &RadialProfile::monomial(s.clone(), s - int(2), int(0)));
        assert_eq!(w, expect);
    }

    #[test]
    fn hobson_small_cases() {
        let c = ctx("z2:d=1", "3/2");
        // p = x, phi = r^2: D(x^2) = 2x
        let lhs = hobson_lhs(&c, &parse_poly("x1", 1).unwrap(), &RadialProfile::power(int(2))).unwrap();
        assert_eq!(lhs.to_poly().unwrap(), parse_poly("2*x1", 1).unwrap());
        // p = x^2, phi = exp(-r^2/2): (x^2 - (1 + 2 kappa)) exp(-r^2/2)
        let g = RadialProfile::gaussian(frac(-1, 2));
        let lhs = hobson_lhs(&c, &Poly::norm_sq(1), &g).unwrap();
        let expect = WeightedFunction::from_parts(parse_poly("x1^2 - 4", 1).unwrap(), &g);
        assert_eq!(lhs, expect);
        assert!(hobson_residual(&c, &Poly::norm_sq(1), &g).unwrap().is_zero());
        // m = 0
        let k = Poly::constant(1, frac(2, 3));
        assert_eq!(hobson_rhs(&c, &k, &g).unwrap(), WeightedFunction::from_parts(k.clone(), &g));
        // degree one with r^2
        let lin = parse_poly("3*x1", 1).unwrap();
        assert_eq!(hobson_rhs(&c, &lin, &RadialProfile::power(int(2))).unwrap().to_poly().unwrap(), lin.scale(&int(2)));
        assert_eq!(
            hobson_rhs(&c, &parse_poly("x1^2 + x1", 1).unwrap(), &g).unwrap_err(),
            DunklError::NotHomogeneous
        );
    }

    #[test]
    fn laplacian_of_power_profile() {
        let c = ctx("a:d=3", "1/2");
        let lam = c.lambda().clone();
        let s = frac(-3, 5);
        let lhs = hobson_lhs(&c, &Poly::norm_sq(3), &RadialProfile::power(s.clone())).unwrap();
        let expect = WeightedFunction::radial(
            3,
            &RadialProfile::monomial(&s * (&s + int(2) * &lam), &s - int(2), int(0)),
        );
        assert_eq!(lhs, expect);
        let harmonic = RadialProfile::power(int(-2) * &lam);
        assert!(hobson_lhs(&c, &Poly::norm_sq(3), &harmonic).unwrap().is_zero());
        for phi in [RadialProfile::power(s), RadialProfile::power_gaussian(int(3), int(-1))] {
            let lhs = hobson_lhs(&c, &Poly::norm_sq(3), &phi).unwrap();
            assert_eq!(lhs, WeightedFunction::radial(3, &radial_laplacian(&c, &phi)));
        }
    }

    #[test]
    fn canonical_form_absorbs_norm_factors() {
        let w = WeightedFunction::from_parts(Poly::norm_sq(2), &RadialProfile::power(frac(1, 2)));
        let v = WeightedFunction::radial(2, &RadialProfile::power(frac(5, 2)));
        assert_eq!(w, v);
        let terms = w.terms();
        assert_eq!(terms.len(), 1);
        assert_eq!(terms[0].0, Poly::one(2));
        assert_eq!(terms[0].1, RadialProfile::power(frac(5, 2)));
        let neg = WeightedFunction::from_parts(Poly::norm_sq_pow(2, 2), &RadialProfile::power(int(-2)));
        assert_eq!(neg.to_poly().unwrap(), Poly::norm_sq(2));
        let bad = WeightedFunction::radial(2, &RadialProfile::power(int(-2)));
        assert!(matches!(bad.to_poly(), Err(DunklError::NotPolynomial(_))));
    }

    #[test]
    fn profile_text() {
        let p = RadialProfile::parse("r^(-3)*exp(-1/2*r^2)").unwrap();
        assert_eq!(p, RadialProfile::power_gaussian(int(-3), frac(-1, 2)));
        assert_eq!(p.to_string(), "r^(-3)*exp(-1/2*r^2)");
        let q = RadialProfile::parse("2*r^2 - 3/2*r^(4) + 1").unwrap();
        assert_eq!(q.to_string(), "1 + 2*r^2 - 3/2*r^4");
        assert_eq!(RadialProfile::parse(&q.to_string()).unwrap(), q);
        assert_eq!(RadialProfile::parse("exp(-r^2)").unwrap(), RadialProfile::gaussian(int(-1)));
        assert_eq!(RadialProfile::parse("r^3*exp(-r^2/2)").unwrap(), RadialProfile::power_gaussian(int(3), frac(-1, 2)));
        assert!(RadialProfile::parse("exp(-r^2/0)").is_err());
        assert_eq!(RadialProfile::parse("r^(7/2)").unwrap(), RadialProfile::power(frac(7, 2)));
        assert!(RadialProfile::parse("r + exp(-r^2)").is_err());
        assert!(RadialProfile::parse("r^2 + r").is_err());
        assert!(RadialProfile::parse("sin(r)").is_err());
    }
}
