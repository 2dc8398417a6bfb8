//! Dunkl operators on polynomials.
//!
//! `D_xi f = d_xi f + sum_{alpha in R+} kappa_alpha <alpha,xi> (f - f o r_alpha) / <alpha,x>`
//!
//! Images of monomials under the coordinate operators `D_j` and under the
//! Dunkl Laplacian are cached per context; everything else is assembled by
//! linearity.

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use num_traits::{One, Zero};

use crate::error::{DunklError, Result};
use crate::poly::{Monomial, Poly};
use crate::rational::{binomial, factorial, int, pow_int, frac, Rational};
use crate::rootsys::{dot, DunklConstants, RootSystemData};

pub struct DunklContext {
    rs: RootSystemData,
    constants: DunklConstants,
    /// key `(op, monomial)`: op `j < d` is `D_{j+1}`, op `d` is the Laplacian.
    cache: RwLock<HashMap<(usize, Monomial), Arc<Poly>>>,
}

impl std::fmt::Debug for DunklContext {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("DunklContext")
            .field("system", &self.rs.name())
            .field("kappa", &self.rs.describe_kappa())
            .finish()
    }
}

impl Clone for DunklContext {
    fn clone(&self) -> Self {
        DunklContext::new(self.rs.clone())
    }
}

/// Anything the coordinate Dunkl operators act on linearly.
pub trait DunklTarget: Clone {
    fn apply_dunkl(&self, ctx: &DunklContext, j: usize) -> Self;
    fn add_scaled(&mut self, other: &Self, c: &Rational);
    fn zero_like(&self) -> Self;
}

impl DunklTarget for Poly {
    fn apply_dunkl(&self, ctx: &DunklContext, j: usize) -> Self {
        ctx.d(j, self)
    }

    fn add_scaled(&mut self, other: &Self, c: &Rational) {
        Poly::add_scaled(self, other, c)
    }

    fn zero_like(&self) -> Self {
        Poly::zero(self.dim())
    }
}

impl DunklContext {
    pub fn new(rs: RootSystemData) -> Self {
        let constants = rs.constants();
        DunklContext {
            rs,
            constants,
            cache: RwLock::new(HashMap::new()),
        }
    }

    pub fn system(&self) -> &RootSystemData {
        &self.rs
    }

    pub fn constants(&self) -> &DunklConstants {
        &self.constants
    }

    pub fn lambda(&self) -> &Rational {
        &self.constants.lambda_k
    }

    pub fn dim(&self) -> usize {
        self.rs.dim()
    }

    pub fn check_poly(&self, p: &Poly) -> Result<()> {
        if p.dim() != self.dim() {
            return Err(DunklError::DimensionMismatch {
                expected: self.dim(),
                found: p.dim(),
            });
        }
        Ok(())
    }

    fn check_vec(&self, v: &[Rational]) -> Result<()> {
        if v.len() != self.dim() {
            return Err(DunklError::DimensionMismatch {
                expected: self.dim(),
                found: v.len(),
            });
        }
        Ok(())
    }

    /// `(f - f o r_alpha) / <alpha,x>` for the i-th positive root.
    fn difference_quotient(&self, i: usize, p: &Poly) -> Poly {
        let reflected = self.rs.reflection(i).apply(p);
        (p - &reflected)
            .divide_exact_by_linear(&self.rs.positive_roots()[i])
            .expect("f - f o r_alpha is divisible by <alpha, x>")
    }

    /// The defining formula, evaluated without any caching.
    pub fn dunkl_apply_direct(&self, xi: &[Rational], p: &Poly) -> Result<Poly> {
        self.check_vec(xi)?;
        self.check_poly(p)?;
        let mut out = p.directional(xi);
        for (i, alpha) in self.rs.positive_roots().iter().enumerate() {
            let w = self.rs.kappa(i) * dot(alpha, xi);
            if w.is_zero() {
                continue;
            }
            let q = self.difference_quotient(i, p);
            out.add_scaled(&q, &w);
        }
        Ok(out)
    }

    fn cached(&self, op: usize, m: &Monomial, compute: impl FnOnce() -> Poly) -> Arc<Poly> {
        let key = (op, m.clone());
        if let Some(hit) = self.cache.read().unwrap().get(&key) {
            return hit.clone();
        }
        let val = Arc::new(compute());
        self.cache.write().unwrap().insert(key, val.clone());
        val
    }

    fn d_monomial(&self, j: usize, m: &Monomial) -> Arc<Poly> {
        self.cached(j, m, || {
            let mono = Poly::monomial(m.clone(), Rational::one());
            let mut out = mono.partial(j);
            for (i, alpha) in self.rs.positive_roots().iter().enumerate() {
                let w = self.rs.kappa(i) * &alpha[j];
                if w.is_zero() {
                    continue;
                }
                out.add_scaled(&self.difference_quotient(i, &mono), &w);
            }
            out
        })
    }

    fn lap_monomial(&self, m: &Monomial) -> Arc<Poly> {
        let d = self.dim();
        self.cached(d, m, || {
            let mut out = Poly::zero(d);
            for j in 0..d {
                let once = self.d_monomial(j, m);
                out.add_scaled(&self.d(j, &once), &Rational::one());
            }
            out
        })
    }

    /// `D_{j+1} p` (zero-based coordinate index).
    pub fn d(&self, j: usize, p: &Poly) -> Poly {
        debug_assert_eq!(p.dim(), self.dim());
        let mut out = Poly::zero(p.dim());
        for (m, c) in p.terms() {
            out.add_scaled(&self.d_monomial(j, m), c);
        }
        out
    }

    /// `D_xi p`.
    pub fn dunkl_apply(&self, xi: &[Rational], p: &Poly) -> Result<Poly> {
        self.check_vec(xi)?;
        self.check_poly(p)?;
        let mut out = Poly::zero(p.dim());
        for (j, c) in xi.iter().enumerate() {
            if !c.is_zero() {
                out.add_scaled(&self.d(j, p), c);
            }
        }
        Ok(out)
    }

    /// `Delta_k p = sum_j D_j^2 p`.
    pub fn lap(&self, p: &Poly) -> Poly {
        debug_assert_eq!(p.dim(), self.dim());
        let mut out = Poly::zero(p.dim());
        for (m, c) in p.terms() {
            out.add_scaled(&self.lap_monomial(m), c);
        }
        out
    }

    /// `Delta_k^n p`.
    pub fn lap_pow(&self, p: &Poly, n: u32) -> Poly {
        let mut cur = p.clone();
        for _ in 0..n {
            if cur.is_zero() {
                break;
            }
            cur = self.lap(&cur);
        }
        cur
    }

    /// `[Delta_k^0 p, Delta_k^1 p, ..., Delta_k^n p]`.
    pub fn lap_powers(&self, p: &Poly, n: u32) -> Vec<Poly> {
        let mut out = vec![p.clone()];
        for _ in 0..n {
            let next = self.lap(out.last().unwrap());
            out.push(next);
        }
        out
    }

    pub fn dunkl_laplacian_sq(&self, p: &Poly) -> Result<Poly> {
        self.check_poly(p)?;
        Ok(self.lap(p))
    }

    /// The explicit second-order form of the Dunkl Laplacian:
    /// `Delta p + sum kappa [2 d_alpha p - <alpha,alpha> (p - p o r)/<alpha,x>] / <alpha,x>`,
    /// with each bracket divided exactly.
    pub fn dunkl_laplacian_expr(&self, p: &Poly) -> Result<Poly> {
        self.check_poly(p)?;
        let mut out = p.laplacian();
        for (i, alpha) in self.rs.positive_roots().iter().enumerate() {
            let k = self.rs.kappa(i);
            if k.is_zero() {
                continue;
            }
            let mut num = p.directional(alpha).scale(&int(2));
            num.add_scaled(&self.difference_quotient(i, p), &-dot(alpha, alpha));
            out.add_scaled(&num.divide_exact_by_linear(alpha)?, k);
        }
        Ok(out)
    }

    /// `Delta p + sum 2 kappa d_alpha p / <alpha,x>`, the restriction of the
    /// Dunkl Laplacian to G-invariant polynomials.
    pub fn invariant_laplacian(&self, p: &Poly) -> Result<Poly> {
        self.check_poly(p)?;
        let mut out = p.laplacian();
        for (i, alpha) in self.rs.positive_roots().iter().enumerate() {
            let k = self.rs.kappa(i);
            if k.is_zero() {
                continue;
            }
            let q = p.directional(alpha).divide_exact_by_linear(alpha)?;
            out.add_scaled(&q, &(int(2) * k));
        }
        Ok(out)
    }

    /// `p(D) target`, each monomial `x^b` acting as `D_1^{b1} ... D_d^{bd}`
    /// (rightmost factor first). Partial products are shared between
    /// monomials.
    pub fn poly_of_dunkl_on<T: DunklTarget>(&self, p: &Poly, target: &T) -> T {
        let mut memo: HashMap<Monomial, T> = HashMap::new();
        memo.insert(Monomial::one(self.dim()), target.clone());
        let mut out = target.zero_like();
        for (m, c) in p.terms() {
            let img = self.monomial_action(m, &mut memo);
            out.add_scaled(&img, c);
        }
        out
    }

    fn monomial_action<T: DunklTarget>(&self, m: &Monomial, memo: &mut HashMap<Monomial, T>) -> T {
        if let Some(hit) = memo.get(m) {
            return hit.clone();
        }
        let i = m.exps().iter().position(|&e| e > 0).expect("constant monomial is memoised");
        let mut rest = m.clone();
        rest.0[i] -= 1;
        let inner = self.monomial_action(&rest, memo);
        let out = inner.apply_dunkl(self, i);
        memo.insert(m.clone(), out.clone());
        out
    }

    pub fn poly_of_dunkl(&self, p: &Poly, target: &Poly) -> Result<Poly> {
        self.check_poly(p)?;
        self.check_poly(target)?;
        Ok(self.poly_of_dunkl_on(p, target))
    }

    /// `p(D) target` with the factors of each monomial applied in the
    /// opposite order (`D_1` first). Equal to `poly_of_dunkl` by
    /// commutativity.
    pub fn poly_of_dunkl_reversed(&self, p: &Poly, target: &Poly) -> Poly {
        let mut out = Poly::zero(self.dim());
        for (m, c) in p.terms() {
            let mut cur = target.clone();
            for (j, &e) in m.exps().iter().enumerate() {
                for _ in 0..e {
                    cur = self.d(j, &cur);
                }
            }
            out.add_scaled(&cur, c);
        }
        out
    }

    /// `D_xi D_eta p - D_eta D_xi p`.
    pub fn commutator_residual(&self, xi: &[Rational], eta: &[Rational], p: &Poly) -> Result<Poly> {
        let a = self.dunkl_apply(xi, &self.dunkl_apply(eta, p)?)?;
        let b = self.dunkl_apply(eta, &self.dunkl_apply(xi, p)?)?;
        Ok(&a - &b)
    }

    /// `[Delta_k^j, M_{x_l}] p - 2 j D_l Delta_k^{j-1} p` (`l` zero-based).
    pub fn com00_residual(&self, j: u32, l: usize, p: &Poly) -> Result<Poly> {
        self.check_poly(p)?;
        if j == 0 {
            return Err(DunklError::Invalid("com00 requires j >= 1".into()));
        }
        if l >= self.dim() {
            return Err(DunklError::VariableOutOfRange { index: l + 1, dim: self.dim() });
        }
        let xl = Poly::var(self.dim(), l);
        let left = self.lap_pow(&(&xl * p), j);
        let right = &xl * &self.lap_pow(p, j);
        let mut res = &left - &right;
        let tail = self.d(l, &self.lap_pow(p, j - 1));
        res.add_scaled(&tail, &-int(2 * j as i64));
        Ok(res)
    }

    /// `p(D) target - (1/m!) (ad Delta_k/2)^m M_p target` for homogeneous `p`
    /// of degree `m`, using
    /// `(ad A)^m B = sum_i C(m,i) (-1)^i A^{m-i} B A^i`.
    pub fn ad_formula_residual(&self, p: &Poly, target: &Poly) -> Result<Poly> {
        self.check_poly(p)?;
        self.check_poly(target)?;
        let m = p.homogeneous_degree()?;
        let half = frac(1, 2);
        let mut ad = Poly::zero(self.dim());
        let target_pows = self.lap_powers(target, m);
        for i in 0..=m {
            let inner = p * &target_pows[i as usize];
            let outer = self.lap_pow(&inner, m - i);
            let sign = if i % 2 == 0 { int(1) } else { int(-1) };
            let c = binomial(m, i) * sign * pow_int(&half, m);
            ad.add_scaled(&outer, &c);
        }
        let lhs = self.poly_of_dunkl_on(p, target);
        let mut res = lhs;
        res.add_scaled(&ad, &-factorial(m).recip());
        Ok(res)
    }
}
