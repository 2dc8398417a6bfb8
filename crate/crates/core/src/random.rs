//! Seeded generators for the randomized suites.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::poly::{Monomial, Poly};
use crate::rational::{frac, int, Rational};

pub type SuiteRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SuiteRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Multiplicity samples used across the suites.
pub fn kappa_samples() -> Vec<Rational> {
    vec![int(0), frac(1, 2), int(1), frac(3, 2), int(2)]
}

pub fn random_kappa(rng: &mut SuiteRng, n: usize) -> Vec<Rational> {
    let samples = kappa_samples();
    (0..n).map(|_| samples.choose(rng).unwrap().clone()).collect()
}

/// Nonzero coefficient `a/b` with `|a| <= 5`, `b <= 3`.
pub fn random_coeff(rng: &mut SuiteRng) -> Rational {
    loop {
        let a: i64 = rng.gen_range(-5..=5);
        if a != 0 {
            return frac(a, rng.gen_range(1..=3));
        }
    }
}

pub fn random_monomial(rng: &mut SuiteRng, dim: usize, deg: u32) -> Monomial {
    let mut e = vec![0u32; dim];
    for _ in 0..deg {
        e[rng.gen_range(0..dim)] += 1;
    }
    Monomial(e)
}

/// Nonzero homogeneous polynomial of degree `deg` with at most `max_terms`
/// terms.
pub fn random_homogeneous(rng: &mut SuiteRng, dim: usize, deg: u32, max_terms: usize) -> Poly {
    loop {
        let n = rng.gen_range(1..=max_terms.max(1));
        let mut p = Poly::zero(dim);
        for _ in 0..n {
            let m = random_monomial(rng, dim, deg);
            p.add_term(m, random_coeff(rng));
        }
        if !p.is_zero() {
            return p;
        }
    }
}

/// Polynomial with components of every degree up to `max_deg`, each present
/// with probability one half.
pub fn random_poly(rng: &mut SuiteRng, dim: usize, max_deg: u32, max_terms: usize) -> Poly {
    let mut p = Poly::zero(dim);
    for deg in 0..=max_deg {
        if rng.gen_bool(0.5) {
            p = &p + &random_homogeneous(rng, dim, deg, max_terms);
        }
    }
    p
}

/// Nonzero integer vector with entries in `-3..=3`.
pub fn random_vector(rng: &mut SuiteRng, dim: usize) -> Vec<Rational> {
    loop {
        let v: Vec<i64> = (0..dim).map(|_| rng.gen_range(-3..=3)).collect();
        if v.iter().any(|&x| x != 0) {
            return v.into_iter().map(int).collect();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic() {
        let a = random_homogeneous(&mut rng(3), 3, 4, 5);
        let b = random_homogeneous(&mut rng(3), 3, 4, 5);
        assert_eq!(a, b);
        assert_eq!(a.homogeneous_degree().unwrap(), 4);
        let v = random_vector(&mut rng(9), 4);
        assert!(v.iter().any(|x| *x != int(0)));
    }
}
