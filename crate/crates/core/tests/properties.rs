use dunkl_core::harmonic::{clebsch_project_series, harmonic_decompose, is_k_harmonic};
use dunkl_core::integrate::pizzetti_mean;
use dunkl_core::poly::Reflection;
use dunkl_core::radial::hobson_residual;
use dunkl_core::random::{random_homogeneous, random_kappa, random_poly, random_vector, rng};
use dunkl_core::rational::{frac, int};
use dunkl_core::{parse_poly, DunklContext, Poly, RadialProfile, Rational, RootSystemData};
use proptest::prelude::*;

const SYSTEMS: [&str; 5] = ["z2:d=2", "a:d=3", "b:d=2", "b:d=3", "d:d=4"];

fn system(idx: usize, seed: u64) -> DunklContext {
    let base = RootSystemData::from_name(SYSTEMS[idx % SYSTEMS.len()], &[int(0)]).unwrap();
    let kappa = random_kappa(&mut rng(seed), base.num_orbits());
    DunklContext::new(base.with_kappa(&kappa).unwrap())
}

fn poly(seed: u64, dim: usize, deg: u32) -> Poly {
    random_poly(&mut rng(seed), dim, deg, 4)
}

fn homogeneous(seed: u64, dim: usize, deg: u32) -> Poly {
    random_homogeneous(&mut rng(seed), dim, deg, 2 + dim)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn ring_axioms(a in any::<u64>(), b in any::<u64>(), c in any::<u64>()) {
        let (p, q, r) = (poly(a, 3, 3), poly(b, 3, 3), poly(c, 3, 2));
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&(&p + &q) * &r, &(&p * &r) + &(&q * &r));
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert!((&p - &p).is_zero());
    }

    #[test]
    fn print_parse_round_trip(a in any::<u64>(), dim in 1usize..5) {
        let p = poly(a, dim, 4);
        prop_assert_eq!(parse_poly(&p.to_string(), dim).unwrap(), p);
    }

    #[test]
    fn exact_division(a in any::<u64>(), b in any::<u64>()) {
        let p = poly(a, 3, 4);
        let alpha = random_vector(&mut rng(b), 3);
        let lin = Poly::linear(&alpha);
        prop_assert_eq!((&p * &lin).divide_exact_by_linear(&alpha).unwrap(), p.clone());
        prop_assert_eq!((&p * &Poly::norm_sq(3)).divide_exact_by_norm_sq().unwrap(), p);
    }

    #[test]
    fn euler_on_homogeneous(a in any::<u64>(), deg in 0u32..7) {
        let p = homogeneous(a, 3, deg);
        prop_assert_eq!(p.euler(), p.scale(&int(deg as i64)));
    }

    #[test]
    fn flat_dunkl_is_partial(a in any::<u64>(), sys in 0usize..5) {
        let base = RootSystemData::from_name(SYSTEMS[sys], &[int(0)]).unwrap();
        let ctx = DunklContext::new(base);
        let p = poly(a, ctx.dim(), 4);
        for j in 0..ctx.dim() {
            prop_assert_eq!(ctx.d(j, &p), p.partial(j));
        }
    }

    #[test]
    fn dunkl_lowers_degree_and_commutes(a in any::<u64>(), sys in 0usize..5, deg in 1u32..6) {
        let ctx = system(sys, a);
        let p = homogeneous(a ^ 0x5555, ctx.dim(), deg);
        let dp = ctx.d(0, &p);
        prop_assert!(dp.is_zero() || dp.homogeneous_degree().unwrap() == deg - 1);
        let d = ctx.dim();
        prop_assert_eq!(ctx.d(0, &ctx.d(d - 1, &p)), ctx.d(d - 1, &ctx.d(0, &p)));
    }

    #[test]
    fn reflection_equivariance(a in any::<u64>(), sys in 0usize..5) {
        // r D_xi r = D_{r xi}
        let ctx = system(sys, a);
        let d = ctx.dim();
        let p = poly(a.rotate_left(7), d, 4);
        let xi = random_vector(&mut rng(a), d);
        for i in 0..ctx.system().positive_roots().len().min(4) {
            let r = ctx.system().reflection(i);
            let lhs = r.apply(&ctx.dunkl_apply(&xi, &r.apply(&p)).unwrap());
            let rhs = ctx.dunkl_apply(&r.apply_point(&xi), &p).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn root_scale_invariance(a in any::<u64>(), sys in 0usize..5) {
        let ctx = system(sys, a);
        let n = ctx.system().positive_roots().len();
        let scales: Vec<Rational> = (0..n).map(|i| frac(1 + (i as i64 % 3), 1 + (i as i64 % 2))).collect();
        let scaled = DunklContext::new(ctx.system().with_scaled_roots(&scales).unwrap());
        let p = poly(a.rotate_left(3), ctx.dim(), 4);
        for j in 0..ctx.dim() {
            prop_assert_eq!(ctx.d(j, &p), scaled.d(j, &p));
        }
    }

    #[test]
    fn projection_is_harmonic_idempotent(a in any::<u64>(), sys in 0usize..5, deg in 0u32..6) {
        let ctx = system(sys, a);
        let p = homogeneous(a.rotate_left(11), ctx.dim(), deg);
        let h = clebsch_project_series(&ctx, &p).unwrap();
        prop_assert!(is_k_harmonic(&ctx, &h).unwrap());
        prop_assert_eq!(clebsch_project_series(&ctx, &h).unwrap(), h);
        let dec = harmonic_decompose(&ctx, &p).unwrap();
        prop_assert_eq!(dec.recompose(ctx.dim()), p);
    }

    #[test]
    fn mean_is_invariant_and_normalised(a in any::<u64>(), sys in 0usize..5) {
        let ctx = system(sys, a);
        let d = ctx.dim();
        prop_assert_eq!(pizzetti_mean(&ctx, &Poly::one(d)).unwrap(), int(1));
        let p = poly(a.rotate_left(5), d, 4);
        let mean = pizzetti_mean(&ctx, &p).unwrap();
        for i in 0..ctx.system().positive_roots().len() {
            let q = ctx.system().reflection(i).apply(&p);
            prop_assert_eq!(pizzetti_mean(&ctx, &q).unwrap(), mean.clone());
        }
        // mean of ||x||^2 p equals mean of p on the unit sphere
        prop_assert_eq!(pizzetti_mean(&ctx, &(&p * &Poly::norm_sq(d))).unwrap(), mean);
    }

    #[test]
    fn hobson_random_profiles(a in any::<u64>(), sys in 0usize..5, t in -6i64..9, den in 1i64..4, g in 0i64..3) {
        let ctx = system(sys, a);
        let p = homogeneous(a.rotate_left(13), ctx.dim(), (a % 5) as u32);
        let phi = RadialProfile::power_gaussian(frac(t, den), frac(-g, 2));
        prop_assert!(hobson_residual(&ctx, &p, &phi).unwrap().is_zero());
    }
}

#[test]
fn reflections_are_involutions() {
    let r = Reflection::new(&[int(1), int(-2), frac(1, 2)]).unwrap();
    let p = parse_poly("x1^3*x2 - 2*x3^2 + x1*x2*x3 + 5", 3).unwrap();
    assert_eq!(r.apply(&r.apply(&p)), p);
}
