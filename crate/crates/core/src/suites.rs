//! Named verification suites. Each builds a [`VerificationReport`] from seeded
//! random inputs; exact suites compare with rational equality.

use num_complex::Complex64;
use num_traits::{One, Zero};

use crate::dunkl::DunklContext;
use crate::error::{DunklError, Result};
use crate::harmonic::{
    clebsch_project_maxwell, clebsch_project_series, diffgauss_residual, harmonic_decompose, hermite_poly,
    rodrigues_residual,
};
use crate::integrate::{gaussian_moment, pizzetti_mean, sphere_oracle_z2d};
use crate::poly::{Monomial, Poly};
use crate::radial::{hobson_residual, RadialProfile};
use crate::random::{random_homogeneous, random_monomial, random_poly, random_vector, rng, SuiteRng};
use crate::rational::{factorial, frac, int, pochhammer, pow_int, Rational};
use crate::report::VerificationReport;
use crate::rootsys::Family;
use crate::transform;

pub const SUITES: &[&str] = &[
    "hobson",
    "commutativity",
    "laplacian-routes",
    "com00",
    "ad-formula",
    "projection",
    "pizzetti",
    "hermite",
    "mean-value",
    "transforms",
];

#[derive(Clone, Debug)]
pub struct SuiteOptions {
    pub seed: u64,
    /// Largest polynomial degree drawn.
    pub deg: u32,
    /// Number of random polynomials.
    pub count: usize,
    /// Numeric tolerance override (transform suite only).
    pub tolerance: Option<f64>,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions { seed: 0, deg: 6, count: 12, tolerance: None }
    }
}

pub fn run_suite(name: &str, ctx: &DunklContext, opts: &SuiteOptions) -> Result<VerificationReport> {
    let report = match name {
        "hobson" => hobson(ctx, opts),
        "commutativity" => commutativity(ctx, opts),
        "laplacian-routes" => laplacian_routes(ctx, opts),
        "com00" => com00(ctx, opts),
        "ad-formula" => ad_formula(ctx, opts),
        "projection" => projection(ctx, opts),
        "pizzetti" => pizzetti(ctx, opts),
        "hermite" => hermite(ctx, opts),
        "mean-value" => mean_value(ctx, opts),
        "transforms" => transforms(ctx, opts)?,
        other => return Err(DunklError::Invalid(format!("unknown suite '{other}'"))),
    };
    Ok(report.finish())
}

fn new_report(name: &str, ctx: &DunklContext, opts: &SuiteOptions) -> VerificationReport {
    let system = format!("{} kappa={}", ctx.system().name(), ctx.system().describe_kappa());
    VerificationReport::new(name, &system, opts.seed)
}

fn max_terms(dim: usize) -> usize {
    2 + dim
}

/// `count` homogeneous polynomials cycling through degrees `0..=deg`.
pub fn suite_polys(rng: &mut SuiteRng, dim: usize, deg: u32, count: usize) -> Vec<Poly> {
    (0..count)
        .map(|i| random_homogeneous(rng, dim, (i as u32) % (deg + 1), max_terms(dim)))
        .collect()
}

/// Profiles used by the Hobson suite.
pub fn hobson_profiles(ctx: &DunklContext) -> Vec<(String, RadialProfile)> {
    let lam = ctx.lambda().clone();
    vec![
        ("r^2".into(), RadialProfile::power(int(2))),
        ("r^4".into(), RadialProfile::power(int(4))),
        ("r^(7/2)".into(), RadialProfile::power(frac(7, 2))),
        ("r^(-2lambda)".into(), RadialProfile::power(int(-2) * &lam)),
        ("r^(-2lambda-1/3)".into(), RadialProfile::power(int(-2) * &lam - frac(1, 3))),
        ("exp(-r^2/2)".into(), RadialProfile::gaussian(frac(-1, 2))),
        ("exp(-r^2)".into(), RadialProfile::gaussian(int(-1))),
        ("r^3*exp(-r^2)".into(), RadialProfile::power_gaussian(int(3), int(-1))),
    ]
}

fn case(i: usize) -> String {
    format!("p{i:03}")
}

fn record_exact(report: &mut VerificationReport, name: String, res: Result<Poly>, detail: impl Into<String>) {
    match res {
        Ok(r) => report.exact(name, r.is_zero(), &r, detail),
        Err(e) => report.error(name, &e),
    }
}

pub fn hobson(ctx: &DunklContext, opts: &SuiteOptions) -> VerificationReport {
    let mut report = new_report("hobson", ctx, opts);
    let mut rng = rng(opts.seed);
    let profiles = hobson_profiles(ctx);
    for (i, p) in suite_polys(&mut rng, ctx.dim(), opts.deg, opts.count).iter().enumerate() {
        for (label, phi) in &profiles {
            let name = format!("{}/{}", case(i), label);
            match hobson_residual(ctx, p, phi) {
                Ok(r) => report.exact(name, r.is_zero(), &r, format!("p = {p}")),
                Err(e) => report.error(name, &e),
            }
        }
    }
    report
}

pub fn commutativity(ctx: &DunklContext, opts: &SuiteOptions) -> VerificationReport {
    let mut report = new_report("commutativity", ctx, opts);
    let mut rng = rng(opts.seed);
    let d = ctx.dim();
    for (i, p) in suite_polys(&mut rng, d, opts.deg, opts.count).iter().enumerate() {
        let xi = random_vector(&mut rng, d);
        let eta = random_vector(&mut rng, d);
        record_exact(&mut report, format!("{}/xi-eta", case(i)), ctx.commutator_residual(&xi, &eta, p), "");
        record_exact(&mut report, format!("{}/xi-xi", case(i)), ctx.commutator_residual(&xi, &xi, p), "");
        // p(D) with the factors of each monomial applied in the other order
        let target = random_poly(&mut rng, d, opts.deg.min(4), max_terms(d));
        let q = random_homogeneous(&mut rng, d, 2, 3);
        let fwd = ctx.poly_of_dunkl_on(&q, &target);
        let rev = ctx.poly_of_dunkl_reversed(&q, &target);
        report.exact(format!("{}/order", case(i)), fwd == rev, &fwd - &rev, "");
    }
    report
}

fn invariant_samples(ctx: &DunklContext) -> Vec<Poly> {
    let d = ctx.dim();
    let mut out: Vec<Poly> = (1..=3).map(|k| Poly::norm_sq_pow(d, k)).collect();
    if *ctx.system().family() != Family::Custom {
        let quartic = Poly::from_terms(
            d,
            (0..d).map(|i| {
                let mut e = vec![0; d];
                e[i] = 4;
                (Monomial(e), Rational::one())
            }),
        );
        out.push(&quartic * &Poly::norm_sq(d));
        out.push(quartic);
    }
    out
}

pub fn laplacian_routes(ctx: &DunklContext, opts: &SuiteOptions) -> VerificationReport {
    let mut report = new_report("laplacian-routes", ctx, opts);
    let mut rng = rng(opts.seed);
    let d = ctx.dim();
    for (i, p) in suite_polys(&mut rng, d, opts.deg, opts.count).iter().enumerate() {
        let res = (|| Ok(&ctx.dunkl_laplacian_sq(p)? - &ctx.dunkl_laplacian_expr(p)?))();
        record_exact(&mut report, format!("{}/sq-expr", case(i)), res, "");
    }
    for (i, p) in invariant_samples(ctx).iter().enumerate() {
        let res = (|| Ok(&ctx.dunkl_laplacian_sq(p)? - &ctx.invariant_laplacian(p)?))();
        record_exact(&mut report, format!("invariant{i}/sq-restricted"), res, format!("p = {p}"));
    }
    report
}

pub fn com00(ctx: &DunklContext, opts: &SuiteOptions) -> VerificationReport {
    let mut report = new_report("com00", ctx, opts);
    let mut rng = rng(opts.seed);
    let d = ctx.dim();
    for (i, p) in suite_polys(&mut rng, d, opts.deg, opts.count).iter().enumerate() {
        for j in 1..=3 {
            for l in 0..d {
                record_exact(&mut report, format!("{}/j{}/x{}", case(i), j, l + 1), ctx.com00_residual(j, l, p), "");
            }
        }
    }
    report
}

pub fn ad_formula(ctx: &DunklContext, opts: &SuiteOptions) -> VerificationReport {
    let mut report = new_report("ad-formula", ctx, opts);
    let mut rng = rng(opts.seed);
    let d = ctx.dim();
    for i in 0..opts.count {
        let m = (i as u32) % 5;
        let p = random_homogeneous(&mut rng, d, m, max_terms(d));
        let target = random_poly(&mut rng, d, opts.deg.min(4), max_terms(d));
        record_exact(&mut report, format!("{}/m{}", case(i), m), ctx.ad_formula_residual(&p, &target), format!("p = {p}"));
    }
    report
}

pub fn projection(ctx: &DunklContext, opts: &SuiteOptions) -> VerificationReport {
    let mut report = new_report("projection", ctx, opts);
    let mut rng = rng(opts.seed);
    let d = ctx.dim();
    let lambda_zero = ctx.lambda().is_zero();
    for (i, p) in suite_polys(&mut rng, d, opts.deg, opts.count).iter().enumerate() {
        let c = case(i);
        let h = match clebsch_project_series(ctx, p) {
            Ok(h) => h,
            Err(e) => {
                report.error(format!("{c}/harmonic"), &e);
                continue;
            }
        };
        let lap = ctx.lap(&h);
        report.exact(format!("{c}/harmonic"), lap.is_zero(), &lap, "");
        match clebsch_project_series(ctx, &h) {
            Ok(hh) => report.exact_eq(format!("{c}/idempotent"), &hh, &h, ""),
            Err(e) => report.error(format!("{c}/idempotent"), &e),
        }
        let m = p.homogeneous_degree().unwrap_or(0);
        if lambda_zero && m >= 1 {
            report.skipped(format!("{c}/maxwell"), "lambda_k = 0: Maxwell form degenerates, series route used");
        } else {
            match clebsch_project_maxwell(ctx, p) {
                Ok(mx) => report.exact_eq(format!("{c}/maxwell"), &mx, &h, ""),
                Err(e) => report.error(format!("{c}/maxwell"), &e),
            }
        }
        match harmonic_decompose(ctx, p) {
            Ok(dec) => {
                let back = dec.recompose(d);
                report.exact_eq(format!("{c}/recompose"), &back, p, "");
                let all = dec.components.iter().all(|comp| ctx.lap(&comp.h).is_zero());
                report.exact(format!("{c}/components-harmonic"), all, "non-harmonic component", "");
            }
            Err(e) => report.error(format!("{c}/recompose"), &e),
        }
    }
    report
}

/// Even monomials of total degree `<= max_deg`.
pub fn even_monomials(dim: usize, max_deg: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    fn rec(dim: usize, budget: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if cur.len() == dim {
            out.push(Monomial(cur.clone()));
            return;
        }
        let mut e = 0;
        while e <= budget {
            cur.push(e);
            rec(dim, budget - e, cur, out);
            cur.pop();
            e += 2;
        }
    }
    rec(dim, max_deg, &mut Vec::new(), &mut out);
    out
}

/// Mean of `sum_l (-1)^l Delta_k^l p_{2l}(0) / (4^l l! (lambda+1)_l)`, the
/// alternating-sign variant, for the sign comparison.
fn alternating_mean(ctx: &DunklContext, p: &Poly) -> Rational {
    let lam1 = ctx.lambda() + Rational::one();
    let mut acc = Rational::zero();
    for (deg, comp) in p.homogeneous_components() {
        if deg % 2 == 1 {
            continue;
        }
        let l = deg / 2;
        let sign = if l % 2 == 0 { int(1) } else { int(-1) };
        acc += sign * ctx.lap_pow(&comp, l).constant_term() / (pow_int(&int(4), l) * factorial(l) * pochhammer(&lam1, l));
    }
    acc
}

pub fn pizzetti(ctx: &DunklContext, opts: &SuiteOptions) -> VerificationReport {
    let mut report = new_report("pizzetti", ctx, opts);
    let d = ctx.dim();
    let max_deg = opts.deg.max(2);
    if ctx.system().is_z2d() {
        let kappa = ctx.system().orbit_multiplicities().to_vec();
        for m in even_monomials(d, max_deg) {
            let name = format!("oracle/{:?}", m.exps());
            let p = Poly::monomial(m.clone(), Rational::one());
            match (pizzetti_mean(ctx, &p), sphere_oracle_z2d(&kappa, m.exps())) {
                (Ok(a), Ok(b)) => report.exact_eq(name, &a, &b, ""),
                (Err(e), _) | (_, Err(e)) => report.error(name, &e),
            }
        }
    }
    // flat sphere: mean of x1^{2a} is (1/2)_a / (d/2)_a
    if let Ok(flat) = ctx.system().with_kappa(&[Rational::zero()]) {
        let flat = DunklContext::new(flat);
        for a in 0..=max_deg / 2 {
            let mut e = vec![0; d];
            e[0] = 2 * a;
            let p = Poly::monomial(Monomial(e), Rational::one());
            let expect = pochhammer(&frac(1, 2), a) / pochhammer(&frac(d as i64, 2), a);
            match pizzetti_mean(&flat, &p) {
                Ok(v) => report.exact_eq(format!("classical/x1^{}", 2 * a), &v, &expect, "kappa = 0"),
                Err(e) => report.error(format!("classical/x1^{}", 2 * a), &e),
            }
        }
    }
    // sign: the positive series is the one matching positivity of the mean of x1^2
    let x1sq = Poly::monomial(Monomial::var(d, 0).mul(&Monomial::var(d, 0)), Rational::one());
    let pos = pizzetti_mean(ctx, &x1sq).unwrap_or_else(|_| Rational::zero());
    let alt = alternating_mean(ctx, &x1sq);
    let detail = format!(
        "coefficients taken positive: mean(x1^2) = {pos}; alternating signs would give {alt}, a negative mean of a nonnegative function"
    );
    let ok = pos > Rational::zero() && alt < Rational::zero();
    report.exact("sign-resolution", ok, format!("positive {pos}, alternating {alt}"), detail);

    // G-invariance of the mean and the polar factorisation of the Gaussian moment
    let mut rng = rng(opts.seed);
    for i in 0..opts.count {
        let p = random_poly(&mut rng, d, max_deg, max_terms(d));
        let mean = match pizzetti_mean(ctx, &p) {
            Ok(v) => v,
            Err(e) => {
                report.error(format!("{}/invariance", case(i)), &e);
                continue;
            }
        };
        let mut all = true;
        for r in 0..ctx.system().positive_roots().len() {
            let q = ctx.system().reflection(r).apply(&p);
            if pizzetti_mean(ctx, &q).ok() != Some(mean.clone()) {
                all = false;
            }
        }
        report.exact(format!("{}/invariance", case(i)), all, "mean changed under a reflection", "");
        let lam1 = ctx.lambda() + Rational::one();
        let mut polar = Rational::zero();
        for (deg, comp) in p.homogeneous_components() {
            if deg % 2 == 0 {
                let l = deg / 2;
                polar += pizzetti_mean(ctx, &comp).unwrap() * pow_int(&int(2), l) * pochhammer(&lam1, l);
            }
        }
        match gaussian_moment(ctx, &p) {
            Ok(g) => report.exact_eq(format!("{}/gaussian-polar", case(i)), &g, &polar, ""),
            Err(e) => report.error(format!("{}/gaussian-polar", case(i)), &e),
        }
    }
    report
}

pub fn hermite(ctx: &DunklContext, opts: &SuiteOptions) -> VerificationReport {
    let mut report = new_report("hermite", ctx, opts);
    let mut rng = rng(opts.seed);
    let d = ctx.dim();
    for (i, p) in suite_polys(&mut rng, d, opts.deg, opts.count).iter().enumerate() {
        let c = case(i);
        match rodrigues_residual(ctx, p) {
            Ok(r) => report.exact(format!("{c}/rodrigues"), r.is_zero(), &r, ""),
            Err(e) => report.error(format!("{c}/rodrigues"), &e),
        }
        match diffgauss_residual(ctx, p) {
            Ok(r) => report.exact(format!("{c}/diffgauss"), r.is_zero(), &r, ""),
            Err(e) => report.error(format!("{c}/diffgauss"), &e),
        }
        let fixed = clebsch_project_series(ctx, p).and_then(|h| Ok((hermite_poly(ctx, &h)?, h)));
        match fixed {
            Ok((hp, h)) => report.exact_eq(format!("{c}/harmonic-fixed"), &hp, &h, ""),
            Err(e) => report.error(format!("{c}/harmonic-fixed"), &e),
        }
    }
    report
}

pub fn mean_value(ctx: &DunklContext, opts: &SuiteOptions) -> VerificationReport {
    let mut report = new_report("mean-value", ctx, opts);
    let mut rng = rng(opts.seed);
    let d = ctx.dim();
    for i in 0..opts.count {
        let m = (i as u32) % (opts.deg.min(4) + 1);
        let mono = random_monomial(&mut rng, d, m);
        let p = Poly::monomial(mono, Rational::one());
        let name = format!("{}/m{}", case(i), m);
        match clebsch_project_series(ctx, &p) {
            Ok(h) => match pizzetti_mean(ctx, &h) {
                Ok(v) => report.exact_eq(name, &v, &h.constant_term(), format!("h = {h}")),
                Err(e) => report.error(name, &e),
            },
            Err(e) => report.error(name, &e),
        }
    }
    report
}

/// Six points with norm at most 5, restricted or extended to `dim`.
pub fn y_grid(dim: usize) -> Vec<Vec<f64>> {
    const BASE: [[f64; 3]; 6] = [
        [0.0, 0.0, 0.0],
        [0.5, 0.25, -0.25],
        [-1.0, 0.75, 0.5],
        [1.5, -1.25, 0.75],
        [2.5, 1.5, -1.0],
        [-3.0, 2.5, 1.25],
    ];
    BASE.iter()
        .map(|row| (0..dim).map(|i| if i < 3 { row[i] } else { 0.25 * (i as f64 - 2.0) }).collect())
        .collect()
}

/// Default tolerances for the transform checks.
pub struct TransformTolerances {
    pub sph1: f64,
    pub hecke: f64,
    pub hermite: f64,
    pub hankel_rel: f64,
    pub bochner: f64,
    pub dtmul: f64,
    pub doubling: f64,
    pub kernel_rel: f64,
}

impl TransformTolerances {
    pub fn new(overall: Option<f64>) -> Self {
        let t = |x: f64| overall.unwrap_or(x);
        TransformTolerances {
            sph1: t(1e-9),
            hecke: t(1e-8),
            hermite: t(1e-8),
            hankel_rel: t(1e-10),
            bochner: t(1e-8),
            dtmul: t(1e-8),
            doubling: 1e-12,
            kernel_rel: 1e-12,
        }
    }
}

fn label_y(y: &[f64]) -> String {
    let parts: Vec<String> = y.iter().map(|v| format!("{v}")).collect();
    format!("y=({})", parts.join(","))
}

pub fn transforms(ctx: &DunklContext, opts: &SuiteOptions) -> Result<VerificationReport> {
    let kappa = transform::z2d_kappa(ctx)?;
    let mut report = new_report("transforms", ctx, opts);
    let tol = TransformTolerances::new(opts.tolerance);
    report.tolerance = opts.tolerance;
    let d = ctx.dim();
    let grid = y_grid(d);
    let lam = crate::rational::to_f64(ctx.lambda());
    let mut rng = rng(opts.seed);

    // kernel series: flat kernel is the exponential, eigen-property
    for (i, y) in grid.iter().enumerate() {
        let x: Vec<f64> = (0..d).map(|j| 0.3 - 0.4 * j as f64).collect();
        let yc: Vec<Complex64> = y.iter().map(|&v| Complex64::new(0.0, -v)).collect();
        let flat = vec![Rational::zero(); d];
        match transform::dunkl_kernel_z2d(&flat, &x, &yc) {
            Ok(v) => {
                let dot: f64 = x.iter().zip(y).map(|(a, b)| a * b).sum();
                let e = Complex64::new(0.0, -dot).exp();
                report.numeric(format!("kernel/flat/{i}"), v, e, tol.kernel_rel, true, label_y(y));
            }
            Err(e) => report.error(format!("kernel/flat/{i}"), &e),
        }
        for (j, k) in kappa.iter().enumerate() {
            let s = transform::KernelSeries1D::new(k, 80)?;
            let r = s.eigen_residual(x[j], yc[j]);
            report.scalar(format!("kernel/eigen/{i}/x{}", j + 1), r, tol.kernel_rel, label_y(y));
        }
    }

    let polys = suite_polys(&mut rng, d, opts.deg.min(4), opts.count.min(8));
    for (i, p) in polys.iter().enumerate() {
        for (k, y) in grid.iter().enumerate() {
            let tag = format!("{}/{}", case(i), k);
            match transform::sph1_values(ctx, p, y) {
                Ok((l, r)) => report.numeric(format!("sph1/{tag}"), l, r, tol.sph1, false, format!("p = {p}, {}", label_y(y))),
                Err(e) => report.error(format!("sph1/{tag}"), &e),
            }
            match transform::hecke_values(ctx, p, y) {
                Ok((l, r)) => report.numeric(format!("hecke/{tag}"), l, r, tol.hecke, false, format!("p = {p}, {}", label_y(y))),
                Err(e) => report.error(format!("hecke/{tag}"), &e),
            }
            match transform::hermite_eigen_values(ctx, p, y) {
                Ok((l, r)) => report.numeric(format!("hermite/{tag}"), l, r, tol.hermite, false, format!("p = {p}, {}", label_y(y))),
                Err(e) => report.error(format!("hermite/{tag}"), &e),
            }
            match transform::truncation_doubling(ctx, p, y) {
                Ok(v) => report.scalar(format!("doubling/{tag}"), v, tol.doubling, "relative change"),
                Err(e) => report.error(format!("doubling/{tag}"), &e),
            }
        }
    }

    // k-harmonic inputs: the three characterisations agree
    for (i, p) in polys.iter().enumerate() {
        let h = clebsch_project_series(ctx, p)?;
        if h.is_zero() {
            continue;
        }
        let m = h.homogeneous_degree()?;
        for (k, y) in grid.iter().enumerate() {
            let tag = format!("{}/{}", case(i), k);
            match transform::sph2_values(ctx, &h, y) {
                Ok((l, r)) => report.numeric(format!("sph2/{tag}"), l, r, tol.sph1, false, format!("h = {h}")),
                Err(e) => report.error(format!("sph2/{tag}"), &e),
            }
            let yq: Vec<Rational> = y.iter().map(|&v| crate::rational::from_f64(v)).collect();
            let rho2: f64 = y.iter().map(|v| v * v).sum();
            let rhs = transform::minus_i_pow(m) * crate::rational::to_f64(&h.eval(&yq)) * (-rho2 / 2.0).exp();
            match transform::dunkl_transform_gauss_poly(ctx, &h, y) {
                Ok(l) => report.numeric(format!("hecke2/{tag}"), l, rhs, tol.hecke, false, format!("h = {h}")),
                Err(e) => report.error(format!("hecke2/{tag}"), &e),
            }
        }
    }

    // spherical mean of the kernel against the Bessel closed form
    for (k, y) in grid.iter().enumerate() {
        match transform::dts_values(ctx, y) {
            Ok((l, r)) => report.numeric(format!("dts/{k}"), l, r, tol.sph1, true, label_y(y)),
            Err(e) => report.error(format!("dts/{k}"), &e),
        }
    }

    // Hankel transform fixes the Gaussian
    let g = RadialProfile::gaussian(frac(-1, 2));
    for m in 0..=2u32 {
        for s in [0.0, 0.5, 1.0, 2.0, 3.0] {
            let nu = lam + m as f64;
            let name = format!("hankel/nu+{m}/s={s}");
            match transform::hankel_numeric(&g, nu, s) {
                Ok(v) => report.numeric(
                    name,
                    Complex64::new(v, 0.0),
                    Complex64::new((-s * s / 2.0f64).exp(), 0.0),
                    tol.hankel_rel,
                    true,
                    format!("nu = {nu}"),
                ),
                Err(e) => report.error(name, &e),
            }
        }
    }

    // Bochner identity with f0 = r^{2n} e^{-r^2/2}, Hankel by quadrature
    for (i, p) in polys.iter().take(4).enumerate() {
        for n in 0..=1u32 {
            for (k, y) in grid.iter().enumerate().skip(1).step_by(2) {
                let name = format!("bochner/{}/n{}/{}", case(i), n, k);
                match transform::bochner_hankel_values(ctx, p, n, y) {
                    Ok((l, r)) => report.numeric(name, l, r, tol.bochner, false, format!("p = {p}, {}", label_y(y))),
                    Err(e) => report.error(name, &e),
                }
            }
        }
    }

    if d == 1 {
        let ys: Vec<f64> = grid.iter().map(|y| y[0]).collect();
        for (label, f) in [("1", "1"), ("x", "x1"), ("x^2", "x1^2"), ("x^3-x", "x1^3 - x1")] {
            let f = crate::poly::parse_poly(f, 1)?;
            match transform::dtmul_check(ctx, &f, &ys) {
                Ok(r) => report.scalar(format!("dtmul/{label}"), r, tol.dtmul, "max over grid"),
                Err(e) => report.error(format!("dtmul/{label}"), &e),
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::parse_rational_list;
    use crate::rootsys::RootSystemData;

    fn ctx(name: &str, kappa: &str) -> DunklContext {
        DunklContext::new(RootSystemData::from_name(name, &parse_rational_list(kappa).unwrap()).unwrap())
    }

    #[test]
    fn exact_suites_pass_small() {
        let c = ctx("b:d=2", "1,2");
        let opts = SuiteOptions { seed: 7, deg: 4, count: 4, tolerance: None };
        for name in SUITES.iter().filter(|s| **s != "transforms") {
            let r = run_suite(name, &c, &opts).unwrap();
            assert!(r.passed(), "{}: {:?}", name, r.failures().next());
        }
    }

    #[test]
    fn transforms_need_z2d() {
        let c = ctx("a:d=3", "1");
        assert_eq!(run_suite("transforms", &c, &SuiteOptions::default()).unwrap_err(), DunklError::NotZ2d);
    }

    #[test]
    fn even_monomial_count() {
        // degree <= 4 in two variables: (0,0),(0,2),(0,4),(2,0),(2,2),(4,0)
        assert_eq!(even_monomials(2, 4).len(), 6);
    }
}
