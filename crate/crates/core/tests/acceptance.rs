//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on failure.
//!
//! Each criterion runs the verification suites over the system catalog with
//! multiplicities drawn per orbit from {0, 1/2, 1, 3/2, 2} under a fixed seed.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use dunkl_core::random::{kappa_samples, random_kappa, rng};
use dunkl_core::rational::{frac, int};
use dunkl_core::report::{CaseStatus, VerificationReport};
use dunkl_core::suites::{run_suite, SuiteOptions};
use dunkl_core::{DunklContext, Rational, RootSystemData};

const CATALOG: [&str; 7] = ["z2:d=1", "z2:d=2", "z2:d=3", "a:d=3", "b:d=2", "b:d=3", "d:d=4"];
const SEED: u64 = 20240917;

fn context(name: &str, kappa: &[Rational]) -> DunklContext {
    DunklContext::new(RootSystemData::from_name(name, kappa).expect("catalog system"))
}

/// Catalog system with κ drawn per orbit from the sample set.
fn random_context(name: &str, seed: u64) -> DunklContext {
    let base = RootSystemData::from_name(name, &[int(0)]).expect("catalog system");
    let kappa = random_kappa(&mut rng(seed), base.num_orbits());
    DunklContext::new(base.with_kappa(&kappa).expect("orbit kappa"))
}

#[derive(Default)]
struct Tally {
    pass: usize,
    fail: usize,
    skipped: usize,
    runs: usize,
    max_residual: f64,
    notes: Vec<String>,
}

impl Tally {
    fn add(&mut self, report: &VerificationReport) {
        self.runs += 1;
        self.pass += report.count(CaseStatus::Pass);
        self.fail += report.count(CaseStatus::Fail);
        self.skipped += report.count(CaseStatus::Skipped);
        if let Some(r) = report.max_abs_residual() {
            self.max_residual = self.max_residual.max(r);
        }
        for f in report.failures().take(3) {
            self.notes.push(format!("{} / {} / {}: {} ({})", report.suite, report.system, f.name, f.residual, f.detail));
        }
    }

    fn run(&mut self, suite: &str, ctx: &DunklContext, opts: &SuiteOptions) {
        match run_suite(suite, ctx, opts) {
            Ok(r) => self.add(&r),
            Err(e) => {
                self.runs += 1;
                self.fail += 1;
                self.notes.push(format!("{suite} / {}: {e}", ctx.system().name()));
            }
        }
    }

    fn ok(&self) -> bool {
        self.fail == 0 && self.pass > 0
    }
}

struct Outcome {
    ok: bool,
    line: String,
    notes: Vec<String>,
}

fn finish(tally: Tally, extra: &str, budget: Option<(Duration, Duration)>) -> Outcome {
    let mut ok = tally.ok();
    let mut line = format!(
        "{} suite runs, {} cases pass, {} fail, {} skipped{extra}",
        tally.runs, tally.pass, tally.fail, tally.skipped
    );
    if let Some((took, limit)) = budget {
        line.push_str(&format!(", {:.1}s (target < {}s)", took.as_secs_f64(), limit.as_secs()));
        ok &= took < limit;
    }
    Outcome { ok, line, notes: tally.notes }
}

fn opts(seed: u64, deg: u32, count: usize) -> SuiteOptions {
    SuiteOptions { seed, deg, count, tolerance: None }
}

fn hobson() -> Outcome {
    let start = Instant::now();
    let mut t = Tally::default();
    for (i, name) in CATALOG.iter().enumerate() {
        let ctx = random_context(name, SEED + i as u64);
        t.run("hobson", &ctx, &opts(SEED + i as u64, 6, 50));
    }
    finish(t, ", residuals exactly 0", Some((start.elapsed(), Duration::from_secs(60))))
}

fn operators() -> Outcome {
    let mut t = Tally::default();
    for (i, name) in CATALOG.iter().enumerate() {
        let ctx = random_context(name, SEED + 100 + i as u64);
        let o = opts(SEED + 100 + i as u64, 6, 12);
        for suite in ["commutativity", "com00", "ad-formula", "laplacian-routes"] {
            t.run(suite, &ctx, &o);
        }
    }
    finish(t, "", None)
}

fn projection() -> Outcome {
    let mut t = Tally::default();
    for (i, name) in CATALOG.iter().enumerate() {
        let ctx = random_context(name, SEED + 200 + i as u64);
        t.run("projection", &ctx, &opts(SEED + 200 + i as u64, 6, 12));
    }
    // every catalog system also at κ = 1, so λ ≠ 0 and the Maxwell route is live
    for name in CATALOG {
        t.run("projection", &context(name, &[int(1)]), &opts(SEED + 250, 6, 12));
    }
    finish(t, ", skipped = Maxwell route at lambda = 0", None)
}

fn pizzetti() -> Outcome {
    let mut t = Tally::default();
    for d in 1..=4usize {
        let name = format!("z2:d={d}");
        for k in kappa_samples() {
            t.run("pizzetti", &context(&name, &[k]), &opts(SEED + 300, 8, 6));
        }
        t.run("pizzetti", &random_context(&name, SEED + 300 + d as u64), &opts(SEED + 300, 8, 6));
    }
    finish(t, ", oracle, classical and positive-sign cases", None)
}

fn hermite() -> Outcome {
    let mut t = Tally::default();
    for (i, name) in CATALOG.iter().enumerate() {
        let ctx = random_context(name, SEED + 400 + i as u64);
        t.run("hermite", &ctx, &opts(SEED + 400 + i as u64, 6, 12));
    }
    finish(t, "", None)
}

fn transforms() -> Outcome {
    let start = Instant::now();
    let mut t = Tally::default();
    let kappas = [int(0), frac(1, 2), int(1), frac(3, 2)];
    for d in 1..=2usize {
        let name = format!("z2:d={d}");
        for (i, k) in kappas.iter().enumerate() {
            t.run("transforms", &context(&name, std::slice::from_ref(k)), &opts(SEED + 500 + i as u64, 4, 8));
        }
    }
    // distinct per-coordinate multiplicities
    for mixed in [[frac(1, 2), frac(3, 2)], [int(0), int(1)]] {
        t.run("transforms", &context("z2:d=2", &mixed), &opts(SEED + 550, 4, 8));
    }
    let extra = format!(", max abs residual {:.1e}", t.max_residual);
    finish(t, &extra, Some((start.elapsed(), Duration::from_secs(30))))
}

fn mean_value() -> Outcome {
    let mut t = Tally::default();
    for (i, name) in CATALOG.iter().enumerate() {
        let ctx = random_context(name, SEED + 600 + i as u64);
        t.run("mean-value", &ctx, &opts(SEED + 600 + i as u64, 4, 12));
        t.run("mean-value", &context(name, &[frac(1, 2)]), &opts(SEED + 650, 4, 12));
    }
    finish(t, "", None)
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 7] = [
        ("hobson identity", hobson),
        ("operator identities", operators),
        ("harmonic projection", projection),
        ("pizzetti oracle", pizzetti),
        ("hermite polynomials", hermite),
        ("transforms", transforms),
        ("mean-value property", mean_value),
    ];
    let mut all = true;
    for (i, (label, f)) in criteria.iter().enumerate() {
        let out = f();
        all &= out.ok;
        println!("criterion {} {label}: {} - {}", i + 1, if out.ok { "PASS" } else { "FAIL" }, out.line);
        for n in out.notes.iter().take(10) {
            println!("    {n}");
        }
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
