//! The `dunkl` command line.
//!
//! Exit codes: 0 success, 1 a verification failed, 2 usage or input error,
//! 3 internal invariant violation.

use std::io::Write;
use std::panic::{catch_unwind, AssertUnwindSafe};

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use crate::dunkl::DunklContext;
use crate::error::{DunklError, Result};
use crate::harmonic::{clebsch_project_maxwell, clebsch_project_series, harmonic_decompose, hermite_poly};
use crate::integrate::{pizzetti_mean, sphere_oracle_z2d};
use crate::poly::{parse_poly, Poly};
use crate::radial::{hobson_lhs, hobson_rhs, RadialProfile};
use crate::rational::{fmt_rational, parse_rational_list, Rational};
use crate::report::fmt_complex;
use crate::rootsys::RootSystemData;
use crate::suites::{run_suite, SuiteOptions, SUITES};
use crate::transform;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "dunkl", version, about = "Exact Dunkl-operator calculus")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct SystemArgs {
    /// Root system: z2:d=N, a:d=N, b:d=N, d:d=N or custom:<file.json>
    #[arg(long)]
    system: String,
    /// Multiplicities: one value, one per orbit, or one per positive root
    #[arg(long, default_value = "0")]
    kappa: String,
    /// Emit JSON
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Apply the Dunkl operator D_xi
    Apply {
        #[command(flatten)]
        sys: SystemArgs,
        /// Direction as comma-separated rationals
        #[arg(long)]
        xi: String,
        #[arg(long)]
        poly: String,
    },
    /// Dunkl Laplacian
    Laplacian {
        #[command(flatten)]
        sys: SystemArgs,
        #[arg(long)]
        poly: String,
        /// sq (sum of D_j^2), expr (closed expression) or invariant
        #[arg(long, default_value = "sq")]
        route: String,
    },
    /// Both sides of the Hobson formula for p(D) applied to a radial profile
    Hobson {
        #[command(flatten)]
        sys: SystemArgs,
        #[arg(long)]
        poly: String,
        /// e.g. "r^(7/2)", "exp(-1/2*r^2)", "r^3*exp(-r^2)"
        #[arg(long)]
        profile: String,
    },
    /// Clebsch projection onto k-harmonics
    Project {
        #[command(flatten)]
        sys: SystemArgs,
        #[arg(long)]
        poly: String,
        /// series or maxwell
        #[arg(long, default_value = "series")]
        route: String,
    },
    /// Decomposition p = sum ||x||^{2j} h_j
    Decompose {
        #[command(flatten)]
        sys: SystemArgs,
        #[arg(long)]
        poly: String,
    },
    /// Generalized Hermite polynomial H_{p,k}
    Hermite {
        #[command(flatten)]
        sys: SystemArgs,
        #[arg(long)]
        poly: String,
    },
    /// Normalised spherical mean against h_k^2
    Pizzetti {
        #[command(flatten)]
        sys: SystemArgs,
        #[arg(long)]
        poly: String,
    },
    /// Spherical pairing or Gaussian transform at a point (Z2^d only)
    Transform {
        #[command(flatten)]
        sys: SystemArgs,
        #[arg(long)]
        poly: String,
        /// Point y as comma-separated decimals
        #[arg(long)]
        y: String,
        /// gauss (transform of p e^{-|x|^2/2}) or sphere (normalised spherical mean)
        #[arg(long, default_value = "gauss")]
        kind: String,
    },
    /// Run a named verification suite
    Verify {
        /// One of: hobson, commutativity, laplacian-routes, com00, ad-formula,
        /// projection, pizzetti, hermite, mean-value, transforms
        suite: String,
        #[command(flatten)]
        sys: SystemArgs,
        #[arg(long, default_value_t = 6)]
        deg: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 12)]
        count: usize,
        /// Numeric tolerance override (transforms only)
        #[arg(long)]
        tolerance: Option<f64>,
        /// Write the JSON report here
        #[arg(long)]
        report: Option<String>,
    },
}

fn load_system(sys: &SystemArgs) -> Result<DunklContext> {
    let kappa = parse_rational_list(&sys.kappa)?;
    Ok(DunklContext::new(RootSystemData::from_name(&sys.system, &kappa)?))
}

fn load_poly(ctx: &DunklContext, text: &str) -> Result<Poly> {
    parse_poly(text, ctx.dim())
}

fn parse_point(text: &str) -> Result<Vec<f64>> {
    text.split(',')
        .map(|s| {
            s.trim()
                .parse::<f64>()
                .map_err(|_| DunklError::Invalid(format!("not a number: '{}'", s.trim())))
        })
        .collect()
}

struct Outcome {
    text: String,
    json: serde_json::Value,
    ok: bool,
}

impl Outcome {
    fn ok(text: String, json: serde_json::Value) -> Self {
        Outcome { text, json, ok: true }
    }
}

fn execute(cmd: Command) -> Result<(Outcome, bool)> {
    match cmd {
        Command::Apply { sys, xi, poly } => {
            let ctx = load_system(&sys)?;
            let p = load_poly(&ctx, &poly)?;
            let xi = parse_rational_list(&xi)?;
            let r = ctx.dunkl_apply(&xi, &p)?;
            Ok((Outcome::ok(r.to_string(), json!({ "result": r.to_string() })), sys.json))
        }
        Command::Laplacian { sys, poly, route } => {
            let ctx = load_system(&sys)?;
            let p = load_poly(&ctx, &poly)?;
            let r = match route.as_str() {
                "sq" => ctx.dunkl_laplacian_sq(&p)?,
                "expr" => ctx.dunkl_laplacian_expr(&p)?,
                "invariant" => ctx.invariant_laplacian(&p)?,
                other => return Err(DunklError::Invalid(format!("unknown route '{other}'"))),
            };
            Ok((Outcome::ok(r.to_string(), json!({ "route": route, "result": r.to_string() })), sys.json))
        }
        Command::Hobson { sys, poly, profile } => {
            let ctx = load_system(&sys)?;
            let p = load_poly(&ctx, &poly)?;
            let phi = RadialProfile::parse(&profile)?;
            let lhs = hobson_lhs(&ctx, &p, &phi)?.canonical();
            let rhs = hobson_rhs(&ctx, &p, &phi)?;
            let ok = lhs == rhs;
            let residual = if ok { "0".to_string() } else { lhs.sub(&rhs).canonical().to_string() };
            let text = format!("lhs: {lhs}\nrhs: {rhs}\nresidual: {residual}");
            let json = json!({
                "lhs": lhs.to_string(),
                "rhs": rhs.to_string(),
                "residual": residual,
                "status": if ok { "pass" } else { "fail" },
            });
            Ok((Outcome { text, json, ok }, sys.json))
        }
        Command::Project { sys, poly, route } => {
            let ctx = load_system(&sys)?;
            let p = load_poly(&ctx, &poly)?;
            let r = match route.as_str() {
                "series" => clebsch_project_series(&ctx, &p)?,
                "maxwell" => clebsch_project_maxwell(&ctx, &p)?,
                other => return Err(DunklError::Invalid(format!("unknown route '{other}'"))),
            };
            Ok((Outcome::ok(r.to_string(), json!({ "route": route, "result": r.to_string() })), sys.json))
        }
        Command::Decompose { sys, poly } => {
            let ctx = load_system(&sys)?;
            let p = load_poly(&ctx, &poly)?;
            let dec = harmonic_decompose(&ctx, &p)?;
            let text = dec
                .components
                .iter()
                .map(|c| format!("j={}: {}", c.j, c.h))
                .collect::<Vec<_>>()
                .join("\n");
            let json = serde_json::to_value(&dec)?;
            Ok((Outcome::ok(text, json), sys.json))
        }
        Command::Hermite { sys, poly } => {
            let ctx = load_system(&sys)?;
            let p = load_poly(&ctx, &poly)?;
            let r = hermite_poly(&ctx, &p)?;
            Ok((Outcome::ok(r.to_string(), json!({ "result": r.to_string() })), sys.json))
        }
        Command::Pizzetti { sys, poly } => {
            let ctx = load_system(&sys)?;
            let p = load_poly(&ctx, &poly)?;
            let mean = pizzetti_mean(&ctx, &p)?;
            let mut json = json!({ "mean": fmt_rational(&mean) });
            let mut ok = true;
            if ctx.system().is_z2d() {
                let kappa = ctx.system().orbit_multiplicities().to_vec();
                let mut oracle = Rational::from_integer(0.into());
                for (m, c) in p.terms() {
                    if m.exps().iter().all(|e| e % 2 == 0) {
                        oracle += c * sphere_oracle_z2d(&kappa, m.exps())?;
                    }
                }
                ok = oracle == mean;
                json["oracle"] = json!(fmt_rational(&oracle));
                json["status"] = json!(if ok { "pass" } else { "fail" });
            }
            Ok((Outcome { text: fmt_rational(&mean), json, ok }, sys.json))
        }
        Command::Transform { sys, poly, y, kind } => {
            let ctx = load_system(&sys)?;
            let p = load_poly(&ctx, &poly)?;
            let y = parse_point(&y)?;
            let v = match kind.as_str() {
                "gauss" => transform::dunkl_transform_gauss_poly(&ctx, &p, &y)?,
                "sphere" => transform::sphere_pairing_mean(&ctx, &p, &y)?,
                other => return Err(DunklError::Invalid(format!("unknown kind '{other}'"))),
            };
            let text = fmt_complex(v);
            Ok((Outcome::ok(text, json!({ "kind": kind, "re": v.re, "im": v.im })), sys.json))
        }
        Command::Verify { suite, sys, deg, seed, count, tolerance, report } => {
            if !SUITES.contains(&suite.as_str()) {
                return Err(DunklError::Invalid(format!("unknown suite '{suite}'; expected one of {}", SUITES.join(", "))));
            }
            let ctx = load_system(&sys)?;
            let opts = SuiteOptions { seed, deg, count, tolerance };
            let rep = run_suite(&suite, &ctx, &opts)?;
            let json = serde_json::to_value(&rep)?;
            if let Some(path) = report {
                // same rendering as --json on stdout
                std::fs::write(&path, serde_json::to_string_pretty(&json)? + "\n")?;
            }
            let mut text = rep.summary();
            for f in rep.failures() {
                text.push_str(&format!("\nFAIL {}: {} ({})", f.name, f.residual, f.detail));
            }
            Ok((Outcome { text, json, ok: rep.passed() }, sys.json))
        }
    }
}

fn exit_code_for(e: &DunklError) -> i32 {
    if e.is_internal() {
        EXIT_INTERNAL
    } else {
        EXIT_USAGE
    }
}

/// Runs the CLI with the given arguments (including the program name),
/// writing to the given streams. Returns the exit code.
pub fn run_with<I, S>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            let rendered = e.render().to_string();
            if code == EXIT_OK {
                let _ = write!(out, "{rendered}");
            } else {
                let _ = write!(err, "{rendered}");
            }
            return code;
        }
    };
    let result = catch_unwind(AssertUnwindSafe(|| execute(cli.command)));
    match result {
        Ok(Ok((outcome, as_json))) => {
            if as_json {
                let _ = writeln!(out, "{}", serde_json::to_string_pretty(&outcome.json).unwrap());
            } else {
                let _ = writeln!(out, "{}", outcome.text);
            }
            if outcome.ok {
                EXIT_OK
            } else {
                EXIT_FAIL
            }
        }
        Ok(Err(e)) => {
            let _ = writeln!(err, "error: {e}");
            exit_code_for(&e)
        }
        Err(panic) => {
            let msg = panic
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| panic.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "unknown panic".into());
            let _ = writeln!(err, "internal error: {msg}");
            EXIT_INTERNAL
        }
    }
}

pub fn run<I, S>(argv: I) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(argv, &mut stdout.lock(), &mut stderr.lock())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("dunkl").chain(args.iter().copied());
        let code = run_with(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn apply_example() {
        let (code, out, _) = run_capture(&["apply", "--system", "z2:d=1", "--kappa", "1/2", "--xi", "1", "--poly", "x1"]);
        assert_eq!(code, 0);
        assert_eq!(out.trim(), "2");
    }

    #[test]
    fn pizzetti_example() {
        let (code, out, _) = run_capture(&["pizzetti", "--system", "z2:d=2", "--kappa", "1,0", "--poly", "x1^2"]);
        assert_eq!(code, 0);
        assert_eq!(out.trim(), "3/4");
    }

    #[test]
    fn usage_errors() {
        assert_eq!(run_capture(&["frobnicate"]).0, 2);
        assert_eq!(run_capture(&["apply", "--system", "q:d=2", "--xi", "1", "--poly", "x1"]).0, 2);
        assert_eq!(run_capture(&["apply", "--system", "z2:d=1", "--xi", "1", "--poly", "x1 +"]).0, 2);
        assert_eq!(run_capture(&["verify", "nope", "--system", "z2:d=1"]).0, 2);
    }
}
