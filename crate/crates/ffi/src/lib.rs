//! C interface to `dunkl-core`.
//!
//! Contexts and polynomials are opaque heap handles released with their
//! `*_free` function. Every fallible call returns a [`DunklStatus`]; on
//! failure the message is available from [`dunkl_last_error`] on the same
//! thread. Strings returned through out-parameters are owned by the caller
//! and released with [`dunkl_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use dunkl_core::harmonic::{clebsch_project_series, hermite_poly};
use dunkl_core::integrate::pizzetti_mean;
use dunkl_core::radial::hobson_residual;
use dunkl_core::rational::{fmt_rational, parse_rational_list};
use dunkl_core::suites::{run_suite, SuiteOptions};
use dunkl_core::transform::dunkl_transform_gauss_poly;
use dunkl_core::{parse_poly, DunklError, RadialProfile, RootSystemData};

/// Root system with multiplicities and operator caches.
pub struct DunklContext(dunkl_core::DunklContext);

/// Polynomial with exact rational coefficients.
pub struct DunklPoly(dunkl_core::Poly);

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DunklStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    InvalidSystem = 4,
    InvalidArgument = 5,
    NotZ2d = 6,
    Numeric = 7,
    Internal = 8,
    Panic = 9,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &DunklError) -> DunklStatus {
    use DunklError::*;
    match e {
        Parse { .. } | VariableOutOfRange { .. } => DunklStatus::Parse,
        ZeroRoot
        | NotReduced(..)
        | NotClosed { .. }
        | NegativeMultiplicity(_)
        | MultiplicityNotOrbitConstant(_)
        | MultiplicityCount { .. }
        | UnknownSystem(_) => DunklStatus::InvalidSystem,
        NotZ2d => DunklStatus::NotZ2d,
        OutOfRange(_) | TruncationFailure(_) | ToleranceNotReached(_) => DunklStatus::Numeric,
        e if e.is_internal() => DunklStatus::Internal,
        _ => DunklStatus::InvalidArgument,
    }
}

enum Failure {
    Status(DunklStatus, String),
    Core(DunklError),
}

impl From<DunklError> for Failure {
    fn from(e: DunklError) -> Self {
        Failure::Core(e)
    }
}

/// Runs `f`, translating errors and panics into a status code.
fn guard(f: impl FnOnce() -> Result<(), Failure>) -> DunklStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => DunklStatus::Ok,
        Ok(Err(Failure::Status(s, msg))) => {
            set_error(&msg);
            s
        }
        Ok(Err(Failure::Core(e))) => {
            set_error(&e.to_string());
            status_of(&e)
        }
        Err(_) => {
            set_error("internal panic");
            DunklStatus::Panic
        }
    }
}

unsafe fn as_ref<'a, T>(p: *const T, what: &str) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(|| Failure::Status(DunklStatus::NullPointer, format!("{what} is null")))
}

unsafe fn as_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(Failure::Status(DunklStatus::NullPointer, format!("{what} is null")));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Failure::Status(DunklStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure::Status(DunklStatus::NullPointer, "output pointer is null".into()));
    }
    out.write(value);
    Ok(())
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    let c = CString::new(s).map_err(|_| Failure::Status(DunklStatus::Internal, "string contains NUL".into()))?;
    write_out(out, c.into_raw())
}

unsafe fn write_poly(out: *mut *mut DunklPoly, p: dunkl_core::Poly) -> Result<(), Failure> {
    write_out(out, Box::into_raw(Box::new(DunklPoly(p))))
}

fn same_dim(ctx: &DunklContext, p: &DunklPoly) -> Result<(), Failure> {
    Ok(ctx.0.check_poly(&p.0)?)
}

/// Message of the last failed call on this thread, or NULL. Valid until the
/// next failing call on the same thread.
#[no_mangle]
pub extern "C" fn dunkl_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn dunkl_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Releases a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn dunkl_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Builds a context for a catalog system (`"b:d=3"`, `"custom:file.json"`, ...)
/// with multiplicities given as a comma-separated list of rationals: one
/// value, one per orbit or one per positive root.
///
/// # Safety
/// Strings must be NUL-terminated; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dunkl_context_new(system: *const c_char, kappa: *const c_char, out: *mut *mut DunklContext) -> DunklStatus {
    guard(|| {
        let name = as_str(system, "system")?;
        let kappa = parse_rational_list(as_str(kappa, "kappa")?)?;
        let rs = RootSystemData::from_name(name, &kappa)?;
        write_out(out, Box::into_raw(Box::new(DunklContext(dunkl_core::DunklContext::new(rs)))))
    })
}

/// # Safety
/// `ctx` must come from [`dunkl_context_new`] and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn dunkl_context_free(ctx: *mut DunklContext) {
    if !ctx.is_null() {
        drop(Box::from_raw(ctx));
    }
}

/// Ambient dimension, or 0 for NULL.
///
/// # Safety
/// `ctx` must be NULL or a live context.
#[no_mangle]
pub unsafe extern "C" fn dunkl_context_dim(ctx: *const DunklContext) -> usize {
    ctx.as_ref().map_or(0, |c| c.0.dim())
}

/// `lambda_k = gamma_k + d/2 - 1` as an exact rational string.
///
/// # Safety
/// `ctx` must be a live context; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dunkl_context_lambda(ctx: *const DunklContext, out: *mut *mut c_char) -> DunklStatus {
    guard(|| {
        let ctx = as_ref(ctx, "context")?;
        write_string(out, fmt_rational(ctx.0.lambda()))
    })
}

/// Parses a polynomial in `x1..xd` for the context's dimension.
///
/// # Safety
/// `ctx` must be a live context, `text` NUL-terminated, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn dunkl_poly_parse(ctx: *const DunklContext, text: *const c_char, out: *mut *mut DunklPoly) -> DunklStatus {
    guard(|| {
        let ctx = as_ref(ctx, "context")?;
        let p = parse_poly(as_str(text, "text")?, ctx.0.dim())?;
        write_poly(out, p)
    })
}

/// # Safety
/// `p` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn dunkl_poly_free(p: *mut DunklPoly) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Canonical text form; parses back to the same polynomial.
///
/// # Safety
/// `p` must be a live polynomial; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dunkl_poly_to_string(p: *const DunklPoly, out: *mut *mut c_char) -> DunklStatus {
    guard(|| {
        let p = as_ref(p, "polynomial")?;
        write_string(out, p.0.to_string())
    })
}

/// Returns 1 when the polynomials are equal, 0 otherwise (including NULL).
///
/// # Safety
/// Arguments must be NULL or live polynomials.
#[no_mangle]
pub unsafe extern "C" fn dunkl_poly_equal(a: *const DunklPoly, b: *const DunklPoly) -> i32 {
    match (a.as_ref(), b.as_ref()) {
        (Some(a), Some(b)) => (a.0 == b.0) as i32,
        _ => 0,
    }
}

/// `D_xi p`, with `xi` given as a comma-separated list of rationals.
///
/// # Safety
/// Handles must be live, `xi` NUL-terminated, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn dunkl_apply(
    ctx: *const DunklContext,
    xi: *const c_char,
    p: *const DunklPoly,
    out: *mut *mut DunklPoly,
) -> DunklStatus {
    guard(|| {
        let ctx = as_ref(ctx, "context")?;
        let p = as_ref(p, "polynomial")?;
        let xi = parse_rational_list(as_str(xi, "xi")?)?;
        write_poly(out, ctx.0.dunkl_apply(&xi, &p.0)?)
    })
}

/// Dunkl Laplacian `sum_j D_j^2 p`.
///
/// # Safety
/// Handles must be live; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn dunkl_laplacian(ctx: *const DunklContext, p: *const DunklPoly, out: *mut *mut DunklPoly) -> DunklStatus {
    guard(|| {
        let ctx = as_ref(ctx, "context")?;
        let p = as_ref(p, "polynomial")?;
        same_dim(ctx, p)?;
        write_poly(out, ctx.0.lap(&p.0))
    })
}

/// Projection of a homogeneous polynomial onto the k-harmonics.
///
/// # Safety
/// Handles must be live; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn dunkl_project(ctx: *const DunklContext, p: *const DunklPoly, out: *mut *mut DunklPoly) -> DunklStatus {
    guard(|| {
        let ctx = as_ref(ctx, "context")?;
        let p = as_ref(p, "polynomial")?;
        write_poly(out, clebsch_project_series(&ctx.0, &p.0)?)
    })
}

/// Generalized Hermite polynomial of a homogeneous polynomial.
///
/// # Safety
/// Handles must be live; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn dunkl_hermite(ctx: *const DunklContext, p: *const DunklPoly, out: *mut *mut DunklPoly) -> DunklStatus {
    guard(|| {
        let ctx = as_ref(ctx, "context")?;
        let p = as_ref(p, "polynomial")?;
        write_poly(out, hermite_poly(&ctx.0, &p.0)?)
    })
}

/// Normalised spherical mean against `h_k^2`, as an exact rational string.
///
/// # Safety
/// Handles must be live; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn dunkl_pizzetti_mean(ctx: *const DunklContext, p: *const DunklPoly, out: *mut *mut c_char) -> DunklStatus {
    guard(|| {
        let ctx = as_ref(ctx, "context")?;
        let p = as_ref(p, "polynomial")?;
        write_string(out, fmt_rational(&pizzetti_mean(&ctx.0, &p.0)?))
    })
}

/// Evaluates the Hobson identity for `p(D)` on a radial profile such as
/// `"r^3*exp(-r^2)"`; writes 1 to `out_holds` when the residual is exactly
/// zero, else 0.
///
/// # Safety
/// Handles must be live, `profile` NUL-terminated, `out_holds` writable.
#[no_mangle]
pub unsafe extern "C" fn dunkl_hobson_check(
    ctx: *const DunklContext,
    p: *const DunklPoly,
    profile: *const c_char,
    out_holds: *mut i32,
) -> DunklStatus {
    guard(|| {
        let ctx = as_ref(ctx, "context")?;
        let p = as_ref(p, "polynomial")?;
        let phi = RadialProfile::parse(as_str(profile, "profile")?)?;
        let r = hobson_residual(&ctx.0, &p.0, &phi)?;
        write_out(out_holds, r.is_zero() as i32)
    })
}

/// Dunkl transform of `p(x) e^{-||x||^2/2}` at `y` (Z2^d contexts only).
///
/// # Safety
/// Handles must be live; `y` must point to `len` doubles; outputs writable.
#[no_mangle]
pub unsafe extern "C" fn dunkl_transform_gauss(
    ctx: *const DunklContext,
    p: *const DunklPoly,
    y: *const f64,
    len: usize,
    out_re: *mut f64,
    out_im: *mut f64,
) -> DunklStatus {
    guard(|| {
        let ctx = as_ref(ctx, "context")?;
        let p = as_ref(p, "polynomial")?;
        if y.is_null() {
            return Err(Failure::Status(DunklStatus::NullPointer, "y is null".into()));
        }
        let y = std::slice::from_raw_parts(y, len);
        let v = dunkl_transform_gauss_poly(&ctx.0, &p.0, y)?;
        write_out(out_re, v.re)?;
        write_out(out_im, v.im)
    })
}

/// Runs a named verification suite and writes its JSON report. `out_passed`
/// receives 1 when no case failed.
///
/// # Safety
/// `ctx` must be live, `suite` NUL-terminated, outputs writable.
#[no_mangle]
pub unsafe extern "C" fn dunkl_verify(
    ctx: *const DunklContext,
    suite: *const c_char,
    seed: u64,
    deg: u32,
    count: usize,
    out_json: *mut *mut c_char,
    out_passed: *mut i32,
) -> DunklStatus {
    guard(|| {
        let ctx = as_ref(ctx, "context")?;
        let suite = as_str(suite, "suite")?;
        let rep = run_suite(suite, &ctx.0, &SuiteOptions { seed, deg, count, tolerance: None })?;
        write_out(out_passed, rep.passed() as i32)?;
        write_string(out_json, rep.to_json())
    })
}
