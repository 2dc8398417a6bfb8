use std::ffi::{c_char, CStr, CString};
use std::ptr;

use dunkl_ffi::*;

fn cstr(s: &str) -> CString {
    CString::new(s).unwrap()
}

unsafe fn take_string(p: *mut c_char) -> String {
    let s = CStr::from_ptr(p).to_str().unwrap().to_owned();
    dunkl_string_free(p);
    s
}

unsafe fn context(system: &str, kappa: &str) -> *mut DunklContext {
    let mut ctx = ptr::null_mut();
    assert_eq!(dunkl_context_new(cstr(system).as_ptr(), cstr(kappa).as_ptr(), &mut ctx), DunklStatus::Ok);
    ctx
}

unsafe fn poly(ctx: *const DunklContext, text: &str) -> *mut DunklPoly {
    let mut p = ptr::null_mut();
    assert_eq!(dunkl_poly_parse(ctx, cstr(text).as_ptr(), &mut p), DunklStatus::Ok);
    p
}

#[test]
fn apply_and_round_trip() {
    unsafe {
        let ctx = context("z2:d=1", "1/2");
        assert_eq!(dunkl_context_dim(ctx), 1);
        let p = poly(ctx, "x1");
        let mut q = ptr::null_mut();
        assert_eq!(dunkl_apply(ctx, cstr("1").as_ptr(), p, &mut q), DunklStatus::Ok);
        let mut s = ptr::null_mut();
        assert_eq!(dunkl_poly_to_string(q, &mut s), DunklStatus::Ok);
        assert_eq!(take_string(s), "2");
        let two = poly(ctx, "2");
        assert_eq!(dunkl_poly_equal(q, two), 1);
        let mut lam = ptr::null_mut();
        assert_eq!(dunkl_context_lambda(ctx, &mut lam), DunklStatus::Ok);
        assert_eq!(take_string(lam), "0");
        for h in [p, q, two] {
            dunkl_poly_free(h);
        }
        dunkl_context_free(ctx);
    }
}

#[test]
fn projection_mean_and_hobson() {
    unsafe {
        let ctx = context("b:d=2", "1,1/2");
        let p = poly(ctx, "x1^2*x2^2 + 3*x1^4");
        let mut h = ptr::null_mut();
        assert_eq!(dunkl_project(ctx, p, &mut h), DunklStatus::Ok);
        let mut lap = ptr::null_mut();
        assert_eq!(dunkl_laplacian(ctx, h, &mut lap), DunklStatus::Ok);
        let zero = poly(ctx, "0");
        assert_eq!(dunkl_poly_equal(lap, zero), 1);
        let mut mean = ptr::null_mut();
        assert_eq!(dunkl_pizzetti_mean(ctx, h, &mut mean), DunklStatus::Ok);
        assert_eq!(take_string(mean), "0");
        let mut holds = -1;
        assert_eq!(dunkl_hobson_check(ctx, p, cstr("r^(7/2)").as_ptr(), &mut holds), DunklStatus::Ok);
        assert_eq!(holds, 1);
        for q in [p, h, lap, zero] {
            dunkl_poly_free(q);
        }
        dunkl_context_free(ctx);
    }
}

#[test]
fn transform_and_verify() {
    unsafe {
        let ctx = context("z2:d=2", "1/2");
        let p = poly(ctx, "1");
        let y = [1.0, 0.5];
        let (mut re, mut im) = (0.0, 0.0);
        assert_eq!(dunkl_transform_gauss(ctx, p, y.as_ptr(), 2, &mut re, &mut im), DunklStatus::Ok);
        assert!((re - (-0.625f64).exp()).abs() < 1e-12 && im.abs() < 1e-12);
        let mut json = ptr::null_mut();
        let mut passed = 0;
        assert_eq!(dunkl_verify(ctx, cstr("com00").as_ptr(), 3, 4, 3, &mut json, &mut passed), DunklStatus::Ok);
        assert_eq!(passed, 1);
        assert!(take_string(json).contains("\"suite\": \"com00\""));
        dunkl_poly_free(p);
        dunkl_context_free(ctx);
    }
}

#[test]
fn error_codes_and_messages() {
    unsafe {
        let mut ctx = ptr::null_mut();
        assert_eq!(dunkl_context_new(cstr("q:d=3").as_ptr(), cstr("1").as_ptr(), &mut ctx), DunklStatus::InvalidSystem);
        assert!(ctx.is_null());
        let msg = CStr::from_ptr(dunkl_last_error()).to_str().unwrap();
        assert!(msg.contains("q:d=3"), "{msg}");
        assert_eq!(dunkl_context_new(cstr("b:d=2").as_ptr(), cstr("-1").as_ptr(), &mut ctx), DunklStatus::InvalidSystem);
        assert_eq!(dunkl_context_new(ptr::null(), cstr("1").as_ptr(), &mut ctx), DunklStatus::NullPointer);

        let ctx = context("a:d=3", "1");
        let mut p = ptr::null_mut();
        assert_eq!(dunkl_poly_parse(ctx, cstr("x1 +* 2").as_ptr(), &mut p), DunklStatus::Parse);
        assert_eq!(dunkl_poly_parse(ctx, cstr("x7").as_ptr(), &mut p), DunklStatus::Parse);
        let q = poly(ctx, "x1*x2");
        let (mut re, mut im) = (0.0, 0.0);
        let y = [1.0, 2.0, 3.0];
        assert_eq!(dunkl_transform_gauss(ctx, q, y.as_ptr(), 3, &mut re, &mut im), DunklStatus::NotZ2d);
        let mut h = ptr::null_mut();
        let mixed = poly(ctx, "x1 + x2^2");
        assert_eq!(dunkl_project(ctx, mixed, &mut h), DunklStatus::InvalidArgument);
        assert_eq!(dunkl_poly_to_string(ptr::null(), &mut ptr::null_mut()), DunklStatus::NullPointer);
        dunkl_poly_free(q);
        dunkl_poly_free(mixed);
        dunkl_context_free(ctx);
        // NULL handles are ignored by the release functions
        dunkl_context_free(ptr::null_mut());
        dunkl_poly_free(ptr::null_mut());
        dunkl_string_free(ptr::null_mut());
    }
}

#[test]
fn version_is_static() {
    let v = unsafe { CStr::from_ptr(dunkl_version()) };
    assert_eq!(v.to_str().unwrap(), env!("CARGO_PKG_VERSION"));
}
