//! C ABI for the `alexander` library.
//!
//! Polynomials cross the boundary as opaque `AlexPoly` handles; links,
//! presentations and curves as JSON text. Every function returns an
//! `AlexStatus`; on failure `alex_last_error()` describes the problem.
//! Strings handed out by the library are freed with `alex_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use alexander::fox::alexander_polynomial;
use alexander::io;
use alexander::linkpoly::{hat_delta, multivariable_delta, one_variable_delta, LinkError};
use alexander::ring::{LaurentPoly, Multiplicity};
use alexander::verify::{generic_infinity, verify_curve};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AlexStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    InvalidInput = 4,
    Computation = 5,
    Panic = 6,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AlexLinkMode {
    /// Every meridian to `t`.
    OneVariable = 0,
    /// One variable per component.
    Multivariable = 1,
    /// Twisted polynomial of the marked link (one-variable if unmarked).
    Hat = 2,
}

/// Laurent polynomial in one variable with rational coefficients.
pub struct AlexPoly(LaurentPoly);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = msg);
}

struct Fail(AlexStatus, String);

fn run(f: impl FnOnce() -> Result<(), Fail>) -> AlexStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            AlexStatus::Ok
        }
        Ok(Err(Fail(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            AlexStatus::Panic
        }
    }
}

unsafe fn text<'a>(s: *const c_char) -> Result<&'a str, Fail> {
    if s.is_null() {
        return Err(Fail(AlexStatus::NullPointer, "null string".into()));
    }
    CStr::from_ptr(s).to_str().map_err(|_| Fail(AlexStatus::InvalidUtf8, "string is not UTF-8".into()))
}

unsafe fn poly<'a>(p: *const AlexPoly) -> Result<&'a LaurentPoly, Fail> {
    p.as_ref().map(|p| &p.0).ok_or_else(|| Fail(AlexStatus::NullPointer, "null polynomial".into()))
}

unsafe fn put<T>(out: *mut T, value: T) -> Result<(), Fail> {
    if out.is_null() {
        return Err(Fail(AlexStatus::NullPointer, "null output pointer".into()));
    }
    out.write(value);
    Ok(())
}

unsafe fn put_poly(out: *mut *mut AlexPoly, p: LaurentPoly) -> Result<(), Fail> {
    put(out, Box::into_raw(Box::new(AlexPoly(p))))
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), Fail> {
    let c = CString::new(s).map_err(|_| Fail(AlexStatus::Computation, "interior NUL".into()))?;
    put(out, c.into_raw())
}

fn invalid(e: impl std::fmt::Display) -> Fail {
    Fail(AlexStatus::InvalidInput, e.to_string())
}

/// Message for the last failed call on this thread; empty after success.
/// Valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn alex_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// # Safety
/// `s` must be null or a string returned by this library.
#[no_mangle]
pub unsafe extern "C" fn alex_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses text such as `t^-1 - 1 + t`.
///
/// # Safety
/// `s` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn alex_poly_parse(s: *const c_char, out: *mut *mut AlexPoly) -> AlexStatus {
    run(|| {
        let p = text(s)?.parse::<LaurentPoly>().map_err(|e| Fail(AlexStatus::Parse, e.to_string()))?;
        put_poly(out, p)
    })
}

/// # Safety
/// `p` must be null or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn alex_poly_free(p: *mut AlexPoly) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn alex_poly_to_string(p: *const AlexPoly, out: *mut *mut c_char) -> AlexStatus {
    run(|| put_string(out, poly(p)?.to_string()))
}

/// Unit-normal form: integer, primitive, lowest exponent 0, positive
/// leading coefficient.
///
/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn alex_poly_normalize(p: *const AlexPoly, out: *mut *mut AlexPoly) -> AlexStatus {
    run(|| put_poly(out, poly(p)?.normalize().into_poly()))
}

/// # Safety
/// `a`, `b` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn alex_poly_mul(a: *const AlexPoly, b: *const AlexPoly, out: *mut *mut AlexPoly) -> AlexStatus {
    run(|| put_poly(out, poly(a)? * poly(b)?))
}

/// # Safety
/// `a`, `b` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn alex_poly_gcd(a: *const AlexPoly, b: *const AlexPoly, out: *mut *mut AlexPoly) -> AlexStatus {
    run(|| put_poly(out, poly(a)?.gcd(poly(b)?).into_poly()))
}

/// Whether `a` divides `b` up to units.
///
/// # Safety
/// `a`, `b` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn alex_poly_divides(a: *const AlexPoly, b: *const AlexPoly, out: *mut bool) -> AlexStatus {
    run(|| put(out, poly(a)?.divides(poly(b)?)))
}

/// Whether `p` is zero or a product of cyclotomic polynomials.
///
/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn alex_poly_is_cyclotomic(p: *const AlexPoly, out: *mut bool) -> AlexStatus {
    run(|| {
        let p = poly(p)?;
        let ok = p.cyclotomic_factorization().map_or(true, |f| f.is_cyclotomic_product());
        put(out, ok)
    })
}

/// Largest `k` with `factor^k | p`; -1 when `p` is zero.
///
/// # Safety
/// `p`, `factor` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn alex_poly_multiplicity(
    p: *const AlexPoly,
    factor: *const AlexPoly,
    out: *mut i64,
) -> AlexStatus {
    run(|| {
        let m = poly(p)?.multiplicity(poly(factor)?).map_err(invalid)?;
        put(out, match m {
            Multiplicity::Finite(k) => i64::from(k),
            Multiplicity::Infinite => -1,
        })
    })
}

/// Alexander polynomial of a presentation JSON, as normalized text.
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn alex_fox_json(json: *const c_char, out: *mut *mut c_char) -> AlexStatus {
    run(|| {
        let (p, phi) = io::parse_presentation(text(json)?).map_err(invalid)?;
        let d = alexander_polynomial(&p, &phi).map_err(invalid)?;
        let s = match d.to_univariate() {
            Some(u) => u.normalize().to_string(),
            None => d.to_string(),
        };
        put_string(out, s)
    })
}

/// Alexander polynomial of a link JSON, as normalized text.
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn alex_link_json(json: *const c_char, mode: AlexLinkMode, out: *mut *mut c_char) -> AlexStatus {
    run(|| {
        let link = io::parse_link(text(json)?).map_err(invalid)?;
        let link_fail = |e: LinkError| match e {
            LinkError::PathMismatch { .. } => Fail(AlexStatus::Computation, e.to_string()),
            e => invalid(e),
        };
        let s = match mode {
            AlexLinkMode::OneVariable => one_variable_delta(&link).map_err(link_fail)?.to_string(),
            AlexLinkMode::Multivariable => multivariable_delta(&link).map_err(link_fail)?.to_string(),
            AlexLinkMode::Hat => hat_delta(&link).map_err(link_fail)?.to_string(),
        };
        put_string(out, s)
    })
}

/// Runs every check for a curve JSON against `delta` (polynomial text) and
/// the generic link at infinity. Writes the JSON report and whether all
/// checks passed.
///
/// # Safety
/// `curve_json`, `delta` must be NUL-terminated strings; `report`, `passed`
/// must be writable.
#[no_mangle]
pub unsafe extern "C" fn alex_verify_curve_json(
    curve_json: *const c_char,
    delta: *const c_char,
    report: *mut *mut c_char,
    passed: *mut bool,
) -> AlexStatus {
    run(|| {
        let c = io::parse_curve(text(curve_json)?).map_err(invalid)?;
        let d: LaurentPoly = text(delta)?.parse().map_err(|e| Fail(AlexStatus::Parse, format!("{e}")))?;
        let r = verify_curve(&c, &d, &generic_infinity(c.degree())).map_err(invalid)?;
        if passed.is_null() {
            return Err(Fail(AlexStatus::NullPointer, "null output pointer".into()));
        }
        put_string(report, r.to_json())?;
        put(passed, r.passed())
    })
}
