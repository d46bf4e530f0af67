//! C ABI for the harmonic-gauss library.
//!
//! Surfaces are opaque handles created from the same JSON documents the CLI
//! consumes. Every function returns an [`HgStatus`] code; outputs go through
//! out-pointers. Exact quantities cross the boundary as `"num/den"` strings
//! so no precision is lost; strings returned by this library must be freed
//! with [`hg_string_free`], surfaces with [`hg_surface_free`].

#![allow(clippy::result_large_err)]

use std::ffi::{CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use libc::c_char;

use harmonic_gauss::error::Error;
use harmonic_gauss::gauss::{self, Planarity};
use harmonic_gauss::json;
use harmonic_gauss::rational::{format_rational, parse_rational, Rational};
use harmonic_gauss::surface::HarmonicSurface;
use harmonic_gauss::verify::{run_suite, SuiteParams};
use harmonic_gauss::weierstrass::{integrate, phi_from_pq};

/// Status codes returned by every entry point.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HgStatus {
    Ok = 0,
    ParseError = 1,
    NotHarmonic = 2,
    OutOfDomain = 3,
    BranchPoint = 4,
    GaussDegenerate = 5,
    NorthPole = 6,
    NotNormalized = 7,
    DegenerateSurface = 8,
    InvalidDistortion = 9,
    NullViolation = 10,
    UnknownSuite = 11,
    InvalidInput = 12,
    NullPointer = 13,
    InvalidUtf8 = 14,
    InternalPanic = 15,
}

/// Opaque surface handle.
pub struct HgSurface {
    inner: HarmonicSurface,
}

fn status_of(err: &Error) -> HgStatus {
    match err {
        Error::NotHarmonic { .. } => HgStatus::NotHarmonic,
        Error::OutOfDomain { .. } => HgStatus::OutOfDomain,
        Error::BranchPoint { .. } => HgStatus::BranchPoint,
        Error::GaussDegenerate { .. } => HgStatus::GaussDegenerate,
        Error::NorthPole => HgStatus::NorthPole,
        Error::NotNormalized => HgStatus::NotNormalized,
        Error::DegenerateSurface => HgStatus::DegenerateSurface,
        Error::InvalidDistortion { .. } => HgStatus::InvalidDistortion,
        Error::NullViolation => HgStatus::NullViolation,
        Error::Parse(_) => HgStatus::ParseError,
        Error::UnknownSuite(_) => HgStatus::UnknownSuite,
        Error::InvalidInput(_) => HgStatus::InvalidInput,
    }
}

/// # Safety
/// `p` must be null or a valid NUL-terminated string.
unsafe fn utf8_in<'a>(p: *const c_char) -> Result<&'a str, HgStatus> {
    if p.is_null() {
        return Err(HgStatus::NullPointer);
    }
    CStr::from_ptr(p).to_str().map_err(|_| HgStatus::InvalidUtf8)
}

fn string_out(s: String, out: *mut *mut c_char) -> HgStatus {
    match CString::new(s) {
        Ok(c) => {
            unsafe { *out = c.into_raw() };
            HgStatus::Ok
        }
        Err(_) => HgStatus::InternalPanic,
    }
}

fn guarded(body: impl FnOnce() -> HgStatus) -> HgStatus {
    catch_unwind(AssertUnwindSafe(body)).unwrap_or(HgStatus::InternalPanic)
}

unsafe fn surface_ref<'a>(s: *const HgSurface) -> Result<&'a HarmonicSurface, HgStatus> {
    if s.is_null() {
        return Err(HgStatus::NullPointer);
    }
    Ok(&(*s).inner)
}

unsafe fn parse_point(
    x: *const c_char,
    y: *const c_char,
) -> Result<(Rational, Rational), HgStatus> {
    let x = parse_rational(utf8_in(x)?).map_err(|e| status_of(&e))?;
    let y = parse_rational(utf8_in(y)?).map_err(|e| status_of(&e))?;
    Ok((x, y))
}

/// Parses a surface JSON document into a new handle.
///
/// # Safety
/// `json` must be a valid NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hg_surface_from_json(
    json: *const c_char,
    out: *mut *mut HgSurface,
) -> HgStatus {
    if out.is_null() {
        return HgStatus::NullPointer;
    }
    *out = ptr::null_mut();
    let text = match utf8_in(json) {
        Ok(t) => t,
        Err(s) => return s,
    };
    guarded(|| match json::parse_surface(text).and_then(|i| i.to_surface()) {
        Ok(surface) => {
            *out = Box::into_raw(Box::new(HgSurface { inner: surface }));
            HgStatus::Ok
        }
        Err(e) => status_of(&e),
    })
}

/// Frees a surface handle; null is a no-op.
///
/// # Safety
/// `s` must be null or a pointer from [`hg_surface_from_json`] /
/// [`hg_weierstrass_surface_from_json`] that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn hg_surface_free(s: *mut HgSurface) {
    if !s.is_null() {
        drop(Box::from_raw(s));
    }
}

/// Serializes the surface back to its canonical JSON document.
///
/// # Safety
/// `s` must be a valid handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hg_surface_to_json(
    s: *const HgSurface,
    out: *mut *mut c_char,
) -> HgStatus {
    if out.is_null() {
        return HgStatus::NullPointer;
    }
    let surface = match surface_ref(s) {
        Ok(r) => r,
        Err(st) => return st,
    };
    guarded(|| string_out(json::surface_to_json_string(surface), out))
}

/// Exact squared distortion at (x, y), written as a `"num/den"` string.
///
/// # Safety
/// `s` must be a valid handle; `x`, `y` NUL-terminated rationals; `out` valid.
#[no_mangle]
pub unsafe extern "C" fn hg_surface_distortion_sq(
    s: *const HgSurface,
    x: *const c_char,
    y: *const c_char,
    out: *mut *mut c_char,
) -> HgStatus {
    rational_query(s, x, y, out, |surface, pt| surface.distortion_sq(pt))
}

/// Exact squared distortion of the Gauss map at (x, y).
///
/// # Safety
/// Same contract as [`hg_surface_distortion_sq`].
#[no_mangle]
pub unsafe extern "C" fn hg_surface_gauss_distortion_sq(
    s: *const HgSurface,
    x: *const c_char,
    y: *const c_char,
    out: *mut *mut c_char,
) -> HgStatus {
    rational_query(s, x, y, out, gauss::gauss_distortion_sq)
}

/// Exact curvature sign proxy at (x, y); non-positive for every harmonic
/// surface.
///
/// # Safety
/// Same contract as [`hg_surface_distortion_sq`].
#[no_mangle]
pub unsafe extern "C" fn hg_surface_curvature_sign(
    s: *const HgSurface,
    x: *const c_char,
    y: *const c_char,
    out: *mut *mut c_char,
) -> HgStatus {
    rational_query(s, x, y, out, gauss::curvature_sign)
}

unsafe fn rational_query(
    s: *const HgSurface,
    x: *const c_char,
    y: *const c_char,
    out: *mut *mut c_char,
    f: impl Fn(&HarmonicSurface, &(Rational, Rational)) -> harmonic_gauss::Result<Rational>,
) -> HgStatus {
    if out.is_null() {
        return HgStatus::NullPointer;
    }
    let surface = match surface_ref(s) {
        Ok(r) => r,
        Err(st) => return st,
    };
    let pt = match parse_point(x, y) {
        Ok(p) => p,
        Err(st) => return st,
    };
    guarded(|| match f(surface, &pt) {
        Ok(v) => string_out(format_rational(&v), out),
        Err(e) => status_of(&e),
    })
}

/// Unit normal at (x, y), written into `out_normal[0..3]`.
///
/// # Safety
/// `s` must be a valid handle; `x`, `y` NUL-terminated rationals;
/// `out_normal` must point to at least 3 writable doubles.
#[no_mangle]
pub unsafe extern "C" fn hg_surface_normal(
    s: *const HgSurface,
    x: *const c_char,
    y: *const c_char,
    out_normal: *mut f64,
) -> HgStatus {
    if out_normal.is_null() {
        return HgStatus::NullPointer;
    }
    let surface = match surface_ref(s) {
        Ok(r) => r,
        Err(st) => return st,
    };
    let pt = match parse_point(x, y) {
        Ok(p) => p,
        Err(st) => return st,
    };
    guarded(|| match gauss::normal(surface, &pt) {
        Ok(n) => {
            let arr = n.as_array();
            ptr::copy_nonoverlapping(arr.as_ptr(), out_normal, 3);
            HgStatus::Ok
        }
        Err(e) => status_of(&e),
    })
}

/// Exact planarity decision. Writes 1 (planar) or 0 into `out_planar`; when
/// planar, the constant unit normal goes into `out_normal[0..3]` (otherwise
/// the array is zeroed).
///
/// # Safety
/// `s` must be a valid handle; `out_planar` and `out_normal` (3 doubles)
/// must be writable.
#[no_mangle]
pub unsafe extern "C" fn hg_surface_is_planar(
    s: *const HgSurface,
    out_planar: *mut i32,
    out_normal: *mut f64,
) -> HgStatus {
    if out_planar.is_null() || out_normal.is_null() {
        return HgStatus::NullPointer;
    }
    let surface = match surface_ref(s) {
        Ok(r) => r,
        Err(st) => return st,
    };
    guarded(|| match gauss::planarity_classify(surface) {
        Ok(Planarity::Planar { normal, .. }) => {
            *out_planar = 1;
            let arr = normal.as_array();
            ptr::copy_nonoverlapping(arr.as_ptr(), out_normal, 3);
            HgStatus::Ok
        }
        Ok(Planarity::NonPlanar { .. }) => {
            *out_planar = 0;
            ptr::write_bytes(out_normal, 0, 3);
            HgStatus::Ok
        }
        Err(e) => status_of(&e),
    })
}

/// Integrates generator data (`{"p": ..., "q": ...}` or a phi triple) into
/// a surface handle over [-1, 1]².
///
/// # Safety
/// `json` must be a valid NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hg_weierstrass_surface_from_json(
    json: *const c_char,
    out: *mut *mut HgSurface,
) -> HgStatus {
    if out.is_null() {
        return HgStatus::NullPointer;
    }
    *out = ptr::null_mut();
    let text = match utf8_in(json) {
        Ok(t) => t,
        Err(st) => return st,
    };
    guarded(|| {
        let triple = match json::parse_weierstrass(text) {
            Ok(json::WeierstrassInput::Data(d)) => phi_from_pq(&d),
            Ok(json::WeierstrassInput::Phi(t)) => t,
            Err(e) => return status_of(&e),
        };
        match integrate(&triple, harmonic_gauss::surface::Domain::unit_square()) {
            Ok(surface) => {
                *out = Box::into_raw(Box::new(HgSurface { inner: surface }));
                HgStatus::Ok
            }
            Err(e) => status_of(&e),
        }
    })
}

/// Runs a verification suite (`thm1-exact`, `thm1-numeric`, `dilatation`,
/// `remark14`, `thm3`). `params_json` may be null for defaults or a JSON
/// object with any of: count, degree, height, seed, pts, fd_step, tol, nx,
/// ny, normalized. The JSON report goes to `out_report`; the failure count
/// to `out_failures`.
///
/// # Safety
/// `suite` must be a valid NUL-terminated string; `params_json` null or
/// valid; `out_report` and `out_failures` valid pointers.
#[no_mangle]
pub unsafe extern "C" fn hg_verify_suite(
    suite: *const c_char,
    params_json: *const c_char,
    out_report: *mut *mut c_char,
    out_failures: *mut u64,
) -> HgStatus {
    if out_report.is_null() || out_failures.is_null() {
        return HgStatus::NullPointer;
    }
    let name = match utf8_in(suite) {
        Ok(t) => t,
        Err(st) => return st,
    };
    let params_text = if params_json.is_null() {
        None
    } else {
        match utf8_in(params_json) {
            Ok(t) => Some(t),
            Err(st) => return st,
        }
    };
    guarded(|| {
        let mut params = SuiteParams::default();
        if let Some(text) = params_text {
            let value: serde_json::Value = match serde_json::from_str(text) {
                Ok(v) => v,
                Err(_) => return HgStatus::ParseError,
            };
            let Some(obj) = value.as_object() else {
                return HgStatus::ParseError;
            };
            if let Some(v) = obj.get("count").and_then(|v| v.as_u64()) {
                params.count = v as u32;
            }
            if let Some(v) = obj.get("degree").and_then(|v| v.as_u64()) {
                params.degree = v as u32;
            }
            if let Some(v) = obj.get("height").and_then(|v| v.as_u64()) {
                params.height = v;
            }
            if let Some(v) = obj.get("seed").and_then(|v| v.as_u64()) {
                params.seed = v;
            }
            if let Some(v) = obj.get("pts").and_then(|v| v.as_u64()) {
                params.pts = v as u32;
            }
            if let Some(v) = obj.get("fd_step").and_then(|v| v.as_f64()) {
                params.fd_step = v;
            }
            if let Some(v) = obj.get("tol").and_then(|v| v.as_f64()) {
                params.tol = v;
            }
            if let Some(v) = obj.get("nx").and_then(|v| v.as_u64()) {
                params.nx = v as u32;
            }
            if let Some(v) = obj.get("ny").and_then(|v| v.as_u64()) {
                params.ny = v as u32;
            }
            if let Some(v) = obj.get("normalized").and_then(|v| v.as_bool()) {
                params.normalized = v;
            }
        }
        match run_suite(name, &params) {
            Ok(report) => {
                *out_failures = report.failures();
                string_out(report.to_json_pretty(), out_report)
            }
            Err(e) => status_of(&e),
        }
    })
}

/// Frees a string returned by this library; null is a no-op.
///
/// # Safety
/// `s` must be null or a string pointer returned by this library that has
/// not been freed.
#[no_mangle]
pub unsafe extern "C" fn hg_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Static name for a status code.
#[no_mangle]
pub extern "C" fn hg_status_name(status: HgStatus) -> *const c_char {
    let name: &'static [u8] = match status {
        HgStatus::Ok => b"ok\0",
        HgStatus::ParseError => b"parse error\0",
        HgStatus::NotHarmonic => b"not harmonic\0",
        HgStatus::OutOfDomain => b"out of domain\0",
        HgStatus::BranchPoint => b"branch point\0",
        HgStatus::GaussDegenerate => b"gauss degenerate\0",
        HgStatus::NorthPole => b"north pole\0",
        HgStatus::NotNormalized => b"not normalized\0",
        HgStatus::DegenerateSurface => b"degenerate surface\0",
        HgStatus::InvalidDistortion => b"invalid distortion\0",
        HgStatus::NullViolation => b"null identity violation\0",
        HgStatus::UnknownSuite => b"unknown suite\0",
        HgStatus::InvalidInput => b"invalid input\0",
        HgStatus::NullPointer => b"null pointer\0",
        HgStatus::InvalidUtf8 => b"invalid utf-8\0",
        HgStatus::InternalPanic => b"internal panic\0",
    };
    name.as_ptr().cast()
}
