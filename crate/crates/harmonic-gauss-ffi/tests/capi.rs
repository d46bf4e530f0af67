//! Exercises the C ABI through the extern functions themselves.

use std::ffi::{CStr, CString};
use std::ptr;

use libc::c_char;

use harmonic_gauss_ffi::*;

const SADDLE: &str = r#"{
  "a": [{"i": 1, "j": 0, "c": "1"}],
  "b": [{"i": 0, "j": 1, "c": "1"}],
  "c": [{"i": 1, "j": 1, "c": "1"}],
  "domain": {"x": ["-1", "1"], "y": ["-1", "1"]}
}"#;

const PLANAR: &str = r#"{
  "a": [{"i": 1, "j": 0, "c": "1"}],
  "b": [{"i": 0, "j": 1, "c": "1"}],
  "c": []
}"#;

const NON_HARMONIC: &str = r#"{
  "a": [{"i": 1, "j": 0, "c": "1"}],
  "b": [{"i": 0, "j": 1, "c": "1"}],
  "c": [{"i": 2, "j": 0, "c": "1"}, {"i": 0, "j": 2, "c": "1"}]
}"#;

fn make_surface(json: &str) -> *mut HgSurface {
    let c = CString::new(json).unwrap();
    let mut handle: *mut HgSurface = ptr::null_mut();
    let status = unsafe { hg_surface_from_json(c.as_ptr(), &mut handle) };
    assert_eq!(status, HgStatus::Ok);
    assert!(!handle.is_null());
    handle
}

fn take_string(p: *mut c_char) -> String {
    assert!(!p.is_null());
    let s = unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_string();
    unsafe { hg_string_free(p) };
    s
}

#[test]
fn distortion_round_trip() {
    let s = make_surface(SADDLE);
    let x = CString::new("1").unwrap();
    let y = CString::new("0").unwrap();
    let mut out: *mut c_char = ptr::null_mut();
    let status = unsafe { hg_surface_distortion_sq(s, x.as_ptr(), y.as_ptr(), &mut out) };
    assert_eq!(status, HgStatus::Ok);
    assert_eq!(take_string(out), "9/8");

    let mut out: *mut c_char = ptr::null_mut();
    let status = unsafe { hg_surface_gauss_distortion_sq(s, x.as_ptr(), y.as_ptr(), &mut out) };
    assert_eq!(status, HgStatus::Ok);
    assert_eq!(take_string(out), "9/8");

    let mut out: *mut c_char = ptr::null_mut();
    let status = unsafe { hg_surface_curvature_sign(s, x.as_ptr(), y.as_ptr(), &mut out) };
    assert_eq!(status, HgStatus::Ok);
    assert_eq!(take_string(out), "-1/1");

    let mut normal = [0f64; 3];
    let status = unsafe { hg_surface_normal(s, x.as_ptr(), y.as_ptr(), normal.as_mut_ptr()) };
    assert_eq!(status, HgStatus::Ok);
    let r = 1.0 / 2f64.sqrt();
    assert!((normal[0]).abs() < 1e-15);
    assert!((normal[1] + r).abs() < 1e-15);
    assert!((normal[2] - r).abs() < 1e-15);

    unsafe { hg_surface_free(s) };
}

#[test]
fn surface_json_round_trip() {
    let s = make_surface(SADDLE);
    let mut out: *mut c_char = ptr::null_mut();
    assert_eq!(unsafe { hg_surface_to_json(s, &mut out) }, HgStatus::Ok);
    let text = take_string(out);
    let s2 = make_surface(&text);
    let x = CString::new("1/2").unwrap();
    let y = CString::new("1/3").unwrap();
    let mut a: *mut c_char = ptr::null_mut();
    let mut b: *mut c_char = ptr::null_mut();
    unsafe {
        assert_eq!(hg_surface_distortion_sq(s, x.as_ptr(), y.as_ptr(), &mut a), HgStatus::Ok);
        assert_eq!(hg_surface_distortion_sq(s2, x.as_ptr(), y.as_ptr(), &mut b), HgStatus::Ok);
    }
    assert_eq!(take_string(a), take_string(b));
    unsafe {
        hg_surface_free(s);
        hg_surface_free(s2);
    }
}

#[test]
fn planarity_and_error_codes() {
    let planar = make_surface(PLANAR);
    let mut is_planar = -1i32;
    let mut normal = [9f64; 3];
    let status = unsafe { hg_surface_is_planar(planar, &mut is_planar, normal.as_mut_ptr()) };
    assert_eq!(status, HgStatus::Ok);
    assert_eq!(is_planar, 1);
    assert_eq!(normal, [0.0, 0.0, 1.0]);

    // the gauss map of a plane is degenerate everywhere
    let x = CString::new("0").unwrap();
    let y = CString::new("0").unwrap();
    let mut out: *mut c_char = ptr::null_mut();
    let status =
        unsafe { hg_surface_gauss_distortion_sq(planar, x.as_ptr(), y.as_ptr(), &mut out) };
    assert_eq!(status, HgStatus::GaussDegenerate);
    assert!(out.is_null());
    unsafe { hg_surface_free(planar) };

    let saddle = make_surface(SADDLE);
    let mut is_planar = -1i32;
    let mut normal = [9f64; 3];
    assert_eq!(
        unsafe { hg_surface_is_planar(saddle, &mut is_planar, normal.as_mut_ptr()) },
        HgStatus::Ok
    );
    assert_eq!(is_planar, 0);
    assert_eq!(normal, [0.0, 0.0, 0.0]);

    // out-of-domain point
    let far = CString::new("7").unwrap();
    let mut out: *mut c_char = ptr::null_mut();
    assert_eq!(
        unsafe { hg_surface_distortion_sq(saddle, far.as_ptr(), far.as_ptr(), &mut out) },
        HgStatus::OutOfDomain
    );
    unsafe { hg_surface_free(saddle) };
}

#[test]
fn invalid_inputs_are_reported() {
    let c = CString::new(NON_HARMONIC).unwrap();
    let mut handle: *mut HgSurface = ptr::null_mut();
    assert_eq!(
        unsafe { hg_surface_from_json(c.as_ptr(), &mut handle) },
        HgStatus::NotHarmonic
    );
    assert!(handle.is_null());

    let garbage = CString::new("nope").unwrap();
    assert_eq!(
        unsafe { hg_surface_from_json(garbage.as_ptr(), &mut handle) },
        HgStatus::ParseError
    );

    assert_eq!(
        unsafe { hg_surface_from_json(ptr::null(), &mut handle) },
        HgStatus::NullPointer
    );
    assert_eq!(unsafe { hg_surface_from_json(c.as_ptr(), ptr::null_mut()) }, HgStatus::NullPointer);

    let name = unsafe { CStr::from_ptr(hg_status_name(HgStatus::BranchPoint)) };
    assert_eq!(name.to_str().unwrap(), "branch point");
}

#[test]
fn weierstrass_and_verify_through_ffi() {
    let pq = CString::new(
        r#"{"p": [{"re": "1", "im": "0"}], "q": [{"re": "0", "im": "0"}, {"re": "1", "im": "0"}]}"#,
    )
    .unwrap();
    let mut handle: *mut HgSurface = ptr::null_mut();
    assert_eq!(
        unsafe { hg_weierstrass_surface_from_json(pq.as_ptr(), &mut handle) },
        HgStatus::Ok
    );
    let x = CString::new("1/4").unwrap();
    let y = CString::new("-1/3").unwrap();
    let mut out: *mut c_char = ptr::null_mut();
    assert_eq!(
        unsafe { hg_surface_distortion_sq(handle, x.as_ptr(), y.as_ptr(), &mut out) },
        HgStatus::Ok
    );
    assert_eq!(take_string(out), "1/1");
    unsafe { hg_surface_free(handle) };

    // a null-violating phi triple is rejected
    let bad = CString::new(r#"{"phi1": [{"re": "1", "im": "0"}], "phi2": [], "phi3": []}"#).unwrap();
    let mut handle: *mut HgSurface = ptr::null_mut();
    assert_eq!(
        unsafe { hg_weierstrass_surface_from_json(bad.as_ptr(), &mut handle) },
        HgStatus::NullViolation
    );

    // verify dispatch: ok, with parameters, and unknown suite
    let suite = CString::new("thm1-exact").unwrap();
    let params = CString::new(r#"{"count": 3, "degree": 3, "seed": 5, "pts": 2}"#).unwrap();
    let mut report: *mut c_char = ptr::null_mut();
    let mut failures = u64::MAX;
    let status = unsafe {
        hg_verify_suite(suite.as_ptr(), params.as_ptr(), &mut report, &mut failures)
    };
    assert_eq!(status, HgStatus::Ok);
    assert_eq!(failures, 0);
    let text = take_string(report);
    let doc: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(doc["suite"], "thm1-exact");

    let unknown = CString::new("thm42").unwrap();
    let mut report: *mut c_char = ptr::null_mut();
    let mut failures = 0u64;
    assert_eq!(
        unsafe { hg_verify_suite(unknown.as_ptr(), ptr::null(), &mut report, &mut failures) },
        HgStatus::UnknownSuite
    );
}

#[test]
fn generated_header_exposes_the_api() {
    let header = std::fs::read_to_string(
        std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("include/harmonic_gauss.h"),
    )
    .expect("header generated at build time");
    for symbol in [
        "typedef struct HgSurface HgSurface;",
        "hg_surface_from_json",
        "hg_surface_free",
        "hg_surface_distortion_sq",
        "hg_surface_gauss_distortion_sq",
        "hg_surface_is_planar",
        "hg_weierstrass_surface_from_json",
        "hg_verify_suite",
        "hg_string_free",
        "hg_status_name",
        "HARMONIC_GAUSS_H",
    ] {
        assert!(header.contains(symbol), "header missing `{symbol}`");
    }
}
