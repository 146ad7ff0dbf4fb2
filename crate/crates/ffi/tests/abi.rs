use std::ffi::{c_char, CStr, CString};
use std::ptr;

use jackpoly_ffi::*;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

unsafe fn take(s: *mut c_char) -> String {
    let out = CStr::from_ptr(s).to_str().unwrap().to_owned();
    jp_string_free(s);
    out
}

unsafe fn last_error() -> String {
    CStr::from_ptr(jp_last_error()).to_str().unwrap().to_owned()
}

#[test]
fn jack_handle_lifecycle() {
    unsafe {
        let mu = [2usize, 1];
        let mut p = ptr::null_mut();
        assert_eq!(jp_jack_new(mu.as_ptr(), 2, 3, c("1/2").as_ptr(), &mut p), JpStatus::Ok);
        assert_eq!(jp_poly_num_vars(p), 3);
        assert_eq!(jp_poly_num_terms(p), 7);

        let mut s = ptr::null_mut();
        assert_eq!(jp_poly_to_string(p, &mut s), JpStatus::Ok);
        assert!(take(s).contains("3/2*x1*x2*x3"));

        assert_eq!(jp_poly_to_json(p, &mut s), JpStatus::Ok);
        let v: serde_json::Value = serde_json::from_str(&take(s)).unwrap();
        assert_eq!(v["n"], 3);

        let coords = [c("1"), c("1"), c("1")];
        let point: Vec<*const c_char> = coords.iter().map(|s| s.as_ptr()).collect();
        assert_eq!(jp_poly_evaluate(p, point.as_ptr(), 3, &mut s), JpStatus::Ok);
        // 6 monomials x_i^2 x_j plus 3/2 x1 x2 x3.
        assert_eq!(take(s), "15/2");

        let mut f = 0.0;
        assert_eq!(jp_poly_evaluate_f64(p, [1.0, 1.0, 1.0].as_ptr(), 3, &mut f), JpStatus::Ok);
        assert_eq!(f, 7.5);
        assert_eq!(jp_poly_evaluate_f64(p, [1.0].as_ptr(), 1, &mut f), JpStatus::Domain);
        jp_poly_free(p);
        jp_poly_free(ptr::null_mut());
    }
}

#[test]
fn shifted_handle_and_values() {
    unsafe {
        let mu = [1usize, 1];
        let lambda = [2usize, 1];
        let mut p = ptr::null_mut();
        assert_eq!(jp_shifted_jack_new(mu.as_ptr(), 2, 2, c("2/3").as_ptr(), &mut p), JpStatus::Ok);
        let mut s = ptr::null_mut();
        assert_eq!(jp_poly_to_string(p, &mut s), JpStatus::Ok);
        assert_eq!(take(s), "x1*x2 + 2/3*x2");
        jp_poly_free(p);

        assert_eq!(jp_shifted_eval(mu.as_ptr(), 2, lambda.as_ptr(), 2, c("2/3").as_ptr(), &mut s), JpStatus::Ok);
        assert_eq!(take(s), "8/3");
        assert_eq!(jp_thetadim(lambda.as_ptr(), 2, ptr::null(), 0, c("1").as_ptr(), &mut s), JpStatus::Ok);
        assert_eq!(take(s), "2");
        let five = [5usize];
        let two = [2usize];
        assert_eq!(jp_binomial_coefficient(five.as_ptr(), 1, two.as_ptr(), 1, c("1/2").as_ptr(), &mut s), JpStatus::Ok);
        assert_eq!(take(s), "10");
    }
}

#[test]
fn numeric_entry_points() {
    unsafe {
        let (mut value, mut tail) = (0.0, 0.0);
        let st = jp_bessel_series([1.0].as_ptr(), [1.0].as_ptr(), 1, c("1").as_ptr(), 30, &mut value, &mut tail);
        assert_eq!(st, JpStatus::Ok);
        assert!((value - std::f64::consts::E).abs() < 1e-12);
        assert!(tail < 1e-30);

        let mut err = 1.0;
        let mu = [1usize];
        let st = jp_integral_rel_err(mu.as_ptr(), 1, [3.0, 2.0, 1.0].as_ptr(), 3, c("2").as_ptr(), 12, &mut err);
        assert_eq!(st, JpStatus::Ok);
        assert!(err < 1e-10);
    }
}

#[test]
fn errors_set_status_and_message() {
    unsafe {
        let mu = [1usize, 2];
        let mut p = ptr::null_mut();
        assert_eq!(jp_jack_new(mu.as_ptr(), 2, 2, c("1").as_ptr(), &mut p), JpStatus::Domain);
        assert!(p.is_null());
        assert!(last_error().contains("1, 2") || last_error().contains("[1, 2]"), "{}", last_error());

        assert_eq!(jp_jack_new(mu.as_ptr(), 1, 2, c("x").as_ptr(), &mut p), JpStatus::Parse);
        assert_eq!(jp_jack_new(mu.as_ptr(), 1, 2, ptr::null(), &mut p), JpStatus::NullPointer);
        assert_eq!(last_error(), "theta is null");
        assert_eq!(jp_jack_new(mu.as_ptr(), 1, 0, c("1").as_ptr(), &mut p), JpStatus::Domain);
        assert_eq!(jp_jack_new(mu.as_ptr(), 1, 2, c("1").as_ptr(), ptr::null_mut()), JpStatus::NullPointer);
        let bad = [0xffu8, 0];
        assert_eq!(jp_jack_new(mu.as_ptr(), 1, 2, bad.as_ptr().cast(), &mut p), JpStatus::InvalidUtf8);

        let mut s = ptr::null_mut();
        assert_eq!(jp_poly_to_string(ptr::null(), &mut s), JpStatus::NullPointer);
        assert_eq!(jp_poly_num_vars(ptr::null()), 0);
        jp_string_free(ptr::null_mut());
    }
}

#[test]
fn version_is_static() {
    let v = unsafe { CStr::from_ptr(jp_version()) };
    assert_eq!(v.to_str().unwrap(), env!("CARGO_PKG_VERSION"));
}

#[test]
fn header_is_current() {
    let header = include_str!("../include/jackpoly.h");
    for name in ["jp_jack_new", "jp_poly_free", "jp_string_free", "jp_last_error", "JP_STATUS_DOMAIN", "JpPolynomial"] {
        assert!(header.contains(name), "{name} missing from header");
    }
}

/// Compiles and runs a C program against the header and the static library.
#[test]
fn c_program_links_and_runs() {
    let Some(cc) = ["cc", "gcc", "clang"]
        .into_iter()
        .find(|c| std::process::Command::new(c).arg("--version").output().is_ok_and(|o| o.status.success()))
    else {
        eprintln!("no C compiler found, skipping");
        return;
    };
    let exe = std::env::current_exe().unwrap();
    let profile_dir = exe.parent().and_then(|d| d.parent()).unwrap();
    let lib = profile_dir.join("libjackpoly_ffi.a");
    assert!(lib.exists(), "static library missing at {}", lib.display());
    let manifest = std::path::Path::new(env!("CARGO_MANIFEST_DIR"));
    let out = std::env::temp_dir().join(format!("jackpoly-smoke-{}", std::process::id()));
    let status = std::process::Command::new(cc)
        .arg(manifest.join("tests/c/smoke.c"))
        .arg("-I")
        .arg(manifest.join("include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&out)
        .status()
        .unwrap();
    assert!(status.success(), "C compilation failed");
    let run = std::process::Command::new(&out).output().unwrap();
    let _ = std::fs::remove_file(&out);
    assert!(run.status.success(), "{}", String::from_utf8_lossy(&run.stderr));
    assert_eq!(String::from_utf8_lossy(&run.stdout).trim(), "ok");
}
