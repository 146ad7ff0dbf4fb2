//! C ABI over `jackpoly`.
//!
//! Every fallible function returns a [`JpStatus`]; on failure a message is
//! kept per thread and read with [`jp_last_error`]. Exact rationals cross the
//! boundary as NUL-terminated `"p/q"` strings. Strings returned by this
//! library are owned by the caller and must be released with
//! [`jp_string_free`]; polynomial handles with [`jp_poly_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use jackpoly::bessel::bessel_series;
use jackpoly::binomial::binomial_coefficient;
use jackpoly::integral::{verify_integral, QuadratureSpec};
use jackpoly::jack::{jack_combinatorial, JackParams};
use jackpoly::rational::{parse_rational, Rational};
use jackpoly::shifted::{shifted_eval, shifted_jack};
use jackpoly::thetadim::thetadim_skew;
use jackpoly::{Error, MultiPoly, Partition};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum JpStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Domain = 3,
    Consistency = 4,
    Range = 5,
    Parse = 6,
    Panic = 7,
}

/// Opaque polynomial with exact rational coefficients.
pub struct JpPolynomial {
    poly: MultiPoly,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let msg = CString::new(msg.replace('\0', " ")).expect("interior NULs replaced");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

struct Failure(JpStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::Domain(_) => JpStatus::Domain,
            Error::Consistency(_) => JpStatus::Consistency,
            Error::Range(_) => JpStatus::Range,
            Error::Parse(_) => JpStatus::Parse,
        };
        Failure(status, e.to_string())
    }
}

/// Runs `f`, converting errors and panics into a status plus a stored message.
fn guard(f: impl FnOnce() -> Result<(), Failure>) -> JpStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => JpStatus::Ok,
        Ok(Err(Failure(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic".into());
            JpStatus::Panic
        }
    }
}

fn non_null<T>(p: *const T, what: &str) -> Result<(), Failure> {
    if p.is_null() {
        Err(Failure(JpStatus::NullPointer, format!("{what} is null")))
    } else {
        Ok(())
    }
}

unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    non_null(p, what)?;
    CStr::from_ptr(p).to_str().map_err(|_| Failure(JpStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn read_slice<'a, T>(p: *const T, len: usize, what: &str) -> Result<&'a [T], Failure> {
    if len == 0 {
        return Ok(&[]);
    }
    non_null(p, what)?;
    Ok(std::slice::from_raw_parts(p, len))
}

unsafe fn read_partition(p: *const usize, len: usize, what: &str) -> Result<Partition, Failure> {
    Ok(Partition::new(read_slice(p, len, what)?.to_vec())?)
}

unsafe fn read_theta(p: *const c_char) -> Result<Rational, Failure> {
    Ok(parse_rational(read_str(p, "theta")?)?)
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    non_null(out, "output pointer")?;
    *out = CString::new(s).expect("formatted values contain no NUL").into_raw();
    Ok(())
}

unsafe fn write_value<T>(out: *mut T, v: T) -> Result<(), Failure> {
    non_null(out, "output pointer")?;
    *out = v;
    Ok(())
}

/// Message for the most recent failure on this thread, or null. Valid until
/// the next failing call on the same thread; do not free.
#[no_mangle]
pub extern "C" fn jp_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Library version as a static string; do not free.
#[no_mangle]
pub extern "C" fn jp_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed already.
#[no_mangle]
pub unsafe extern "C" fn jp_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Builds the Jack polynomial `P_μ(x_1..x_n; θ)`.
///
/// # Safety
/// `mu` points to `mu_len` parts, `theta` is a C string, `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn jp_jack_new(
    mu: *const usize,
    mu_len: usize,
    n: usize,
    theta: *const c_char,
    out: *mut *mut JpPolynomial,
) -> JpStatus {
    guard(|| {
        let params = JackParams::new(n, read_theta(theta)?)?;
        let poly = jack_combinatorial(&read_partition(mu, mu_len, "mu")?, &params);
        write_value(out, Box::into_raw(Box::new(JpPolynomial { poly })))
    })
}

/// Builds the shifted Jack polynomial `P*_μ(x_1..x_n; θ)`.
///
/// # Safety
/// As for [`jp_jack_new`].
#[no_mangle]
pub unsafe extern "C" fn jp_shifted_jack_new(
    mu: *const usize,
    mu_len: usize,
    n: usize,
    theta: *const c_char,
    out: *mut *mut JpPolynomial,
) -> JpStatus {
    guard(|| {
        let params = JackParams::new(n, read_theta(theta)?)?;
        let poly = shifted_jack(&read_partition(mu, mu_len, "mu")?, &params).poly;
        write_value(out, Box::into_raw(Box::new(JpPolynomial { poly })))
    })
}

/// # Safety
/// `p` must come from a constructor here and not have been freed. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn jp_poly_free(p: *mut JpPolynomial) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Number of variables, or 0 for a null handle.
///
/// # Safety
/// `p` is null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn jp_poly_num_vars(p: *const JpPolynomial) -> usize {
    p.as_ref().map_or(0, |p| p.poly.n())
}

/// Number of nonzero terms, or 0 for a null handle.
///
/// # Safety
/// `p` is null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn jp_poly_num_terms(p: *const JpPolynomial) -> usize {
    p.as_ref().map_or(0, |p| p.poly.num_terms())
}

/// Human-readable form such as `x1^2 + 1/2*x1*x2`.
///
/// # Safety
/// `p` is a live handle and `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn jp_poly_to_string(p: *const JpPolynomial, out: *mut *mut c_char) -> JpStatus {
    guard(|| {
        non_null(p, "polynomial")?;
        write_string(out, (*p).poly.to_string())
    })
}

/// JSON form `{"n": .., "terms": [{"exponents": [..], "coeff": "p/q"}, ..]}`.
///
/// # Safety
/// `p` is a live handle and `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn jp_poly_to_json(p: *const JpPolynomial, out: *mut *mut c_char) -> JpStatus {
    guard(|| {
        non_null(p, "polynomial")?;
        let json = serde_json::to_string(&(*p).poly).expect("polynomials serialize");
        write_string(out, json)
    })
}

/// Exact value at a point given as `len` rational strings.
///
/// # Safety
/// `point` holds `len` C strings; `p` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn jp_poly_evaluate(
    p: *const JpPolynomial,
    point: *const *const c_char,
    len: usize,
    out: *mut *mut c_char,
) -> JpStatus {
    guard(|| {
        non_null(p, "polynomial")?;
        let coords = read_slice(point, len, "point")?
            .iter()
            .map(|&s| Ok(parse_rational(read_str(s, "coordinate")?)?))
            .collect::<Result<Vec<_>, Failure>>()?;
        write_string(out, (*p).poly.evaluate(&coords)?.to_string())
    })
}

/// Floating-point value at a point of `len` doubles.
///
/// # Safety
/// `point` holds `len` doubles; `p` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn jp_poly_evaluate_f64(
    p: *const JpPolynomial,
    point: *const f64,
    len: usize,
    out: *mut f64,
) -> JpStatus {
    guard(|| {
        non_null(p, "polynomial")?;
        let v = (*p).poly.evaluate_f64(read_slice(point, len, "point")?)?;
        write_value(out, v)
    })
}

/// `P*_μ(λ; θ)` in `max(length μ, length λ)` variables, as a rational string.
///
/// # Safety
/// Array arguments hold the stated number of parts; `theta` is a C string;
/// `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn jp_shifted_eval(
    mu: *const usize,
    mu_len: usize,
    lambda: *const usize,
    lambda_len: usize,
    theta: *const c_char,
    out: *mut *mut c_char,
) -> JpStatus {
    guard(|| {
        let mu = read_partition(mu, mu_len, "mu")?;
        let lambda = read_partition(lambda, lambda_len, "lambda")?;
        let n = mu.length().max(lambda.length()).max(1);
        let v = shifted_eval(&mu, &lambda, &JackParams::new(n, read_theta(theta)?)?)?;
        write_string(out, v.to_string())
    })
}

/// Generalized binomial coefficient `P*_μ(λ)/H(μ)` as a rational string.
///
/// # Safety
/// As for [`jp_shifted_eval`].
#[no_mangle]
pub unsafe extern "C" fn jp_binomial_coefficient(
    lambda: *const usize,
    lambda_len: usize,
    mu: *const usize,
    mu_len: usize,
    theta: *const c_char,
    out: *mut *mut c_char,
) -> JpStatus {
    guard(|| {
        let lambda = read_partition(lambda, lambda_len, "lambda")?;
        let mu = read_partition(mu, mu_len, "mu")?;
        write_string(out, binomial_coefficient(&lambda, &mu, &read_theta(theta)?)?.to_string())
    })
}

/// θ-dimension of `λ/μ` as a rational string; pass `mu_len = 0` for a
/// straight shape.
///
/// # Safety
/// As for [`jp_shifted_eval`].
#[no_mangle]
pub unsafe extern "C" fn jp_thetadim(
    lambda: *const usize,
    lambda_len: usize,
    mu: *const usize,
    mu_len: usize,
    theta: *const c_char,
    out: *mut *mut c_char,
) -> JpStatus {
    guard(|| {
        let lambda = read_partition(lambda, lambda_len, "lambda")?;
        let mu = read_partition(mu, mu_len, "mu")?;
        let params = JackParams::new(lambda.length().max(1), read_theta(theta)?)?;
        write_string(out, thetadim_skew(&lambda, &mu, &params)?.to_string())
    })
}

/// Truncated Bessel series at `l`, `x` of length `n`.
///
/// # Safety
/// `l` and `x` hold `n` doubles; `theta` is a C string; outputs are writable.
#[no_mangle]
pub unsafe extern "C" fn jp_bessel_series(
    l: *const f64,
    x: *const f64,
    n: usize,
    theta: *const c_char,
    degree_cut: usize,
    value: *mut f64,
    tail_estimate: *mut f64,
) -> JpStatus {
    guard(|| {
        let eval = bessel_series(read_slice(l, n, "l")?, read_slice(x, n, "x")?, &read_theta(theta)?, degree_cut)?;
        write_value(value, eval.value)?;
        write_value(tail_estimate, eval.tail_estimate)
    })
}

/// Relative error of the quadrature of the integral representation at real
/// `λ` of length `n`, with the default rule for `θ`.
///
/// # Safety
/// `mu` holds `mu_len` parts, `lambda` holds `n` doubles; `rel_err` is writable.
#[no_mangle]
pub unsafe extern "C" fn jp_integral_rel_err(
    mu: *const usize,
    mu_len: usize,
    lambda: *const f64,
    n: usize,
    theta: *const c_char,
    nodes_per_dim: usize,
    rel_err: *mut f64,
) -> JpStatus {
    guard(|| {
        let theta = read_theta(theta)?;
        let spec = QuadratureSpec::for_theta(nodes_per_dim, &theta);
        let check =
            verify_integral(&read_partition(mu, mu_len, "mu")?, read_slice(lambda, n, "lambda")?, &theta, &spec)?;
        write_value(rel_err, check.rel_err)
    })
}
