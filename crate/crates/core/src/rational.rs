//! Exact rational scalars and their text forms.

use num::{BigInt, BigRational, One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Parses `p/q`, a plain integer, or a finite decimal such as `-1.25` or `2e-3`.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let s = text.trim();
    let bad = || Error::Parse(format!("not a rational number: {text:?}"));
    if s.is_empty() {
        return Err(bad());
    }
    if let Some((p, q)) = s.split_once('/') {
        let p: BigInt = p.trim().parse().map_err(|_| bad())?;
        let q: BigInt = q.trim().parse().map_err(|_| bad())?;
        if q.is_zero() {
            return Err(Error::Parse(format!("zero denominator in {text:?}")));
        }
        return Ok(Rational::new(p, q));
    }
    if let Ok(n) = s.parse::<BigInt>() {
        return Ok(Rational::from_integer(n));
    }
    parse_decimal(s).ok_or_else(bad)
}

fn parse_decimal(s: &str) -> Option<Rational> {
    let (mantissa, exponent) = match s.find(['e', 'E']) {
        Some(pos) => (&s[..pos], s[pos + 1..].parse::<i32>().ok()?),
        None => (s, 0),
    };
    let (negative, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (whole, frac) = digits.split_once('.').unwrap_or((digits, ""));
    if whole.is_empty() && frac.is_empty() {
        return None;
    }
    if !whole.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) {
        return None;
    }
    let all: BigInt = format!("0{whole}{frac}").parse().ok()?;
    let scale = exponent - frac.len() as i32;
    let ten = BigInt::from(10);
    let mut value = Rational::from_integer(all);
    if scale >= 0 {
        value *= Rational::from_integer(num::pow(ten, scale as usize));
    } else {
        value /= Rational::from_integer(num::pow(ten, (-scale) as usize));
    }
    Some(if negative { -value } else { value })
}

/// Parses a comma-separated list of rationals.
pub fn parse_rational_list(text: &str) -> Result<Vec<Rational>> {
    text.split(',').map(parse_rational).collect()
}

/// Exact conversion of a finite double.
pub fn from_f64(x: f64) -> Result<Rational> {
    Rational::from_float(x).ok_or_else(|| Error::Domain(format!("non-finite value {x}")))
}

/// Nearest double (to within rounding of the final division).
pub fn to_f64(x: &Rational) -> f64 {
    if let Some(v) = x.to_f64() {
        if v.is_finite() {
            return v;
        }
    }
    // Very large numerators and denominators overflow the direct conversion;
    // shift both down so the quotient survives.
    let n_bits = x.numer().bits() as i64;
    let d_bits = x.denom().bits() as i64;
    let shift_n = (n_bits - 900).max(0) as usize;
    let shift_d = (d_bits - 900).max(0) as usize;
    let n = (x.numer() >> shift_n).to_f64().unwrap_or(f64::NAN);
    let d = (x.denom() >> shift_d).to_f64().unwrap_or(f64::NAN);
    (n / d) * 2f64.powi((shift_n as i64 - shift_d as i64) as i32)
}

/// `Γ(t + m) / Γ(t)` for integer `m`, i.e. the rising factorial when `m ≥ 0`
/// and the reciprocal falling product when `m < 0`.
pub fn gamma_shift(t: &Rational, m: i64) -> Rational {
    let mut acc = Rational::one();
    if m >= 0 {
        for k in 0..m {
            acc *= t + int(k);
        }
        acc
    } else {
        for k in 1..=(-m) {
            acc *= t - int(k);
        }
        acc.recip()
    }
}

pub fn factorial(n: usize) -> Rational {
    (1..=n as i64).fold(Rational::one(), |acc, k| acc * int(k))
}

/// `n (n-1) ... (n-k+1)`.
pub fn falling(n: usize, k: usize) -> Rational {
    if k > n {
        return Rational::zero();
    }
    (0..k as i64).fold(Rational::one(), |acc, j| acc * int(n as i64 - j))
}

pub fn is_positive(x: &Rational) -> bool {
    x.is_positive()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_all_forms() {
        assert_eq!(parse_rational("1/2").unwrap(), ratio(1, 2));
        assert_eq!(parse_rational("-6/4").unwrap(), ratio(-3, 2));
        assert_eq!(parse_rational("7").unwrap(), int(7));
        assert_eq!(parse_rational("0.2").unwrap(), ratio(1, 5));
        assert_eq!(parse_rational("-1.25").unwrap(), ratio(-5, 4));
        assert_eq!(parse_rational(".5").unwrap(), ratio(1, 2));
        assert_eq!(parse_rational("2e-3").unwrap(), ratio(1, 500));
        assert_eq!(parse_rational("1.5E2").unwrap(), int(150));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("abc").is_err());
        assert!(parse_rational("").is_err());
        assert!(parse_rational(".").is_err());
    }

    #[test]
    fn gamma_shift_matches_products() {
        let t = ratio(1, 2);
        assert_eq!(gamma_shift(&t, 0), int(1));
        assert_eq!(gamma_shift(&t, 2), ratio(1, 2) * ratio(3, 2));
        // Γ(t-2)/Γ(t) = 1/((t-1)(t-2))
        assert_eq!(gamma_shift(&t, -2), (ratio(-1, 2) * ratio(-3, 2)).recip());
    }

    #[test]
    fn huge_ratio_converts() {
        let big = Rational::new(num::pow(BigInt::from(3), 2000) + 1, num::pow(BigInt::from(3), 2000));
        assert!((to_f64(&big) - 1.0).abs() < 1e-15);
        assert_eq!(falling(5, 2), int(20));
        assert_eq!(falling(2, 3), int(0));
        assert_eq!(factorial(5), int(120));
    }
}
