//! Multivariate Bessel functions `F(l, x; θ) = Σ_μ P_μ(l) Q_μ(x) / (nθ)_μ`.
//!
//! Real inputs are converted to rationals exactly and every partial sum is
//! accumulated in exact arithmetic; rounding happens once, on output.

use num::{Signed, Zero};
use serde::Serialize;

use crate::binomial::ser_rational;
use crate::error::{domain, Result};
use crate::jack::{jack_principal, q_factor, JackEvaluator, JackParams};
use crate::partitions::{partitions_of, pochhammer_mu, Partition};
use crate::rational::{from_f64, int, is_positive, to_f64, Rational};

pub const DEFAULT_DEGREE_CUT: usize = 16;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BesselEval {
    pub l: Vec<f64>,
    pub x: Vec<f64>,
    #[serde(serialize_with = "ser_rational")]
    pub theta: Rational,
    pub degree_cut: usize,
    pub value: f64,
    /// `|value(D) - value(D-1)|`, the size of the last included degree.
    pub tail_estimate: f64,
}

fn to_rationals(v: &[f64]) -> Result<Vec<Rational>> {
    v.iter().map(|&t| from_f64(t)).collect()
}

/// Exact partial sums `S_0, …, S_D` of the series, one per total degree.
fn degree_sums(l: &[Rational], x: &[Rational], theta: &Rational, degree_cut: usize) -> Result<Vec<Rational>> {
    let n = l.len();
    if x.len() != n {
        return Err(domain!("l has {} coordinates but x has {}", n, x.len()));
    }
    if n == 0 {
        return Err(domain!("need at least one coordinate"));
    }
    if !is_positive(theta) {
        return Err(domain!("theta must be positive, got {theta}"));
    }
    let n_theta = theta * int(n as i64);
    let mut at_l = JackEvaluator::new(l.to_vec(), theta)?;
    let mut at_x = JackEvaluator::new(x.to_vec(), theta)?;
    let mut sums = Vec::with_capacity(degree_cut + 1);
    let mut acc = Rational::zero();
    for d in 0..=degree_cut {
        for mu in partitions_of(d, n) {
            let pl = at_l.eval(&mu);
            if pl.is_zero() {
                continue;
            }
            let px = at_x.eval(&mu);
            if px.is_zero() {
                continue;
            }
            acc += pl * px * q_factor(&mu, theta) / pochhammer_mu(&n_theta, &mu, theta);
        }
        sums.push(acc.clone());
    }
    Ok(sums)
}

/// Partial sum over `|μ| ≤ degree_cut`, `length(μ) ≤ n`.
pub fn bessel_series(l: &[f64], x: &[f64], theta: &Rational, degree_cut: usize) -> Result<BesselEval> {
    let sums = degree_sums(&to_rationals(l)?, &to_rationals(x)?, theta, degree_cut)?;
    let value = sums.last().expect("at least degree 0");
    let tail = match degree_cut {
        0 => Rational::zero(),
        d => (value - &sums[d - 1]).abs(),
    };
    Ok(BesselEval {
        l: l.to_vec(),
        x: x.to_vec(),
        theta: theta.clone(),
        degree_cut,
        value: to_f64(value),
        tail_estimate: to_f64(&tail),
    })
}

/// `|F(l, x) - F(x, l)|` at the same cut.
pub fn bessel_symmetry_gap(l: &[f64], x: &[f64], theta: &Rational, degree_cut: usize) -> Result<f64> {
    let (l, x) = (to_rationals(l)?, to_rationals(x)?);
    let forward = degree_sums(&l, &x, theta, degree_cut)?;
    let backward = degree_sums(&x, &l, theta, degree_cut)?;
    Ok(to_f64(&(&forward[degree_cut] - &backward[degree_cut]).abs()))
}

/// The normalized Jack polynomial `P_λ(1 + x/κ) / P_λ(1,…,1)` at `λ = [κ l]`,
/// computed exactly.
pub fn bessel_finite_kappa(l: &[f64], x: &[f64], theta: &Rational, kappa: u32) -> Result<Rational> {
    let n = l.len();
    if x.len() != n || n == 0 {
        return Err(domain!("l has {} coordinates but x has {}", n, x.len()));
    }
    if kappa == 0 {
        return Err(domain!("kappa must be at least 1"));
    }
    if l.iter().any(|v| !v.is_finite() || *v < 0.0) || l.windows(2).any(|w| w[0] < w[1]) {
        return Err(domain!("l must be nonnegative and weakly decreasing, got {l:?}"));
    }
    let lambda = Partition::new(l.iter().map(|v| (v * kappa as f64).floor() as usize).collect())?;
    let k = int(kappa as i64);
    let point: Vec<Rational> = to_rationals(x)?.into_iter().map(|xi| int(1) + xi / &k).collect();
    let value = JackEvaluator::new(point, theta)?.eval(&lambda);
    Ok(value / jack_principal(&lambda, &JackParams::new(n, theta.clone())?))
}

/// Distance between the finite-κ quotient and the truncated series.
pub fn bessel_limit_probe(l: &[f64], x: &[f64], theta: &Rational, kappa: u32, degree_cut: usize) -> Result<f64> {
    let quotient = bessel_finite_kappa(l, x, theta, kappa)?;
    let series = bessel_series(l, x, theta, degree_cut)?;
    Ok((to_f64(&quotient) - series.value).abs())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    #[test]
    fn series_examples() {
        let theta = ratio(1, 2);
        assert_eq!(bessel_series(&[0.7, 0.2], &[0.0, 0.0], &theta, 16).unwrap().value, 1.0);
        assert_eq!(bessel_series(&[0.0, 0.0, 0.0], &[0.3, 0.2, 0.1], &theta, 16).unwrap().value, 1.0);
        for (l, x) in [(1.0, 2.0), (-1.5, 1.2), (0.5, 0.5)] {
            let got = bessel_series(&[l], &[x], &ratio(7, 3), 30).unwrap();
            assert!((got.value - (l * x).exp()).abs() < 1e-12, "{l} {x}: {}", got.value);
        }
        assert!(bessel_series(&[1.0], &[1.0, 2.0], &theta, 4).is_err());
    }

    #[test]
    fn tail_is_last_degree() {
        let theta = int(1);
        let d5 = bessel_series(&[1.0, 0.5], &[0.3, 0.1], &theta, 5).unwrap();
        let d4 = bessel_series(&[1.0, 0.5], &[0.3, 0.1], &theta, 4).unwrap();
        assert!((d5.tail_estimate - (d5.value - d4.value).abs()).abs() < 1e-15);
        assert_eq!(bessel_series(&[1.0], &[1.0], &theta, 0).unwrap().tail_estimate, 0.0);
    }

    #[test]
    fn symmetry_examples() {
        let theta = ratio(1, 2);
        assert_eq!(bessel_symmetry_gap(&[0.4, 0.1], &[0.4, 0.1], &theta, 8).unwrap(), 0.0);
        assert_eq!(bessel_symmetry_gap(&[0.4], &[1.3], &theta, 8).unwrap(), 0.0);
        for cut in [4, 8, 12] {
            assert!(bessel_symmetry_gap(&[1.0, 0.5], &[0.3, 0.1], &theta, cut).unwrap() < 1e-12);
        }
    }

    #[test]
    fn limit_examples() {
        let q = bessel_finite_kappa(&[1.0], &[1.0], &int(1), 10).unwrap();
        assert_eq!(q, ratio(11, 10).pow(10));
        let near = bessel_limit_probe(&[1.0], &[1.0], &int(1), 100, 30).unwrap();
        let far = bessel_limit_probe(&[1.0], &[1.0], &int(1), 10, 30).unwrap();
        assert!(near < far);
        assert_eq!(bessel_limit_probe(&[0.0, 0.0], &[0.3, 0.2], &ratio(1, 2), 7, 8).unwrap(), 0.0);
        let theta = ratio(1, 2);
        let d10 = bessel_limit_probe(&[2.0, 1.0], &[0.2, 0.1], &theta, 10, 16).unwrap();
        let d40 = bessel_limit_probe(&[2.0, 1.0], &[0.2, 0.1], &theta, 40, 16).unwrap();
        assert!(d40 < d10, "{d40} vs {d10}");
        assert!(bessel_finite_kappa(&[1.0, 2.0], &[0.1, 0.1], &theta, 3).is_err());
    }
}
