//! Integral representation of Jack polynomials over the interlacing polytope,
//! and its exact discrete counterpart.
//!
//! For `length(μ) < n` and strictly decreasing real `λ`,
//!
//! ```text
//! P_μ(λ) = 1 / (C(μ,n) V(λ)^{2θ-1}) ∫_{ν≺λ} P_μ(ν) V(ν) Π(λ,ν;θ) dν
//! ```
//!
//! with `C(μ,n) = ∏_{i<n} B(μ_i + (n-i)θ, θ)`.

use std::num::NonZeroUsize;

use gauss_quad::{FiniteAboveNegOneF64, GaussJacobi, GaussLegendre};
use num::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::binomial::ser_rational;
use crate::error::{domain, Error, Result};
use crate::jack::{jack_evaluate, jack_monomial_expansion, jack_principal, JackParams, StripWeights};
use crate::partitions::{interlacings, pochhammer_mu, Partition};
use crate::poly::MultiPoly;
use crate::rational::{from_f64, int, is_positive, to_f64, Rational};
use crate::shifted::ShiftedEvaluator;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum QuadratureRule {
    GaussLegendre,
    GaussJacobi,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct QuadratureSpec {
    pub nodes_per_dim: usize,
    pub rule: QuadratureRule,
    /// Exponent of both endpoint factors of the Jacobi weight; ignored by the
    /// Legendre rule.
    pub jacobi_exponent: f64,
}

impl QuadratureSpec {
    pub fn legendre(nodes_per_dim: usize) -> Self {
        QuadratureSpec { nodes_per_dim, rule: QuadratureRule::GaussLegendre, jacobi_exponent: 0.0 }
    }

    pub fn jacobi(nodes_per_dim: usize, exponent: f64) -> Self {
        QuadratureSpec { nodes_per_dim, rule: QuadratureRule::GaussJacobi, jacobi_exponent: exponent }
    }

    /// Legendre for integer θ, where the integrand is a polynomial, and Jacobi
    /// with exponent `θ - 1` otherwise.
    pub fn for_theta(nodes_per_dim: usize, theta: &Rational) -> Self {
        if theta.is_integer() {
            Self::legendre(nodes_per_dim)
        } else {
            Self::jacobi(nodes_per_dim, to_f64(theta) - 1.0)
        }
    }

    fn exponent(&self) -> f64 {
        match self.rule {
            QuadratureRule::GaussLegendre => 0.0,
            QuadratureRule::GaussJacobi => self.jacobi_exponent,
        }
    }

    /// Nodes and weights on `[-1, 1]`.
    fn reference_rule(&self) -> Result<Vec<(f64, f64)>> {
        let deg = NonZeroUsize::new(self.nodes_per_dim).ok_or_else(|| domain!("nodes_per_dim must be at least 1"))?;
        Ok(match self.rule {
            QuadratureRule::GaussLegendre => GaussLegendre::new(deg).as_node_weight_pairs().to_vec(),
            QuadratureRule::GaussJacobi => {
                let e = FiniteAboveNegOneF64::new(self.jacobi_exponent)
                    .ok_or_else(|| domain!("jacobi_exponent must be finite and > -1, got {}", self.jacobi_exponent))?;
                GaussJacobi::new(deg, e, e).as_node_weight_pairs().to_vec()
            }
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IntegralCheck {
    pub mu: Partition,
    /// The input sorted into decreasing order.
    pub lambda_real: Vec<f64>,
    #[serde(serialize_with = "ser_rational")]
    pub theta: Rational,
    #[serde(flatten)]
    pub spec: QuadratureSpec,
    pub lhs: f64,
    pub rhs: f64,
    pub rel_err: f64,
}

/// `C(μ,n) = ∏_{i≤n-1} B(μ_i + (n-i)θ, θ)` through log-Gamma.
pub fn beta_product_c(mu: &Partition, n: usize, theta: f64) -> Result<f64> {
    if theta.is_nan() || theta <= 0.0 || !theta.is_finite() {
        return Err(domain!("theta must be positive, got {theta}"));
    }
    if mu.length() >= n {
        return Err(domain!("{mu} needs fewer than n = {n} parts"));
    }
    let mut log = 0.0;
    for i in 1..n {
        let a = mu.part(i) as f64 + (n - i) as f64 * theta;
        log += libm::lgamma(a) + libm::lgamma(theta) - libm::lgamma(a + theta);
    }
    Ok(log.exp())
}

fn check_decreasing(lambda: &[f64]) -> Result<()> {
    if lambda.iter().any(|v| !v.is_finite()) {
        return Err(domain!("lambda has non-finite entries"));
    }
    if lambda.windows(2).any(|w| w[0] <= w[1]) {
        return Err(domain!("lambda must be strictly decreasing, got {lambda:?}"));
    }
    Ok(())
}

/// `Π(λ,ν;θ) = ∏_{i≤j} (λ_i-ν_j)^{θ-1} ∏_{i>j} (ν_j-λ_i)^{θ-1}`.
pub fn interlacing_kernel(lambda_real: &[f64], nu: &[f64], theta: f64) -> Result<f64> {
    kernel_with_endpoint_exponent(lambda_real, nu, theta, 0.0)
}

/// The kernel with `e` removed from the exponent of each endpoint factor
/// (`i = j` and `i = j + 1`), which the quadrature weight then supplies.
fn kernel_with_endpoint_exponent(lambda: &[f64], nu: &[f64], theta: f64, e: f64) -> Result<f64> {
    check_decreasing(lambda)?;
    if nu.len() + 1 != lambda.len() {
        return Err(domain!("nu needs {} coordinates, got {}", lambda.len() - 1, nu.len()));
    }
    if nu.iter().enumerate().any(|(j, &v)| !(lambda[j + 1] <= v && v <= lambda[j])) {
        return Err(domain!("nu {nu:?} does not interlace lambda {lambda:?}"));
    }
    let mut acc = 1.0;
    for (j, &v) in nu.iter().enumerate() {
        for (i, &l) in lambda.iter().enumerate() {
            let base = if i <= j { l - v } else { v - l };
            let endpoint = i == j || i == j + 1;
            let power = if endpoint { theta - 1.0 - e } else { theta - 1.0 };
            if power == 0.0 {
                continue;
            }
            if base == 0.0 && power < 0.0 {
                return Err(Error::Range(format!("kernel is infinite at nu = {nu:?}")));
            }
            acc *= base.powf(power);
        }
    }
    Ok(acc)
}

fn vandermonde_f64(x: &[f64]) -> f64 {
    let mut acc = 1.0;
    for i in 0..x.len() {
        for j in i + 1..x.len() {
            acc *= x[i] - x[j];
        }
    }
    acc
}

/// Tensor-product quadrature of the right-hand side, compared with the exact
/// value of `P_μ(λ)`. Input `λ` may be given in any order.
pub fn verify_integral(
    mu: &Partition,
    lambda_real: &[f64],
    theta: &Rational,
    spec: &QuadratureSpec,
) -> Result<IntegralCheck> {
    if !is_positive(theta) {
        return Err(domain!("theta must be positive, got {theta}"));
    }
    let mut lambda = lambda_real.to_vec();
    lambda.sort_by(|a, b| b.total_cmp(a));
    check_decreasing(&lambda)?;
    let n = lambda.len();
    if mu.length() >= n {
        return Err(domain!("{mu} needs fewer than n = {n} parts"));
    }
    let theta_f = to_f64(theta);

    let exact_point: Vec<Rational> = lambda.iter().map(|&v| from_f64(v)).collect::<Result<_>>()?;
    let lhs = to_f64(&jack_evaluate(mu, &exact_point, theta)?);

    let rhs = if n == 1 {
        1.0
    } else {
        let p = jack_monomial_expansion(mu, &JackParams::new(n - 1, theta.clone())?).to_poly()?;
        let integral = tensor_quadrature(&p, &lambda, theta_f, spec)?;
        integral / (beta_product_c(mu, n, theta_f)? * vandermonde_f64(&lambda).powf(2.0 * theta_f - 1.0))
    };
    Ok(IntegralCheck {
        mu: mu.clone(),
        lambda_real: lambda,
        theta: theta.clone(),
        spec: spec.clone(),
        lhs,
        rhs,
        rel_err: (lhs - rhs).abs() / lhs.abs().max(1.0),
    })
}

fn tensor_quadrature(p: &MultiPoly, lambda: &[f64], theta: f64, spec: &QuadratureSpec) -> Result<f64> {
    let e = spec.exponent();
    let reference = spec.reference_rule()?;
    let dims = lambda.len() - 1;
    // Per dimension: mapped nodes and weights on [λ_{j+1}, λ_j], with the
    // Jacobi weight rescaled to (λ_j - ν)^e (ν - λ_{j+1})^e.
    let axes: Vec<Vec<(f64, f64)>> = (0..dims)
        .map(|j| {
            let (a, b) = (lambda[j + 1], lambda[j]);
            let h = 0.5 * (b - a);
            let scale = h * h.powf(2.0 * e);
            reference.iter().map(|&(x, w)| (a + h * (x + 1.0), w * scale)).collect()
        })
        .collect();
    let m = reference.len();
    let mut index = vec![0usize; dims];
    let mut nu = vec![0.0; dims];
    let mut total = 0.0;
    loop {
        let mut weight = 1.0;
        for j in 0..dims {
            let (v, w) = axes[j][index[j]];
            nu[j] = v;
            weight *= w;
        }
        let f = p.evaluate_f64(&nu)? * vandermonde_f64(&nu) * kernel_with_endpoint_exponent(lambda, &nu, theta, e)?;
        total += weight * f;
        // Odometer over the node grid, last axis fastest.
        let mut k = dims;
        loop {
            if k == 0 {
                return Ok(total);
            }
            k -= 1;
            index[k] += 1;
            if index[k] < m {
                break;
            }
            index[k] = 0;
        }
    }
}

/// Both sides of the discrete identity
/// `P*_μ(λ) = ((nθ)_μ/((n-1)θ)_μ) Σ_{ν≺λ} ψ_{λ/ν} (P_ν(1^{n-1})/P_λ(1^n)) P*_μ(ν)`.
pub fn discrete_identity_sides(mu: &Partition, lam: &Partition, params: &JackParams) -> Result<(Rational, Rational)> {
    let n = params.n;
    let theta = &params.theta;
    if mu.length() >= n {
        return Err(domain!("{mu} needs fewer than n = {n} parts"));
    }
    if lam.length() > n {
        return Err(domain!("{lam} has more than n = {n} parts"));
    }
    let lhs = ShiftedEvaluator::new(mu, params).eval(lam)?;
    let principal_lam = jack_principal(lam, params);
    let mut sum = Rational::zero();
    if n == 1 {
        // ν = ∅ is the only interlacing partition in zero variables.
        sum = principal_lam.recip();
    } else {
        let lower = params.with_n(n - 1)?;
        let shifted = ShiftedEvaluator::new(mu, &lower);
        let mut weights = StripWeights::new(theta);
        for nu in interlacings(lam, n)? {
            let value = shifted.eval(&nu)?;
            if value.is_zero() {
                continue;
            }
            sum += weights.get(lam, &nu) * jack_principal(&nu, &lower) * value / &principal_lam;
        }
    }
    let prefactor =
        pochhammer_mu(&(theta * int(n as i64)), mu, theta) / pochhammer_mu(&(theta * int(n as i64 - 1)), mu, theta);
    Ok((lhs, prefactor * sum))
}

pub fn verify_discrete_identity(mu: &Partition, lam: &Partition, params: &JackParams) -> Result<bool> {
    let (lhs, rhs) = discrete_identity_sides(mu, lam, params)?;
    Ok(lhs == rhs)
}

/// Largest `|lhs - rhs|` as a float, for reporting.
pub fn discrete_identity_gap(mu: &Partition, lam: &Partition, params: &JackParams) -> Result<f64> {
    let (lhs, rhs) = discrete_identity_sides(mu, lam, params)?;
    Ok(to_f64(&(lhs - rhs).abs()))
}
