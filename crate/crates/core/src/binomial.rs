//! The binomial formula for Jack polynomials and generalized binomial
//! coefficients.
//!
//! `P_λ(1+x)/P_λ(1) = Σ_{μ⊆λ} P*_μ(λ) Q_μ(x) / (nθ)_μ`, and the coefficient of
//! `P_μ(x)/P_μ(1)` on the right is `P*_μ(λ)/H(μ)`.

use num::Zero;
use serde::Serialize;

use crate::error::{domain, Result};
use crate::jack::{jack_combinatorial, jack_monomial_expansion, jack_principal, q_factor, JackParams};
use crate::partitions::{hook_h, partitions_of_size_at_most, pochhammer_mu, Partition};
use crate::poly::{to_monomial_expansion, Basis, SymExpansion};
use crate::rational::{int, Rational};
use crate::shifted::ShiftedEvaluator;

/// Both sides of the binomial formula for one `λ`, in the monomial basis.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BinomialReport {
    pub lambda: Partition,
    #[serde(serialize_with = "ser_rational")]
    pub theta: Rational,
    pub n: usize,
    pub lhs: SymExpansion,
    pub rhs: SymExpansion,
    pub equal: bool,
    #[serde(serialize_with = "ser_rational")]
    pub max_abs_diff: Rational,
}

pub(crate) fn ser_rational<S: serde::Serializer>(x: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_string())
}

fn check_length(lambda: &Partition, params: &JackParams) -> Result<()> {
    if lambda.length() > params.n {
        return Err(domain!("partition {lambda} has more than n = {} parts", params.n));
    }
    Ok(())
}

/// `P_λ(1+x_1, …, 1+x_n) / P_λ(1, …, 1)` in the monomial basis.
pub fn binomial_lhs(lambda: &Partition, params: &JackParams) -> Result<SymExpansion> {
    check_length(lambda, params)?;
    let principal = jack_principal(lambda, params);
    if principal.is_zero() {
        return Err(domain!("principal specialization of P_{lambda} vanishes"));
    }
    let shifted = jack_combinatorial(lambda, params).shift_all(&int(1));
    to_monomial_expansion(&shifted.scale(&principal.recip()))
}

/// `Σ_{μ⊆λ} P*_μ(λ) Q_μ(x) / (nθ)_μ` in the monomial basis.
pub fn binomial_rhs(lambda: &Partition, params: &JackParams) -> Result<SymExpansion> {
    check_length(lambda, params)?;
    let theta = &params.theta;
    let n_theta = theta * int(params.n as i64);
    let mut out = SymExpansion::new(params.n, Basis::Monomial);
    // P*_μ(λ) vanishes unless μ ⊆ λ.
    for mu in partitions_of_size_at_most(lambda.size(), params.n).filter(|mu| lambda.contains(mu)) {
        let value = ShiftedEvaluator::new(&mu, params).eval(lambda)?;
        if value.is_zero() {
            continue;
        }
        let scale = value * q_factor(&mu, theta) / pochhammer_mu(&n_theta, &mu, theta);
        for (nu, c) in jack_monomial_expansion(&mu, params).iter_graded() {
            out.add(nu.clone(), c * &scale);
        }
    }
    Ok(out)
}

/// Generalized binomial coefficient `P*_μ(λ;θ) / H(μ)`, computed with
/// `n = max(length λ, length μ)`.
pub fn binomial_coefficient(lambda: &Partition, mu: &Partition, theta: &Rational) -> Result<Rational> {
    let n = lambda.length().max(mu.length()).max(1);
    binomial_coefficient_in(lambda, mu, &JackParams::new(n, theta.clone())?)
}

/// As [`binomial_coefficient`] but with an explicit number of variables.
pub fn binomial_coefficient_in(lambda: &Partition, mu: &Partition, params: &JackParams) -> Result<Rational> {
    check_length(lambda, params)?;
    check_length(mu, params)?;
    Ok(ShiftedEvaluator::new(mu, params).eval(lambda)? / hook_h(mu, &params.theta))
}

/// Computes both sides exactly and compares them term by term.
pub fn verify_binomial(lambda: &Partition, params: &JackParams) -> Result<BinomialReport> {
    let lhs = binomial_lhs(lambda, params)?;
    let rhs = binomial_rhs(lambda, params)?;
    let max_abs_diff = lhs.max_abs_diff(&rhs);
    Ok(BinomialReport {
        lambda: lambda.clone(),
        theta: params.theta.clone(),
        n: params.n,
        equal: lhs == rhs,
        lhs,
        rhs,
        max_abs_diff,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition;
    use crate::rational::ratio;

    fn params(n: usize, theta: Rational) -> JackParams {
        JackParams::new(n, theta).unwrap()
    }

    fn expansion(n: usize, terms: &[(Partition, Rational)]) -> SymExpansion {
        SymExpansion::from_coeffs(n, Basis::Monomial, terms.iter().cloned()).unwrap()
    }

    #[test]
    fn lhs_examples() {
        let theta = ratio(3, 4);
        let got = binomial_lhs(&partition![1], &params(2, theta.clone())).unwrap();
        assert_eq!(got, expansion(2, &[(Partition::empty(), int(1)), (partition![1], ratio(1, 2))]));
        let got = binomial_lhs(&Partition::empty(), &params(2, theta.clone())).unwrap();
        assert_eq!(got, expansion(2, &[(Partition::empty(), int(1))]));
        let got = binomial_lhs(&partition![1], &params(1, theta)).unwrap();
        assert_eq!(got, expansion(1, &[(Partition::empty(), int(1)), (partition![1], int(1))]));
    }

    #[test]
    fn rhs_examples() {
        let theta = ratio(5, 2);
        let got = binomial_rhs(&Partition::empty(), &params(3, theta.clone())).unwrap();
        assert_eq!(got, expansion(3, &[(Partition::empty(), int(1))]));
        let got = binomial_rhs(&partition![1], &params(1, theta)).unwrap();
        assert_eq!(got, expansion(1, &[(Partition::empty(), int(1)), (partition![1], int(1))]));
        let p = params(2, int(1));
        assert_eq!(binomial_rhs(&partition![2], &p).unwrap(), binomial_lhs(&partition![2], &p).unwrap());
    }

    #[test]
    fn coefficient_examples() {
        let theta = ratio(1, 2);
        assert_eq!(binomial_coefficient(&partition![5], &partition![2], &theta).unwrap(), int(10));
        assert_eq!(binomial_coefficient(&partition![2], &partition![1], &ratio(7, 3)).unwrap(), int(2));
        assert_eq!(binomial_coefficient(&partition![3], &partition![1, 1], &theta).unwrap(), int(0));
        assert_eq!(binomial_coefficient(&partition![2, 1], &partition![3], &theta).unwrap(), int(0));
    }

    #[test]
    fn verification_examples() {
        assert!(verify_binomial(&partition![2, 1], &params(3, ratio(1, 2))).unwrap().equal);
        let empty = verify_binomial(&Partition::empty(), &params(2, int(1))).unwrap();
        assert!(empty.equal);
        assert!(empty.max_abs_diff.is_zero());
        assert!(verify_binomial(&partition![3], &params(2, int(2))).unwrap().equal);
        assert!(verify_binomial(&partition![1, 1, 1], &params(2, int(2))).is_err());
    }

    #[test]
    fn report_serializes() {
        let report = verify_binomial(&partition![1], &params(1, int(1))).unwrap();
        let v: serde_json::Value = serde_json::to_value(&report).unwrap();
        assert_eq!(v["lambda"], serde_json::json!([1]));
        assert_eq!(v["theta"], "1");
        assert_eq!(v["equal"], true);
        assert_eq!(v["max_abs_diff"], "0");
        assert_eq!(v["lhs"]["basis"], "monomial");
    }
}
