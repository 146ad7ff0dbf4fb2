//! θ-dimensions of straight and skew diagrams.
//!
//! Three routes are provided and cross-checked in the tests:
//! expanding `(Σ x_i)^k P_μ` in the Jack basis, the closed ratio through
//! `P*_μ(λ)`, and iterating the one-box rule for shifted Jack polynomials.

use std::collections::BTreeMap;

use num::{One, Zero};
use serde::Serialize;

use crate::binomial::ser_rational;
use crate::error::{domain, Error, Result};
use crate::jack::{expand_in_jack_basis, jack_monomial_expansion, JackParams};
use crate::partitions::{hook_h, Partition};
use crate::poly::{to_monomial_expansion, MultiPoly};
use crate::rational::{factorial, falling, int, Rational};
use crate::shifted::{shifted_jack, ShiftedEvaluator};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ThetaDim {
    pub lambda: Partition,
    pub mu: Partition,
    #[serde(serialize_with = "ser_rational")]
    pub theta: Rational,
    #[serde(serialize_with = "ser_rational")]
    pub value: Rational,
}

/// Coefficient of `P_λ` in `(Σ x_i)^k P_μ`, `k = |λ| - |μ|`.
pub fn thetadim_by_expansion(lambda: &Partition, mu: &Partition, params: &JackParams) -> Result<Rational> {
    if lambda.size() < mu.size() {
        return Err(domain!("|{lambda}| < |{mu}|"));
    }
    if params.n < lambda.length() {
        return Err(domain!("n = {} is smaller than the length of {lambda}", params.n));
    }
    let mut f = jack_monomial_expansion(mu, params);
    for _ in 0..lambda.size() - mu.size() {
        f = f.mul_power_sum_one()?;
    }
    Ok(expand_in_jack_basis(&f, &params.theta)?.coeff(lambda))
}

/// `θ-dim λ = |λ|! / H(λ)`.
pub fn thetadim_closed(lambda: &Partition, theta: &Rational) -> Rational {
    factorial(lambda.size()) / hook_h(lambda, theta)
}

/// `θ-dim λ/μ = θ-dim λ · P*_μ(λ) / (|λ| (|λ|-1) ⋯ (|λ|-|μ|+1))`; zero unless `μ ⊆ λ`.
pub fn thetadim_skew(lambda: &Partition, mu: &Partition, params: &JackParams) -> Result<Rational> {
    if !lambda.contains(mu) {
        return Ok(Rational::zero());
    }
    let n = params.n.max(lambda.length()).max(1);
    let shifted = ShiftedEvaluator::new(mu, &params.with_n(n)?).eval(lambda)?;
    Ok(thetadim_closed(lambda, &params.theta) * shifted / falling(lambda.size(), mu.size()))
}

/// Coefficients of `(Σ x_i - |μ|) P*_μ` in the basis of shifted Jack
/// polynomials. By the one-box rule they live on `|λ| = |μ| + 1` and equal
/// `θ-dim λ/μ`.
pub fn pieri_shifted(mu: &Partition, params: &JackParams) -> Result<BTreeMap<Partition, Rational>> {
    let n = params.n;
    let p = shifted_jack(mu, params).poly;
    let linear =
        (0..n).try_fold(MultiPoly::constant(n, -int(mu.size() as i64)), |acc, i| acc.add(&MultiPoly::var(n, i)))?;
    let coeffs = expand_in_shifted_basis(&linear.mul(&p)?, params)?;
    if let Some((nu, _)) = coeffs.iter().find(|(nu, _)| nu.size() != mu.size() + 1) {
        return Err(Error::Consistency(format!("unexpected P*_{nu} term in the one-box expansion of P*_{mu}")));
    }
    Ok(coeffs)
}

/// Writes a shifted-symmetric polynomial as `Σ c_ν P*_ν`.
///
/// Degree by degree from the top: the top homogeneous part is symmetric and
/// is expanded in the Jack basis; since `P*_ν = P_ν + lower terms`, those are
/// the `P*` coefficients of that degree, and their full shifted polynomials are
/// subtracted before descending.
pub fn expand_in_shifted_basis(f: &MultiPoly, params: &JackParams) -> Result<BTreeMap<Partition, Rational>> {
    if f.n() != params.n {
        return Err(domain!("polynomial has {} variables, expected {}", f.n(), params.n));
    }
    let mut rest = f.clone();
    let mut out = BTreeMap::new();
    while let Some(d) = rest.degree() {
        let top = to_monomial_expansion(&rest.homogeneous_component(d))
            .map_err(|e| Error::Domain(format!("not shifted symmetric: {e}")))?;
        let jack = expand_in_jack_basis(&top, &params.theta)?;
        for (nu, c) in jack.iter_graded() {
            rest = rest.sub(&shifted_jack(nu, params).poly.scale(c))?;
            out.insert(nu.clone(), c.clone());
        }
        if rest.degree() == Some(d) {
            return Err(Error::Consistency(format!("degree-{d} part did not cancel")));
        }
    }
    Ok(out)
}

/// `θ-dim λ/μ` by chaining one-box expansions along all paths from `μ` to `λ`.
pub fn thetadim_iterated(lambda: &Partition, mu: &Partition, params: &JackParams) -> Result<Rational> {
    let mut cache = PieriCache::new(params.clone());
    cache.skew(lambda, mu)
}

/// Memoized one-box expansions for repeated θ-dimension queries.
pub struct PieriCache {
    params: JackParams,
    rules: BTreeMap<Partition, BTreeMap<Partition, Rational>>,
}

impl PieriCache {
    pub fn new(params: JackParams) -> Self {
        PieriCache { params, rules: BTreeMap::new() }
    }

    pub fn rule(&mut self, mu: &Partition) -> Result<&BTreeMap<Partition, Rational>> {
        if !self.rules.contains_key(mu) {
            let rule = pieri_shifted(mu, &self.params)?;
            self.rules.insert(mu.clone(), rule);
        }
        Ok(&self.rules[mu])
    }

    pub fn skew(&mut self, lambda: &Partition, mu: &Partition) -> Result<Rational> {
        if !lambda.contains(mu) {
            return Ok(Rational::zero());
        }
        if self.params.n < lambda.length() {
            return Err(domain!("n = {} is smaller than the length of {lambda}", self.params.n));
        }
        let mut layer: BTreeMap<Partition, Rational> = BTreeMap::from([(mu.clone(), Rational::one())]);
        for _ in mu.size()..lambda.size() {
            let mut next: BTreeMap<Partition, Rational> = BTreeMap::new();
            for (nu, weight) in layer {
                let rule = self.rule(&nu)?.clone();
                for (rho, c) in rule {
                    if lambda.contains(&rho) {
                        *next.entry(rho).or_insert_with(Rational::zero) += &weight * c;
                    }
                }
            }
            layer = next;
        }
        Ok(layer.remove(lambda).unwrap_or_else(Rational::zero))
    }
}

pub fn thetadim(lambda: &Partition, mu: &Partition, params: &JackParams) -> Result<ThetaDim> {
    Ok(ThetaDim {
        lambda: lambda.clone(),
        mu: mu.clone(),
        theta: params.theta.clone(),
        value: thetadim_skew(lambda, mu, params)?,
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

    #[test]
    fn expansion_examples() {
        let theta = ratio(2, 3);
        assert_eq!(
            thetadim_by_expansion(&partition![1], &Partition::empty(), &params(2, theta.clone())).unwrap(),
            int(1)
        );
        assert_eq!(thetadim_by_expansion(&partition![2, 1], &Partition::empty(), &params(2, int(1))).unwrap(), int(2));
        assert_eq!(thetadim_by_expansion(&partition![2], &partition![1], &params(2, theta.clone())).unwrap(), int(1));
        assert!(thetadim_by_expansion(&partition![2, 1], &Partition::empty(), &params(1, theta.clone())).is_err());
        assert!(thetadim_by_expansion(&partition![1], &partition![2], &params(2, theta)).is_err());
    }

    #[test]
    fn closed_examples() {
        let theta = ratio(5, 7);
        assert_eq!(thetadim_closed(&partition![2, 1], &theta), int(6) / (&theta + int(2)));
        assert_eq!(thetadim_closed(&Partition::empty(), &theta), int(1));
        assert_eq!(thetadim_closed(&partition![3, 2], &int(1)), int(5));
    }

    #[test]
    fn skew_examples() {
        let theta = ratio(1, 3);
        let p = params(3, theta);
        assert_eq!(thetadim_skew(&partition![2], &partition![1], &p).unwrap(), int(1));
        assert_eq!(thetadim_skew(&partition![3, 1], &partition![3, 1], &p).unwrap(), int(1));
        assert_eq!(thetadim_skew(&partition![3], &partition![1, 1], &p).unwrap(), int(0));
    }

    #[test]
    fn pieri_examples() {
        let theta = ratio(3, 2);
        let rule = pieri_shifted(&Partition::empty(), &params(2, theta.clone())).unwrap();
        assert_eq!(rule, BTreeMap::from([(partition![1], int(1))]));
        let rule = pieri_shifted(&partition![1], &params(2, int(1))).unwrap();
        assert_eq!(rule, BTreeMap::from([(partition![2], int(1)), (partition![1, 1], int(1))]));
        let p = params(2, theta);
        let rule = pieri_shifted(&partition![1], &p).unwrap();
        for lam in [partition![2], partition![1, 1]] {
            assert_eq!(rule[&lam], thetadim_skew(&lam, &partition![1], &p).unwrap());
        }
    }

    #[test]
    fn shifted_basis_rejects_non_shifted_symmetric() {
        let p = params(2, int(1));
        assert!(expand_in_shifted_basis(&MultiPoly::var(2, 0), &p).is_err());
    }
}
