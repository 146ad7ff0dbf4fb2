//! Shifted Jack polynomials `P*_μ(x; θ)`.
//!
//! `P*_μ` is shifted symmetric (symmetric in `x_i - θ i`), has degree `|μ|`,
//! takes the value `H(μ)` at `μ` and vanishes at every other partition of
//! size at most `|μ|`. It is built from the same reverse-tableau weights as
//! the ordinary Jack polynomial, with each variable replaced by a linear
//! factor depending on the square's coarm and coleg.

use num::{One, Zero};

use crate::error::{domain, Result};
use crate::jack::{JackParams, StripWeights};
use crate::partitions::{reverse_tableaux, Partition};
use crate::poly::{Monomial, MultiPoly};
use crate::rational::{int, Rational};

/// A polynomial tagged as a candidate element of the shifted symmetric algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShiftedPoly {
    pub mu: Partition,
    pub n: usize,
    pub theta: Rational,
    pub poly: MultiPoly,
}

impl ShiftedPoly {
    /// Wraps an arbitrary polynomial, e.g. to test it for shifted symmetry.
    pub fn from_poly(poly: MultiPoly, theta: Rational) -> Self {
        ShiftedPoly { mu: Partition::empty(), n: poly.n(), theta, poly }
    }
}

/// One reverse tableau reduced to what evaluation needs: its weight and, per
/// square, the variable index and the constant `-a'(s) + θ l'(s)`.
#[derive(Debug, Clone)]
struct WeightedFilling {
    weight: Rational,
    factors: Vec<(usize, Rational)>,
}

fn weighted_fillings(mu: &Partition, params: &JackParams) -> Vec<WeightedFilling> {
    let mut weights = StripWeights::new(&params.theta);
    let constants: Vec<Rational> =
        mu.squares().map(|s| &params.theta * int(s.row as i64 - 1) - int(s.col as i64 - 1)).collect();
    reverse_tableaux(mu, params.n)
        .map(|t| {
            let weight = weights.tableau_weight(&t, params.n);
            let factors = t.rows().iter().flatten().zip(&constants).map(|(&entry, c)| (entry - 1, c.clone())).collect();
            WeightedFilling { weight, factors }
        })
        .collect()
}

/// `P*_μ(x;θ) = Σ_T ψ_T(θ) ∏_{s∈μ} (x_{T(s)} - a'(s) + θ l'(s))`. Zero when
/// `length(μ) > n`.
pub fn shifted_jack(mu: &Partition, params: &JackParams) -> ShiftedPoly {
    let n = params.n;
    let mut poly = MultiPoly::zero(n);
    for filling in weighted_fillings(mu, params) {
        // Per variable, the univariate product of its linear factors.
        let mut per_var: Vec<Vec<Rational>> = vec![vec![Rational::one()]; n];
        for (var, c) in &filling.factors {
            let old = &per_var[*var];
            let mut next = vec![Rational::zero(); old.len() + 1];
            for (k, a) in old.iter().enumerate() {
                next[k + 1] += a;
                next[k] += a * c;
            }
            per_var[*var] = next;
        }
        let mut partial: Vec<(Vec<u32>, Rational)> = vec![(Vec::with_capacity(n), filling.weight.clone())];
        for coeffs in &per_var {
            let mut next = Vec::with_capacity(partial.len() * coeffs.len());
            for (e, c) in &partial {
                for (k, a) in coeffs.iter().enumerate() {
                    if a.is_zero() {
                        continue;
                    }
                    let mut e2 = e.clone();
                    e2.push(k as u32);
                    next.push((e2, c * a));
                }
            }
            partial = next;
        }
        for (e, c) in partial {
            poly.add_term(Monomial::new(e), c);
        }
    }
    ShiftedPoly { mu: mu.clone(), n, theta: params.theta.clone(), poly }
}

/// Evaluates `P*_μ` at many points by direct substitution into the tableau sum.
#[derive(Debug, Clone)]
pub struct ShiftedEvaluator {
    mu: Partition,
    n: usize,
    fillings: Vec<WeightedFilling>,
}

impl ShiftedEvaluator {
    pub fn new(mu: &Partition, params: &JackParams) -> Self {
        ShiftedEvaluator { mu: mu.clone(), n: params.n, fillings: weighted_fillings(mu, params) }
    }

    pub fn mu(&self) -> &Partition {
        &self.mu
    }

    pub fn eval_point(&self, point: &[Rational]) -> Result<Rational> {
        if point.len() != self.n {
            return Err(domain!("point has {} coordinates, expected {}", point.len(), self.n));
        }
        let mut acc = Rational::zero();
        for filling in &self.fillings {
            let mut term = filling.weight.clone();
            for (var, c) in &filling.factors {
                term *= &point[*var] + c;
                if term.is_zero() {
                    break;
                }
            }
            acc += term;
        }
        Ok(acc)
    }

    /// `P*_μ(λ_1, …, λ_n)`.
    pub fn eval(&self, lambda: &Partition) -> Result<Rational> {
        if lambda.length() > self.n {
            return Err(domain!("partition {lambda} has more than {} parts", self.n));
        }
        let point: Vec<Rational> = lambda.padded(self.n).into_iter().map(|p| int(p as i64)).collect();
        self.eval_point(&point)
    }
}

/// `P*_μ(λ; θ)` exactly.
pub fn shifted_eval(mu: &Partition, lam: &Partition, params: &JackParams) -> Result<Rational> {
    if mu.length() > params.n {
        return Err(domain!("partition {mu} has more than {} parts", params.n));
    }
    ShiftedEvaluator::new(mu, params).eval(lam)
}

/// The homogeneous component of degree `|μ|`.
pub fn top_term(sp: &ShiftedPoly) -> MultiPoly {
    sp.poly.homogeneous_component(sp.mu.size() as u32)
}

/// Substitutes `x_i ← y_i + θ i` and tests ordinary symmetry in `y`.
pub fn check_shifted_symmetry(sp: &ShiftedPoly) -> bool {
    let shifts: Vec<Rational> = (1..=sp.n).map(|i| &sp.theta * int(i as i64)).collect();
    sp.poly.shift_each(&shifts).map(|p| p.is_symmetric()).unwrap_or(false)
}
