//! Jack polynomials `P_λ(x; θ)` in `n` variables.
//!
//! Two independent constructions are provided: the sum over reverse tableaux
//! ([`jack_combinatorial`]) and recursion on the number of variables through
//! the branching rule ([`jack_by_branching`]). Both use the same horizontal
//! strip weight [`branching_weight`], whose Gamma-function ratios collapse to
//! finite products of linear factors, so every coefficient stays in ℚ.

use std::collections::HashMap;

use num::{One, Signed, Zero};

use crate::error::{domain, Error, Result};
use crate::partitions::{
    hook_h, hook_hprime, interlacings, pochhammer_mu, reverse_tableaux, Partition, ReverseTableau,
};
use crate::poly::{vandermonde, Basis, Monomial, MultiPoly, SymExpansion};
use crate::rational::{gamma_shift, int, is_positive, to_f64, Rational};

/// Number of variables and the parameter `θ = 1/α`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct JackParams {
    pub n: usize,
    pub theta: Rational,
}

impl JackParams {
    pub fn new(n: usize, theta: Rational) -> Result<Self> {
        if n == 0 {
            return Err(domain!("need at least one variable"));
        }
        if !is_positive(&theta) {
            return Err(domain!("theta must be positive, got {theta}"));
        }
        Ok(JackParams { n, theta })
    }

    pub fn with_n(&self, n: usize) -> Result<Self> {
        JackParams::new(n, self.theta.clone())
    }
}

/// Weight `ψ_{λ/ν}` of a horizontal strip in the branching rule.
///
/// Each numerator factor `(·)_{θ-1}` is paired with the denominator factor
/// sharing its offset `θ(j-i)+1`; the two arguments then differ by an integer
/// `m`, and `Γ(t+m)/Γ(t)` is a finite product.
pub fn branching_weight(lambda: &Partition, nu: &Partition, theta: &Rational) -> Result<Rational> {
    if !lambda.is_horizontal_strip_over(nu) {
        return Err(domain!("{nu} does not interlace {lambda}"));
    }
    Ok(strip_weight(lambda, nu, theta))
}

fn strip_weight(lambda: &Partition, nu: &Partition, theta: &Rational) -> Rational {
    // The product stabilizes once ν has room for a trailing zero part.
    let n = lambda.length().max(nu.length() + 1);
    let shift = theta - Rational::one();
    let mut acc = Rational::one();
    for i in 1..n {
        let (lam_i, nu_i) = (lambda.part(i) as i64, nu.part(i) as i64);
        for j in i..n {
            let c = theta * int((j - i) as i64) + Rational::one();
            let (lam_next, nu_j) = (lambda.part(j + 1) as i64, nu.part(j) as i64);

            // (ν_i-λ_{j+1}+c)_{θ-1} / (λ_i-λ_{j+1}+c)_{θ-1}
            let t = int(nu_i - lam_next) + &c;
            let m = lam_i - nu_i;
            acc *= gamma_shift(&t, m) / gamma_shift(&(&t + &shift), m);

            // (λ_i-ν_j+c)_{θ-1} / (ν_i-ν_j+c)_{θ-1}
            let t = int(lam_i - nu_j) + &c;
            let m = nu_i - lam_i;
            acc *= gamma_shift(&t, m) / gamma_shift(&(&t + &shift), m);
        }
    }
    acc
}

/// Memoized strip weights for one value of `θ`.
#[derive(Debug, Clone)]
pub struct StripWeights {
    theta: Rational,
    cache: HashMap<(Partition, Partition), Rational>,
}

impl StripWeights {
    pub fn new(theta: &Rational) -> Self {
        StripWeights { theta: theta.clone(), cache: HashMap::new() }
    }

    pub fn theta(&self) -> &Rational {
        &self.theta
    }

    /// `ψ_{λ/ν}`; the caller guarantees `λ/ν` is a horizontal strip.
    pub fn get(&mut self, lambda: &Partition, nu: &Partition) -> Rational {
        if lambda == nu {
            return Rational::one();
        }
        if let Some(w) = self.cache.get(&(lambda.clone(), nu.clone())) {
            return w.clone();
        }
        let w = strip_weight(lambda, nu, &self.theta);
        self.cache.insert((lambda.clone(), nu.clone()), w.clone());
        w
    }

    /// `ψ_T = ∏_i ψ_{S_i/S_{i+1}}` with `S_i = {s : T(s) ≥ i}`.
    pub fn tableau_weight(&mut self, t: &ReverseTableau, n: usize) -> Rational {
        let chain = t.shape_chain(n);
        chain.windows(2).fold(Rational::one(), |acc, w| acc * self.get(&w[0], &w[1]))
    }
}

/// `P_μ` as the sum over reverse tableaux `T` with entries in `1..=n` of
/// `ψ_T(θ) ∏ x_{T(s)}`. Zero when `length(μ) > n`.
pub fn jack_combinatorial(mu: &Partition, params: &JackParams) -> MultiPoly {
    let mut weights = StripWeights::new(&params.theta);
    let mut out = MultiPoly::zero(params.n);
    for t in reverse_tableaux(mu, params.n) {
        let w = weights.tableau_weight(&t, params.n);
        let e: Vec<u32> = t.content(params.n).into_iter().map(|c| c as u32).collect();
        out.add_term(Monomial::new(e), w);
    }
    out
}

/// `P_μ` by recursion on the number of variables:
/// `P_λ(x_1..x_n) = Σ_{ν≺λ} ψ_{λ/ν} P_ν(x_1..x_{n-1}) x_n^{|λ/ν|}`.
pub fn jack_by_branching(mu: &Partition, params: &JackParams) -> MultiPoly {
    let mut weights = StripWeights::new(&params.theta);
    let mut memo = HashMap::new();
    branch(mu, params.n, &mut weights, &mut memo)
}

fn branch(
    lambda: &Partition,
    n: usize,
    weights: &mut StripWeights,
    memo: &mut HashMap<(Partition, usize), MultiPoly>,
) -> MultiPoly {
    if lambda.length() > n {
        return MultiPoly::zero(n);
    }
    if n == 1 {
        return MultiPoly::monomial(vec![lambda.part(1) as u32], Rational::one());
    }
    if let Some(p) = memo.get(&(lambda.clone(), n)) {
        return p.clone();
    }
    let mut out = MultiPoly::zero(n);
    for nu in interlacings(lambda, n).expect("length checked above") {
        let w = weights.get(lambda, &nu);
        let sub = branch(&nu, n - 1, weights, memo).extend_variables(1);
        let mut e = vec![0u32; n];
        e[n - 1] = (lambda.size() - nu.size()) as u32;
        out = out.add(&sub.mul_monomial(&e).scale(&w)).expect("same n");
    }
    memo.insert((lambda.clone(), n), out.clone());
    out
}

/// Monomial-basis coefficients of `P_μ` in `n` variables, computed directly
/// from chains of horizontal strips without expanding the polynomial.
pub fn jack_monomial_expansion(mu: &Partition, params: &JackParams) -> SymExpansion {
    let mut weights = StripWeights::new(&params.theta);
    jack_monomial_expansion_with(mu, params.n, &mut weights)
}

pub(crate) fn jack_monomial_expansion_with(mu: &Partition, n: usize, weights: &mut StripWeights) -> SymExpansion {
    let mut out = SymExpansion::new(n, Basis::Monomial);
    if mu.length() > n {
        return out;
    }
    for nu in crate::partitions::partitions_of(mu.size(), n) {
        if !mu.dominates(&nu) {
            continue;
        }
        let content = nu.padded(n);
        let mut memo = HashMap::new();
        let c = content_coefficient(mu, &content, weights, &mut memo);
        out.add(nu, c);
    }
    out
}

/// Rewrites a monomial-basis expansion in the Jack basis by peeling off the
/// lexicographically largest partition; each `P_λ` is monic in `m_λ` and
/// otherwise supported on partitions it dominates.
pub fn expand_in_jack_basis(f: &SymExpansion, theta: &Rational) -> Result<SymExpansion> {
    if f.basis() != Basis::Monomial {
        return Err(domain!("input must be in the monomial basis"));
    }
    let n = f.n();
    let mut weights = StripWeights::new(theta);
    let mut rest = f.clone();
    let mut out = SymExpansion::new(n, Basis::Jack);
    while let Some((lead, c)) = rest.iter_graded().max_by(|a, b| a.0.size().cmp(&b.0.size()).then(a.0.cmp(b.0))) {
        let (lead, c) = (lead.clone(), c.clone());
        let p = jack_monomial_expansion_with(&lead, n, &mut weights);
        for (nu, v) in p.iter_graded() {
            rest.add(nu.clone(), -(v * &c));
        }
        if !rest.coeff(&lead).is_zero() {
            return Err(Error::Consistency(format!("P_{lead} is not monic in m_{lead}")));
        }
        out.add(lead, c);
    }
    Ok(out)
}

/// Coefficient of `x_1^{c_1} … x_k^{c_k}` in `P_λ(x_1..x_k)`.
fn content_coefficient(
    lambda: &Partition,
    content: &[usize],
    weights: &mut StripWeights,
    memo: &mut HashMap<(Partition, usize), Rational>,
) -> Rational {
    let k = content.len();
    if lambda.length() > k {
        return Rational::zero();
    }
    if k == 1 {
        return if lambda.part(1) == content[0] { Rational::one() } else { Rational::zero() };
    }
    if let Some(c) = memo.get(&(lambda.clone(), k)) {
        return c.clone();
    }
    let last = content[k - 1];
    let mut acc = Rational::zero();
    for nu in interlacings(lambda, k).expect("length checked above") {
        if lambda.size() - nu.size() != last {
            continue;
        }
        let sub = content_coefficient(&nu, &content[..k - 1], weights, memo);
        if !sub.is_zero() {
            acc += weights.get(lambda, &nu) * sub;
        }
    }
    memo.insert((lambda.clone(), k), acc.clone());
    acc
}

/// Exact value `P_μ(point)` by the branching recursion, without expanding
/// the polynomial.
pub fn jack_evaluate(mu: &Partition, point: &[Rational], theta: &Rational) -> Result<Rational> {
    let mut evaluator = JackEvaluator::new(point.to_vec(), theta)?;
    Ok(evaluator.eval(mu))
}

/// Evaluates many Jack polynomials at one point, sharing intermediate values.
pub struct JackEvaluator {
    point: Vec<Rational>,
    weights: StripWeights,
    memo: HashMap<(Partition, usize), Rational>,
    powers: Vec<Vec<Rational>>,
}

impl JackEvaluator {
    pub fn new(point: Vec<Rational>, theta: &Rational) -> Result<Self> {
        if point.is_empty() {
            return Err(domain!("need at least one variable"));
        }
        if !is_positive(theta) {
            return Err(domain!("theta must be positive, got {theta}"));
        }
        let powers = point.iter().map(|_| vec![Rational::one()]).collect();
        Ok(JackEvaluator { point, weights: StripWeights::new(theta), memo: HashMap::new(), powers })
    }

    pub fn n(&self) -> usize {
        self.point.len()
    }

    fn power(&mut self, var: usize, e: usize) -> Rational {
        let row = &mut self.powers[var];
        while row.len() <= e {
            let next = row.last().expect("nonempty") * &self.point[var];
            row.push(next);
        }
        row[e].clone()
    }

    pub fn eval(&mut self, mu: &Partition) -> Rational {
        let n = self.n();
        self.eval_in(mu, n)
    }

    fn eval_in(&mut self, lambda: &Partition, k: usize) -> Rational {
        if lambda.length() > k {
            return Rational::zero();
        }
        if k == 1 {
            return self.power(0, lambda.part(1));
        }
        if let Some(v) = self.memo.get(&(lambda.clone(), k)) {
            return v.clone();
        }
        let mut acc = Rational::zero();
        for nu in interlacings(lambda, k).expect("length checked above") {
            let strip = lambda.size() - nu.size();
            let x_pow = self.power(k - 1, strip);
            if x_pow.is_zero() {
                continue;
            }
            let sub = self.eval_in(&nu, k - 1);
            if sub.is_zero() {
                continue;
            }
            acc += self.weights.get(lambda, &nu) * sub * x_pow;
        }
        self.memo.insert((lambda.clone(), k), acc.clone());
        acc
    }
}

/// `D(u;θ) p` for the Sekiguchi operator
/// `V(x)^{-1} det[x_i^{n-j} (x_i ∂_i + (n-j)θ + u)]`.
///
/// The determinant is expanded over permutations; every entry of a row acts
/// on a single variable, so each permutation term is a product of commuting
/// factors applied to monomials of `p`. The final division by the Vandermonde
/// must be exact.
pub fn sekiguchi_apply(p: &MultiPoly, u: &Rational, theta: &Rational) -> Result<MultiPoly> {
    let n = p.n();
    if n == 0 {
        return Err(domain!("need at least one variable"));
    }
    let perms = signed_permutations(n);
    let mut numer = MultiPoly::zero(n);
    for (m, c) in p.terms() {
        let a = m.exponents();
        for (perm, sign) in &perms {
            let mut coeff = if *sign { -c.clone() } else { c.clone() };
            let mut e = Vec::with_capacity(n);
            for i in 0..n {
                let power = (n - 1 - perm[i]) as u32;
                coeff *= int(a[i] as i64) + theta * int(power as i64) + u;
                if coeff.is_zero() {
                    break;
                }
                e.push(a[i] + power);
            }
            if !coeff.is_zero() {
                numer.add_term(Monomial::new(e), coeff);
            }
        }
    }
    numer.divide_exact(&vandermonde(n)).map_err(|e| match e {
        Error::Consistency(msg) => Error::Consistency(format!("Sekiguchi operator: {msg} (input not symmetric?)")),
        other => other,
    })
}

/// The eigenvalue `∏_i (λ_i + (n-i)θ + u)` of `D(u;θ)` on `P_λ`.
pub fn sekiguchi_eigenvalue(lambda: &Partition, n: usize, u: &Rational, theta: &Rational) -> Rational {
    (1..=n).fold(Rational::one(), |acc, i| acc * (int(lambda.part(i) as i64) + theta * int((n - i) as i64) + u))
}

/// All permutations of `0..n` with a flag that is true for odd ones.
fn signed_permutations(n: usize) -> Vec<(Vec<usize>, bool)> {
    let mut out = Vec::new();
    let mut perm: Vec<usize> = (0..n).collect();
    permute(&mut perm, 0, &mut out);
    out.into_iter()
        .map(|p| {
            let inversions = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count();
            (p, inversions % 2 == 1)
        })
        .collect()
}

fn permute(perm: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k == perm.len() {
        out.push(perm.clone());
        return;
    }
    for i in k..perm.len() {
        perm.swap(k, i);
        permute(perm, k + 1, out);
        perm.swap(k, i);
    }
}

/// `P_μ(1,…,1) = (nθ)_μ / H'(μ)`.
pub fn jack_principal(mu: &Partition, params: &JackParams) -> Rational {
    let t = &params.theta * int(params.n as i64);
    pochhammer_mu(&t, mu, &params.theta) / hook_hprime(mu, &params.theta)
}

/// Principal specialization through Gamma functions in floating point:
/// `∏_{i<j≤n} (λ_i-λ_j+θ(j-i))_θ · ∏_{i≤n} Γ(θ)/Γ(θi)` with `(t)_θ = Γ(t+θ)/Γ(t)`.
pub fn jack_principal_gamma(mu: &Partition, n: usize, theta: f64) -> Result<f64> {
    if mu.length() > n {
        return Ok(0.0);
    }
    if theta.is_nan() || theta <= 0.0 {
        return Err(domain!("theta must be positive"));
    }
    let lambda = mu.padded(n);
    let mut log = 0.0;
    for i in 0..n {
        for j in i + 1..n {
            let t = (lambda[i] - lambda[j]) as f64 + theta * (j - i) as f64;
            log += libm::lgamma(t + theta) - libm::lgamma(t);
        }
        log += libm::lgamma(theta) - libm::lgamma(theta * (i + 1) as f64);
    }
    Ok(log.exp())
}

/// `Q_μ = (H'(μ)/H(μ)) P_μ`.
pub fn q_normalize(mu: &Partition, params: &JackParams) -> MultiPoly {
    jack_combinatorial(mu, params).scale(&q_factor(mu, &params.theta))
}

/// The ratio `H'(μ)/H(μ)`.
pub fn q_factor(mu: &Partition, theta: &Rational) -> Rational {
    hook_hprime(mu, theta) / hook_h(mu, theta)
}

/// Jack rational function for weakly decreasing integers (possibly negative):
/// returns `(P_{λ-λ_n}, λ_n)` standing for `(∏ x_i)^{λ_n} P_{λ-λ_n}`.
pub fn jack_laurent(lambda_signed: &[i64], params: &JackParams) -> Result<(MultiPoly, i64)> {
    if lambda_signed.len() != params.n {
        return Err(domain!("expected {} entries, got {}", params.n, lambda_signed.len()));
    }
    if lambda_signed.windows(2).any(|w| w[0] < w[1]) {
        return Err(domain!("entries must be weakly decreasing, got {lambda_signed:?}"));
    }
    let last = *lambda_signed.last().expect("n >= 1");
    let shifted = Partition::new(lambda_signed.iter().map(|&l| (l - last) as usize).collect())?;
    Ok((jack_combinatorial(&shifted, params), last))
}

/// Multiplies out a Laurent pair with a nonnegative power of `∏ x_i`.
pub fn laurent_to_poly(pair: &(MultiPoly, i64)) -> Result<MultiPoly> {
    let (p, k) = pair;
    if k.is_negative() {
        return Err(domain!("negative power {k} of the product of variables is not a polynomial"));
    }
    Ok(p.mul_monomial(&vec![*k as u32; p.n()]))
}

/// Relative gap between the exact and Gamma-function principal specializations.
pub fn principal_gamma_gap(mu: &Partition, params: &JackParams) -> Result<f64> {
    let exact = to_f64(&jack_principal(mu, params));
    let approx = jack_principal_gamma(mu, params.n, to_f64(&params.theta))?;
    Ok((exact - approx).abs() / exact.abs().max(f64::MIN_POSITIVE))
}
