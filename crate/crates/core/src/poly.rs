//! Exact multivariate polynomials over the rationals and symmetric expansions.
//!
//! Exponent vectors are dense (always of length `n`). Terms are kept in graded
//! lexicographic order: total degree first, then lexicographic on the
//! exponent vector, so the last stored term is the leading one.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::partitions::Partition;
use crate::rational::{int, parse_rational, to_f64, Rational};

/// Exponent vector ordered graded-lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    fn quotient(&self, divisor: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&divisor.0).map(|(a, b)| a - b).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Polynomial in `n` variables with rational coefficients. Zero coefficients
/// are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiPoly {
    n: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl MultiPoly {
    pub fn zero(n: usize) -> Self {
        MultiPoly { n, terms: BTreeMap::new() }
    }

    pub fn constant(n: usize, c: Rational) -> Self {
        let mut p = MultiPoly::zero(n);
        p.add_term(Monomial(vec![0; n]), c);
        p
    }

    pub fn one(n: usize) -> Self {
        MultiPoly::constant(n, Rational::one())
    }

    /// The variable `x_{i+1}` (0-based index `i`).
    pub fn var(n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i] = 1;
        MultiPoly::monomial(e, Rational::one())
    }

    pub fn monomial(exponents: Vec<u32>, c: Rational) -> Self {
        let mut p = MultiPoly::zero(exponents.len());
        p.add_term(Monomial(exponents), c);
        p
    }

    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (Vec<u32>, Rational)>) -> Result<Self> {
        let mut p = MultiPoly::zero(n);
        for (e, c) in terms {
            if e.len() != n {
                return Err(domain!("exponent vector {e:?} does not have length {n}"));
            }
            p.add_term(Monomial(e), c);
        }
        Ok(p)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Terms in increasing graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exponents: &[u32]) -> Rational {
        self.terms.get(&Monomial(exponents.to_vec())).cloned().unwrap_or_else(Rational::zero)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(Monomial::degree)
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_same_n(&self, other: &MultiPoly) -> Result<()> {
        if self.n != other.n {
            return Err(domain!("variable counts differ: {} vs {}", self.n, other.n));
        }
        Ok(())
    }

    pub fn add(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check_same_n(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check_same_n(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        Ok(out)
    }

    pub fn mul(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check_same_n(other)?;
        let mut out = MultiPoly::zero(self.n);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(self.n);
        }
        MultiPoly { n: self.n, terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect() }
    }

    pub fn pow(&self, k: u32) -> MultiPoly {
        let mut out = MultiPoly::one(self.n);
        for _ in 0..k {
            out = out.mul(self).expect("same variable count");
        }
        out
    }

    /// Multiplies by the monomial `x^e`.
    pub fn mul_monomial(&self, exponents: &[u32]) -> MultiPoly {
        let shift = Monomial(exponents.to_vec());
        MultiPoly { n: self.n, terms: self.terms.iter().map(|(m, c)| (m.mul(&shift), c.clone())).collect() }
    }

    pub fn evaluate(&self, point: &[Rational]) -> Result<Rational> {
        if point.len() != self.n {
            return Err(domain!("point has {} coordinates, polynomial has {} variables", point.len(), self.n));
        }
        let powers = power_table(point, self.max_exponents(), Rational::one(), |a, b| a * b);
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    t *= &powers[i][e as usize];
                }
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Floating-point evaluation with coefficients rounded to the nearest double.
    pub fn evaluate_f64(&self, point: &[f64]) -> Result<f64> {
        if point.len() != self.n {
            return Err(domain!("point has {} coordinates, polynomial has {} variables", point.len(), self.n));
        }
        let powers = power_table(point, self.max_exponents(), 1.0, |a, b| a * b);
        Ok(self
            .terms
            .iter()
            .map(|(m, c)| m.0.iter().enumerate().fold(to_f64(c), |t, (i, &e)| t * powers[i][e as usize]))
            .sum())
    }

    fn max_exponents(&self) -> Vec<u32> {
        let mut max = vec![0; self.n];
        for m in self.terms.keys() {
            for (slot, &e) in max.iter_mut().zip(&m.0) {
                *slot = (*slot).max(e);
            }
        }
        max
    }

    /// Substitutes `x_i ← x_i + c` in every variable.
    pub fn shift_all(&self, c: &Rational) -> MultiPoly {
        self.shift_each(&vec![c.clone(); self.n]).expect("shift vector has length n")
    }

    /// Substitutes `x_i ← x_i + shifts[i]`, expanding each power binomially.
    pub fn shift_each(&self, shifts: &[Rational]) -> Result<MultiPoly> {
        if shifts.len() != self.n {
            return Err(domain!("{} shifts for {} variables", shifts.len(), self.n));
        }
        let max = self.max_exponents();
        // expansions[i][e] = coefficients of (x + c_i)^e in powers of x
        let expansions: Vec<Vec<Vec<Rational>>> = shifts
            .iter()
            .zip(&max)
            .map(|(c, &m)| {
                let mut rows = vec![vec![Rational::one()]];
                for e in 1..=m as usize {
                    let prev = &rows[e - 1];
                    let mut row = vec![Rational::zero(); e + 1];
                    for (k, v) in prev.iter().enumerate() {
                        row[k + 1] += v;
                        row[k] += v * c;
                    }
                    rows.push(row);
                }
                rows
            })
            .collect();
        let mut out = MultiPoly::zero(self.n);
        for (m, coeff) in &self.terms {
            let mut partial: Vec<(Vec<u32>, Rational)> = vec![(Vec::with_capacity(self.n), coeff.clone())];
            for (i, &e) in m.0.iter().enumerate() {
                let row = &expansions[i][e as usize];
                let mut next = Vec::with_capacity(partial.len() * row.len());
                for (exps, c) in &partial {
                    for (k, b) in row.iter().enumerate() {
                        if b.is_zero() {
                            continue;
                        }
                        let mut ex = exps.clone();
                        ex.push(k as u32);
                        next.push((ex, c * b));
                    }
                }
                partial = next;
            }
            for (exps, c) in partial {
                out.add_term(Monomial(exps), c);
            }
        }
        Ok(out)
    }

    /// The homogeneous component of total degree `d`.
    pub fn homogeneous_component(&self, d: u32) -> MultiPoly {
        MultiPoly {
            n: self.n,
            terms: self.terms.iter().filter(|(m, _)| m.degree() == d).map(|(m, c)| (m.clone(), c.clone())).collect(),
        }
    }

    /// Sets the last variable to zero and drops it.
    pub fn drop_last_variable(&self) -> MultiPoly {
        let n = self.n.saturating_sub(1);
        let mut out = MultiPoly::zero(n);
        for (m, c) in &self.terms {
            if m.0.last().copied().unwrap_or(0) == 0 {
                out.add_term(Monomial(m.0[..n].to_vec()), c.clone());
            }
        }
        out
    }

    /// Appends `extra` variables that do not occur.
    pub fn extend_variables(&self, extra: usize) -> MultiPoly {
        MultiPoly {
            n: self.n + extra,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let mut e = m.0.clone();
                    e.resize(self.n + extra, 0);
                    (Monomial(e), c.clone())
                })
                .collect(),
        }
    }

    /// Exchanges variables `i` and `j` (0-based).
    pub fn swap_variables(&self, i: usize, j: usize) -> MultiPoly {
        MultiPoly {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let mut e = m.0.clone();
                    e.swap(i, j);
                    (Monomial(e), c.clone())
                })
                .collect(),
        }
    }

    /// First pair `(i, j)` (1-based, `i < j`) whose transposition changes the polynomial.
    pub fn asymmetric_transposition(&self) -> Option<(usize, usize)> {
        for i in 0..self.n {
            for j in i + 1..self.n {
                if self.swap_variables(i, j) != *self {
                    return Some((i + 1, j + 1));
                }
            }
        }
        None
    }

    pub fn is_symmetric(&self) -> bool {
        self.asymmetric_transposition().is_none()
    }

    /// Exact division; fails with a consistency error if a remainder is left.
    pub fn divide_exact(&self, divisor: &MultiPoly) -> Result<MultiPoly> {
        self.check_same_n(divisor)?;
        let (lead_m, lead_c) = divisor
            .leading_term()
            .map(|(m, c)| (m.clone(), c.clone()))
            .ok_or_else(|| domain!("division by the zero polynomial"))?;
        let mut rem = self.clone();
        let mut quotient = MultiPoly::zero(self.n);
        while let Some((m, c)) = rem.leading_term() {
            if !lead_m.divides(m) {
                return Err(Error::Consistency(format!("division leaves a remainder with leading monomial {:?}", m.0)));
            }
            let q_m = m.quotient(&lead_m);
            let q_c = c / &lead_c;
            for (dm, dc) in &divisor.terms {
                rem.add_term(dm.mul(&q_m), -(dc * &q_c));
            }
            quotient.add_term(q_m, q_c);
        }
        Ok(quotient)
    }
}

fn power_table<T: Clone>(point: &[T], max: Vec<u32>, one: T, mul: impl Fn(&T, &T) -> T) -> Vec<Vec<T>> {
    point
        .iter()
        .zip(max)
        .map(|(x, m)| {
            let mut row = vec![one.clone()];
            for e in 1..=m as usize {
                let next = mul(&row[e - 1], x);
                row.push(next);
            }
            row
        })
        .collect()
}

impl fmt::Display for MultiPoly {
    /// Terms from the leading one down, e.g. `x1^2*x2 - 1/2*x2 + 3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if negative {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if negative { " - " } else { " + " })?;
            }
            let vars: Vec<String> =
                m.0.iter()
                    .enumerate()
                    .filter(|(_, &e)| e > 0)
                    .map(|(i, &e)| if e == 1 { format!("x{}", i + 1) } else { format!("x{}^{}", i + 1, e) })
                    .collect();
            if vars.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                f.write_str(&vars.join("*"))?;
            } else {
                write!(f, "{abs}*{}", vars.join("*"))?;
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct PolyJson {
    n: usize,
    terms: Vec<PolyTermJson>,
}

#[derive(Serialize, Deserialize)]
struct PolyTermJson {
    exponents: Vec<u32>,
    coeff: String,
}

impl Serialize for MultiPoly {
    /// `{"n": int, "terms": [{"exponents": [...], "coeff": "p/q"}]}`, leading term first.
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PolyJson {
            n: self.n,
            terms: self
                .terms
                .iter()
                .rev()
                .map(|(m, c)| PolyTermJson { exponents: m.0.clone(), coeff: c.to_string() })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for MultiPoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = PolyJson::deserialize(d)?;
        let terms = raw
            .terms
            .into_iter()
            .map(|t| parse_rational(&t.coeff).map(|c| (t.exponents, c)))
            .collect::<Result<Vec<_>>>()
            .map_err(serde::de::Error::custom)?;
        MultiPoly::from_terms(raw.n, terms).map_err(serde::de::Error::custom)
    }
}

/// `∏_{i<j} (x_i - x_j)`.
pub fn vandermonde(n: usize) -> MultiPoly {
    let mut v = MultiPoly::one(n);
    for i in 0..n {
        for j in i + 1..n {
            let factor = MultiPoly::var(n, i).sub(&MultiPoly::var(n, j)).expect("same n");
            v = v.mul(&factor).expect("same n");
        }
    }
    v
}

/// Sum of all distinct permutations of `x^μ` in `n` variables (zero when
/// `length(μ) > n`).
pub fn monomial_symmetric(mu: &Partition, n: usize) -> MultiPoly {
    let mut out = MultiPoly::zero(n);
    if mu.length() > n {
        return out;
    }
    let mut e: Vec<u32> = mu.padded(n).into_iter().map(|p| p as u32).collect();
    // Iterate permutations of the multiset in increasing order.
    e.sort_unstable();
    loop {
        out.add_term(Monomial(e.clone()), Rational::one());
        if !next_permutation(&mut e) {
            break;
        }
    }
    out
}

fn next_permutation(v: &mut [u32]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Which basis a [`SymExpansion`] is written in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    Monomial,
    Jack,
}

/// A symmetric polynomial as a map from partitions to coefficients in the
/// monomial or Jack basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymExpansion {
    n: usize,
    basis: Basis,
    coeffs: BTreeMap<Partition, Rational>,
}

impl SymExpansion {
    pub fn new(n: usize, basis: Basis) -> Self {
        SymExpansion { n, basis, coeffs: BTreeMap::new() }
    }

    pub fn from_coeffs(
        n: usize,
        basis: Basis,
        coeffs: impl IntoIterator<Item = (Partition, Rational)>,
    ) -> Result<Self> {
        let mut out = SymExpansion::new(n, basis);
        for (p, c) in coeffs {
            if p.length() > n {
                return Err(domain!("partition {p} has more than {n} parts"));
            }
            out.add(p, c);
        }
        Ok(out)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn coeff(&self, p: &Partition) -> Rational {
        self.coeffs.get(p).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficients in graded order: by size, then lexicographically decreasing.
    pub fn iter_graded(&self) -> impl Iterator<Item = (&Partition, &Rational)> {
        let mut items: Vec<_> = self.coeffs.iter().collect();
        items.sort_by(|a, b| graded_cmp(a.0, b.0));
        items.into_iter()
    }

    pub(crate) fn add(&mut self, p: Partition, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(p.clone()).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&p);
        }
    }

    pub fn scale(&self, c: &Rational) -> SymExpansion {
        let mut out = SymExpansion::new(self.n, self.basis);
        for (p, v) in &self.coeffs {
            out.add(p.clone(), v * c);
        }
        out
    }

    /// Largest absolute coefficient difference against another expansion.
    pub fn max_abs_diff(&self, other: &SymExpansion) -> Rational {
        let mut keys: Vec<&Partition> = self.coeffs.keys().chain(other.coeffs.keys()).collect();
        keys.sort();
        keys.dedup();
        keys.into_iter().map(|p| (self.coeff(p) - other.coeff(p)).abs()).max().unwrap_or_else(Rational::zero)
    }

    /// Multiplies a monomial-basis expansion by `x_1 + … + x_n`.
    ///
    /// Raising one part `a` of `ν` to `a + 1` yields `m_ρ` with coefficient
    /// equal to the multiplicity of `a + 1` in `ρ`.
    pub fn mul_power_sum_one(&self) -> Result<SymExpansion> {
        if self.basis != Basis::Monomial {
            return Err(domain!("power-sum multiplication needs the monomial basis"));
        }
        let mut out = SymExpansion::new(self.n, Basis::Monomial);
        for (nu, c) in &self.coeffs {
            let mut seen = Vec::new();
            for row in 1..=nu.length() + 1 {
                if row > self.n {
                    break;
                }
                let value = nu.part(row);
                // rows sharing a value give the same ρ
                if seen.contains(&value) {
                    continue;
                }
                seen.push(value);
                let mut parts = nu.padded(nu.length().max(row));
                let first = parts.iter().position(|&p| p == value).expect("value occurs");
                parts[first] += 1;
                let rho = Partition::from_sorted(parts);
                let mult = rho.parts().iter().filter(|&&p| p == value + 1).count();
                out.add(rho, c * int(mult as i64));
            }
        }
        Ok(out)
    }

    /// Materializes a monomial-basis expansion as a polynomial.
    pub fn to_poly(&self) -> Result<MultiPoly> {
        if self.basis != Basis::Monomial {
            return Err(domain!("only monomial-basis expansions convert directly to polynomials"));
        }
        let mut out = MultiPoly::zero(self.n);
        for (p, c) in &self.coeffs {
            out = out.add(&monomial_symmetric(p, self.n).scale(c))?;
        }
        Ok(out)
    }
}

/// Graded order on partitions: smaller size first, then lexicographically decreasing.
pub fn graded_cmp(a: &Partition, b: &Partition) -> Ordering {
    a.size().cmp(&b.size()).then_with(|| b.parts().cmp(a.parts()))
}

/// Coefficients of a symmetric polynomial on the monomial-symmetric basis.
pub fn to_monomial_expansion(p: &MultiPoly) -> Result<SymExpansion> {
    if let Some((i, j)) = p.asymmetric_transposition() {
        return Err(domain!("polynomial is not symmetric under the transposition of x{i} and x{j}"));
    }
    let mut out = SymExpansion::new(p.n, Basis::Monomial);
    for (m, c) in &p.terms {
        if m.0.windows(2).all(|w| w[0] >= w[1]) {
            out.add(Partition::from_sorted(m.0.iter().map(|&e| e as usize).collect()), c.clone());
        }
    }
    Ok(out)
}

#[derive(Serialize, Deserialize)]
struct ExpansionJson {
    n: usize,
    basis: Basis,
    terms: Vec<ExpansionTermJson>,
}

#[derive(Serialize, Deserialize)]
struct ExpansionTermJson {
    partition: Vec<usize>,
    coeff: String,
}

impl Serialize for SymExpansion {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ExpansionJson {
            n: self.n,
            basis: self.basis,
            terms: self
                .iter_graded()
                .map(|(p, c)| ExpansionTermJson { partition: p.parts().to_vec(), coeff: c.to_string() })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for SymExpansion {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = ExpansionJson::deserialize(d)?;
        let coeffs = raw
            .terms
            .into_iter()
            .map(|t| Ok((Partition::new(t.partition)?, parse_rational(&t.coeff)?)))
            .collect::<Result<Vec<_>>>()
            .map_err(serde::de::Error::custom)?;
        SymExpansion::from_coeffs(raw.n, raw.basis, coeffs).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition;
    use crate::rational::ratio;

    fn int_vec(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&k| int(k)).collect()
    }

    fn x(n: usize, i: usize) -> MultiPoly {
        MultiPoly::var(n, i)
    }

    #[test]
    fn ring_arithmetic() {
        let a = x(2, 0).add(&x(2, 1)).unwrap();
        let b = x(2, 0).sub(&x(2, 1)).unwrap();
        let prod = a.mul(&b).unwrap();
        let expected = MultiPoly::from_terms(2, [(vec![2, 0], int(1)), (vec![0, 2], int(-1))]).unwrap();
        assert_eq!(prod, expected);
        assert_eq!(a.add(&MultiPoly::zero(2)).unwrap(), a);
        let zero = a.scale(&int(0));
        assert!(zero.is_zero());
        assert_eq!(zero.num_terms(), 0);
        assert!(matches!(a.add(&MultiPoly::zero(3)), Err(Error::Domain(_))));
    }

    #[test]
    fn vandermonde_small() {
        assert_eq!(vandermonde(1), MultiPoly::one(1));
        assert_eq!(vandermonde(2), x(2, 0).sub(&x(2, 1)).unwrap());
        let v3 = vandermonde(3);
        assert_eq!(v3.num_terms(), 6);
        let direct = x(3, 0)
            .sub(&x(3, 1))
            .unwrap()
            .mul(&x(3, 0).sub(&x(3, 2)).unwrap())
            .unwrap()
            .mul(&x(3, 1).sub(&x(3, 2)).unwrap())
            .unwrap();
        assert_eq!(v3, direct);
    }

    #[test]
    fn monomial_symmetric_examples() {
        assert_eq!(monomial_symmetric(&partition![1], 2), x(2, 0).add(&x(2, 1)).unwrap());
        let m21 = MultiPoly::from_terms(2, [(vec![2, 1], int(1)), (vec![1, 2], int(1))]).unwrap();
        assert_eq!(monomial_symmetric(&partition![2, 1], 2), m21);
        let m11 = MultiPoly::from_terms(3, [(vec![1, 1, 0], int(1)), (vec![1, 0, 1], int(1)), (vec![0, 1, 1], int(1))])
            .unwrap();
        assert_eq!(monomial_symmetric(&partition![1, 1], 3), m11);
        assert!(monomial_symmetric(&partition![1, 1, 1], 2).is_zero());
    }

    #[test]
    fn monomial_expansion_examples() {
        let p = MultiPoly::from_terms(2, [(vec![2, 0], int(1)), (vec![0, 2], int(1)), (vec![1, 1], int(1))]).unwrap();
        let e = to_monomial_expansion(&p).unwrap();
        assert_eq!(e.coeff(&partition![2]), int(1));
        assert_eq!(e.coeff(&partition![1, 1]), int(1));
        assert_eq!(e.len(), 2);
        assert!(to_monomial_expansion(&MultiPoly::zero(2)).unwrap().is_empty());
        let err = to_monomial_expansion(&x(2, 0).sub(&x(2, 1)).unwrap()).unwrap_err();
        assert!(err.to_string().contains("x1 and x2"), "{err}");
    }

    #[test]
    fn evaluation() {
        let s = x(2, 0).add(&x(2, 1)).unwrap();
        assert_eq!(s.evaluate(&int_vec(&[1, 1])).unwrap(), int(2));
        let a = ratio(3, 5);
        assert_eq!(vandermonde(2).evaluate(&[a.clone(), a]).unwrap(), int(0));
        let m = MultiPoly::monomial(vec![2, 1], int(1));
        assert_eq!(m.evaluate(&int_vec(&[2, 3])).unwrap(), int(12));
        assert!((m.evaluate_f64(&[2.0, 3.0]).unwrap() - 12.0).abs() < 1e-15);
        assert!(m.evaluate(&int_vec(&[1])).is_err());
    }

    #[test]
    fn shifting() {
        let p = MultiPoly::monomial(vec![1, 1], int(1));
        let expected = MultiPoly::from_terms(
            2,
            [(vec![1, 1], int(1)), (vec![1, 0], int(1)), (vec![0, 1], int(1)), (vec![0, 0], int(1))],
        )
        .unwrap();
        assert_eq!(p.shift_all(&int(1)), expected);
        let c = MultiPoly::constant(2, ratio(7, 3));
        assert_eq!(c.shift_all(&int(5)), c);
        let q = x(1, 0).sub(&MultiPoly::one(1)).unwrap();
        assert_eq!(q.shift_all(&int(1)), x(1, 0));
    }

    #[test]
    fn exact_division() {
        let v = vandermonde(3);
        let s = monomial_symmetric(&partition![2, 1], 3);
        let prod = v.mul(&s).unwrap();
        assert_eq!(prod.divide_exact(&v).unwrap(), s);
        let bad = prod.add(&MultiPoly::one(3)).unwrap();
        assert!(matches!(bad.divide_exact(&v), Err(Error::Consistency(_))));
    }

    #[test]
    fn expansion_json_shape() {
        let e = SymExpansion::from_coeffs(
            2,
            Basis::Monomial,
            [(partition![1, 1], ratio(1, 2)), (partition![2], int(3)), (Partition::empty(), int(1))],
        )
        .unwrap();
        let text = serde_json::to_string(&e).unwrap();
        assert_eq!(
            text,
            r#"{"n":2,"basis":"monomial","terms":[{"partition":[],"coeff":"1"},{"partition":[2],"coeff":"3"},{"partition":[1,1],"coeff":"1/2"}]}"#
        );
        let back: SymExpansion = serde_json::from_str(&text).unwrap();
        assert_eq!(back, e);
        assert!(serde_json::from_str::<SymExpansion>(
            r#"{"n":1,"basis":"jack","terms":[{"partition":[1,1],"coeff":"1"}]}"#
        )
        .is_err());
    }

    #[test]
    fn power_sum_product_matches_polynomial() {
        let e = SymExpansion::from_coeffs(
            3,
            Basis::Monomial,
            [(partition![2, 1], int(2)), (partition![1, 1], ratio(1, 3)), (Partition::empty(), int(-1))],
        )
        .unwrap();
        let p1 = monomial_symmetric(&partition![1], 3);
        let direct = to_monomial_expansion(&e.to_poly().unwrap().mul(&p1).unwrap()).unwrap();
        assert_eq!(e.mul_power_sum_one().unwrap(), direct);
    }

    #[test]
    fn display_form() {
        let p =
            MultiPoly::from_terms(2, [(vec![2, 1], int(1)), (vec![0, 1], ratio(-1, 2)), (vec![0, 0], int(3))]).unwrap();
        assert_eq!(p.to_string(), "x1^2*x2 - 1/2*x2 + 3");
        assert_eq!(MultiPoly::zero(3).to_string(), "0");
    }
}
