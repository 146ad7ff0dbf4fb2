//! Partitions, Young diagrams, box statistics and the enumerators built on them.
//!
//! Squares are addressed 1-based as `(row, col)`. All enumerators are lazy
//! iterators with a documented, deterministic order.

use std::fmt;
use std::str::FromStr;

use num::One;
use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::rational::{int, Rational};

/// A weakly decreasing sequence of positive integers (trailing zeros are
/// never stored, so equality is structural).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

/// A box `(row, col)` of a diagram, both 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Square {
    pub row: usize,
    pub col: usize,
}

impl Square {
    pub fn new(row: usize, col: usize) -> Self {
        Square { row, col }
    }
}

impl Partition {
    /// Validates that `parts` is weakly decreasing; trailing zeros are dropped.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(domain!("parts must be weakly decreasing, got {parts:?}"));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Caller guarantees the parts are weakly decreasing.
    pub(crate) fn from_sorted(mut parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn length(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The `i`-th part, 1-based; zero past the length.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    /// Parts padded with zeros (or truncated) to exactly `len` entries.
    pub fn padded(&self, len: usize) -> Vec<usize> {
        (1..=len).map(|i| self.part(i)).collect()
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.part(1);
        Partition((1..=first).map(|j| self.0.iter().filter(|&&p| p >= j).count()).collect())
    }

    pub fn has_square(&self, s: Square) -> bool {
        s.row >= 1 && s.col >= 1 && s.col <= self.part(s.row)
    }

    /// Squares in reading order (row by row, left to right).
    pub fn squares(&self) -> impl Iterator<Item = Square> + '_ {
        self.0.iter().enumerate().flat_map(|(i, &len)| (1..=len).map(move |j| Square::new(i + 1, j)))
    }

    fn check_square(&self, s: Square) -> Result<()> {
        if self.has_square(s) {
            Ok(())
        } else {
            Err(domain!("square ({},{}) is not in the diagram of {self}", s.row, s.col))
        }
    }

    pub fn arm(&self, s: Square) -> Result<usize> {
        self.check_square(s)?;
        Ok(self.part(s.row) - s.col)
    }

    pub fn leg(&self, s: Square) -> Result<usize> {
        self.check_square(s)?;
        Ok(self.column_height(s.col) - s.row)
    }

    pub fn coarm(&self, s: Square) -> Result<usize> {
        self.check_square(s)?;
        Ok(s.col - 1)
    }

    pub fn coleg(&self, s: Square) -> Result<usize> {
        self.check_square(s)?;
        Ok(s.row - 1)
    }

    /// Length of column `col` (the conjugate part).
    pub fn column_height(&self, col: usize) -> usize {
        self.0.iter().take_while(|&&p| p >= col).count()
    }

    /// True iff every part of `other` is at most the matching part of `self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.length() <= self.length() && other.0.iter().zip(&self.0).all(|(m, l)| m <= l)
    }

    /// Dominance order: `self ≥ other` for partitions of equal size.
    pub fn dominates(&self, other: &Partition) -> bool {
        if self.size() != other.size() {
            return false;
        }
        let len = self.length().max(other.length());
        let (mut a, mut b) = (0, 0);
        for i in 1..=len {
            a += self.part(i);
            b += other.part(i);
            if a < b {
                return false;
            }
        }
        true
    }

    /// True iff `self / inner` is a horizontal strip (at most one box per column).
    pub fn is_horizontal_strip_over(&self, inner: &Partition) -> bool {
        self.contains(inner) && (1..=self.length()).all(|i| inner.part(i) >= self.part(i + 1))
    }

    /// The partition with one box added to row `row` (1-based), if valid.
    pub fn add_box(&self, row: usize) -> Option<Partition> {
        if row == 0 || row > self.length() + 1 {
            return None;
        }
        if row > 1 && self.part(row) + 1 > self.part(row - 1) {
            return None;
        }
        let mut parts = self.padded(self.length().max(row));
        parts[row - 1] += 1;
        Some(Partition(parts))
    }

    /// The partition with a corner box of row `row` removed, if that box is a corner.
    pub fn remove_box(&self, row: usize) -> Option<Partition> {
        if row == 0 || row > self.length() || self.part(row + 1) == self.part(row) {
            return None;
        }
        let mut parts = self.0.clone();
        parts[row - 1] -= 1;
        Some(Partition::from_sorted(parts))
    }

    /// All partitions obtained by adding one box.
    pub fn add_one_box(&self) -> Vec<Partition> {
        (1..=self.length() + 1).filter_map(|r| self.add_box(r)).collect()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("0");
        }
        let text: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        f.write_str(&text.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// `"3,1,1"`; the empty partition is `"0"` or `""`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|p| p.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad partition part {p:?} in {s:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts).map_err(|e| Error::Parse(e.to_string()))
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

/// Shorthand for tests and literals; panics on an invalid sequence.
#[macro_export]
macro_rules! partition {
    () => { $crate::partitions::Partition::empty() };
    ($($p:expr),+ $(,)?) => {
        $crate::partitions::Partition::new(vec![$($p),+]).expect("valid partition literal")
    };
}

/// Lower hook product `∏ (a(s) + θ l(s) + 1)`.
pub fn hook_h(mu: &Partition, theta: &Rational) -> Rational {
    hook_product(mu, theta, &Rational::one())
}

/// Upper hook product `∏ (a(s) + θ l(s) + θ)`.
pub fn hook_hprime(mu: &Partition, theta: &Rational) -> Rational {
    hook_product(mu, theta, theta)
}

fn hook_product(mu: &Partition, theta: &Rational, shift: &Rational) -> Rational {
    let conj = mu.conjugate();
    mu.squares().fold(Rational::one(), |acc, s| {
        let arm = mu.part(s.row) - s.col;
        let leg = conj.part(s.col) - s.row;
        acc * (int(arm as i64) + theta * int(leg as i64) + shift)
    })
}

/// Generalized shifted factorial `(t)_μ = ∏ (t + a'(s) - θ l'(s))`.
pub fn pochhammer_mu(t: &Rational, mu: &Partition, theta: &Rational) -> Rational {
    mu.squares().fold(Rational::one(), |acc, s| acc * (t + int(s.col as i64 - 1) - theta * int(s.row as i64 - 1)))
}

/// True iff `mu ⊆ lambda`.
pub fn contains(lambda: &Partition, mu: &Partition) -> bool {
    lambda.contains(mu)
}

/// All `ν ≺ λ` in `n` variables: `λ_1 ≥ ν_1 ≥ λ_2 ≥ … ≥ ν_{n-1} ≥ λ_n`,
/// in lexicographically decreasing order.
pub fn interlacings(lambda: &Partition, n: usize) -> Result<Interlacings> {
    if n == 0 || lambda.length() > n {
        return Err(domain!("partition {lambda} has more than n = {n} parts"));
    }
    let upper: Vec<usize> = (1..n).map(|i| lambda.part(i)).collect();
    let lower: Vec<usize> = (1..n).map(|i| lambda.part(i + 1)).collect();
    Ok(Interlacings { current: Some(upper.clone()), upper, lower })
}

pub struct Interlacings {
    upper: Vec<usize>,
    lower: Vec<usize>,
    current: Option<Vec<usize>>,
}

impl Iterator for Interlacings {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let current = self.current.take()?;
        let out = Partition::from_sorted(current.clone());
        let mut next = current;
        let mut k = next.len();
        loop {
            if k == 0 {
                break;
            }
            k -= 1;
            if next[k] > self.lower[k] {
                next[k] -= 1;
                let len = next.len();
                next[k + 1..].copy_from_slice(&self.upper[k + 1..len]);
                self.current = Some(next);
                break;
            }
        }
        Some(out)
    }
}

/// A filling of a diagram with entries weakly decreasing along rows and
/// strictly decreasing down columns.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ReverseTableau {
    shape: Partition,
    rows: Vec<Vec<usize>>,
}

impl ReverseTableau {
    /// Builds a tableau from its rows, checking the ordering rules.
    pub fn from_rows(rows: Vec<Vec<usize>>) -> Result<Self> {
        let shape = Partition::new(rows.iter().map(Vec::len).collect())?;
        for (i, row) in rows.iter().enumerate() {
            if row.contains(&0) {
                return Err(domain!("tableau entries must be positive"));
            }
            if row.windows(2).any(|w| w[0] < w[1]) {
                return Err(domain!("row {} is not weakly decreasing", i + 1));
            }
            if i > 0 && row.iter().zip(&rows[i - 1]).any(|(below, above)| below >= above) {
                return Err(domain!("column entries must strictly decrease at row {}", i + 1));
            }
        }
        Ok(ReverseTableau { shape, rows })
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn entry(&self, s: Square) -> Option<usize> {
        self.rows.get(s.row.checked_sub(1)?)?.get(s.col.checked_sub(1)?).copied()
    }

    /// Number of squares holding each value `1..=n` (index 0 is value 1).
    pub fn content(&self, n: usize) -> Vec<usize> {
        let mut counts = vec![0; n];
        for &e in self.rows.iter().flatten() {
            if e <= n {
                counts[e - 1] += 1;
            }
        }
        counts
    }

    /// The shapes `S_i = {s : T(s) ≥ i}` for `i = 1..=n+1`; consecutive shapes
    /// differ by horizontal strips and `S_{n+1}` is empty.
    pub fn shape_chain(&self, n: usize) -> Vec<Partition> {
        (1..=n + 1)
            .map(|i| {
                Partition::from_sorted(
                    self.rows.iter().map(|row| row.iter().take_while(|&&e| e >= i).count()).collect(),
                )
            })
            .collect()
    }
}

/// All reverse tableaux of shape `mu` with entries in `1..=n`, in
/// lexicographically decreasing order of the reading word. Empty iff
/// `length(mu) > n`.
pub fn reverse_tableaux(mu: &Partition, n: usize) -> ReverseTableaux {
    let cells: Vec<Square> = mu.squares().collect();
    let min_entry = cells.iter().map(|s| mu.column_height(s.col) - s.row + 1).collect();
    let mut it = ReverseTableaux { shape: mu.clone(), n, cells, min_entry, values: Vec::new(), done: false };
    if mu.length() > n {
        it.done = true;
    } else {
        it.fill_from(0);
    }
    it
}

pub struct ReverseTableaux {
    shape: Partition,
    n: usize,
    cells: Vec<Square>,
    min_entry: Vec<usize>,
    values: Vec<usize>,
    done: bool,
}

impl ReverseTableaux {
    fn index_of(&self, s: Square) -> usize {
        (1..s.row).map(|r| self.shape.part(r)).sum::<usize>() + s.col - 1
    }

    fn max_entry(&self, k: usize) -> usize {
        let s = self.cells[k];
        let mut bound = self.n;
        if s.col > 1 {
            bound = bound.min(self.values[k - 1]);
        }
        if s.row > 1 {
            bound = bound.min(self.values[self.index_of(Square::new(s.row - 1, s.col))] - 1);
        }
        bound
    }

    fn fill_from(&mut self, start: usize) {
        self.values.truncate(start);
        for k in start..self.cells.len() {
            let v = self.max_entry(k);
            self.values.push(v);
        }
    }

    fn current(&self) -> ReverseTableau {
        let mut rows = Vec::with_capacity(self.shape.length());
        let mut it = self.values.iter();
        for &len in self.shape.parts() {
            rows.push(it.by_ref().take(len).copied().collect());
        }
        ReverseTableau { shape: self.shape.clone(), rows }
    }
}

impl Iterator for ReverseTableaux {
    type Item = ReverseTableau;

    fn next(&mut self) -> Option<ReverseTableau> {
        if self.done {
            return None;
        }
        let out = self.current();
        match (0..self.values.len()).rev().find(|&k| self.values[k] > self.min_entry[k]) {
            Some(k) => {
                self.values[k] -= 1;
                self.fill_from(k + 1);
            }
            None => self.done = true,
        }
        Some(out)
    }
}

/// Partitions of exactly `size` with at most `max_length` parts, in
/// lexicographically decreasing order.
pub fn partitions_of(size: usize, max_length: usize) -> PartitionsOf {
    let first = if size == 0 {
        Some(Vec::new())
    } else if max_length == 0 {
        None
    } else {
        Some(vec![size])
    };
    PartitionsOf { max_length, current: first }
}

pub struct PartitionsOf {
    max_length: usize,
    current: Option<Vec<usize>>,
}

impl Iterator for PartitionsOf {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let current = self.current.take()?;
        let out = Partition(current.clone());
        // Rightmost part > 1 that can be lowered by one with the remainder
        // refilled by parts no larger than it, within the length cap.
        let mut tail: usize = 0;
        for i in (0..current.len()).rev() {
            let p = current[i];
            if p > 1 {
                let cap = p - 1;
                let remainder = tail + 1;
                let needed = remainder.div_ceil(cap);
                if i + 1 + needed <= self.max_length {
                    let mut next = current[..i].to_vec();
                    next.push(cap);
                    let mut left = remainder;
                    while left > 0 {
                        let take = left.min(cap);
                        next.push(take);
                        left -= take;
                    }
                    self.current = Some(next);
                    break;
                }
            }
            tail += p;
        }
        Some(out)
    }
}

/// All partitions with `|μ| ≤ k` and at most `max_length` parts, by size and
/// then lexicographically decreasing within a size.
pub fn partitions_of_size_at_most(k: usize, max_length: usize) -> impl Iterator<Item = Partition> {
    (0..=k).flat_map(move |size| partitions_of(size, max_length))
}
