//! Oracles that share no code path with the library's constructions.

#![allow(dead_code)]

use jackpoly::partitions::Partition;
use jackpoly::poly::{vandermonde, MultiPoly};
use jackpoly::rational::{int, Rational};
use num::{One, Zero};

/// All permutations of `0..n` with their signs.
pub fn permutations(n: usize) -> Vec<(Vec<usize>, i64)> {
    fn go(prefix: &mut Vec<usize>, used: &mut Vec<bool>, sign: i64, out: &mut Vec<(Vec<usize>, i64)>) {
        let n = used.len();
        if prefix.len() == n {
            out.push((prefix.clone(), sign));
            return;
        }
        // Placing the k-th smallest unused value contributes k inversions.
        let mut k = 0;
        for v in 0..n {
            if used[v] {
                continue;
            }
            used[v] = true;
            prefix.push(v);
            go(prefix, used, if k % 2 == 0 { sign } else { -sign }, out);
            prefix.pop();
            used[v] = false;
            k += 1;
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], 1, &mut out);
    out
}

/// Schur polynomial as `det(x_i^{λ_j + n - j}) / V(x)`.
pub fn schur_bialternant(lambda: &Partition, n: usize) -> MultiPoly {
    let exps: Vec<u32> = lambda.padded(n).iter().enumerate().map(|(j, &l)| (l + n - 1 - j) as u32).collect();
    let mut alt = MultiPoly::zero(n);
    for (perm, sign) in permutations(n) {
        let mut e = vec![0u32; n];
        for (i, &j) in perm.iter().enumerate() {
            e[i] = exps[j];
        }
        alt = alt.add(&MultiPoly::monomial(e, int(sign))).unwrap();
    }
    alt.divide_exact(&vandermonde(n)).unwrap()
}

fn det(m: &[Vec<Rational>]) -> Rational {
    let n = m.len();
    let mut acc = Rational::zero();
    for (perm, sign) in permutations(n) {
        let mut term = int(sign);
        for (i, &j) in perm.iter().enumerate() {
            term *= &m[i][j];
        }
        acc += term;
    }
    acc
}

fn falling(x: &Rational, k: usize) -> Rational {
    (0..k).fold(Rational::one(), |acc, j| acc * (x - int(j as i64)))
}

/// Shifted Schur function at a point, from the ratio of determinants
/// `det[(x_i + n - i)↓(μ_j + n - j)] / det[(x_i + n - i)↓(n - j)]`.
pub fn shifted_schur_at(mu: &Partition, point: &[Rational]) -> Rational {
    let n = point.len();
    let mu = mu.padded(n);
    let shifted: Vec<Rational> = point.iter().enumerate().map(|(i, x)| x + int((n - 1 - i) as i64)).collect();
    let num: Vec<Vec<Rational>> =
        shifted.iter().map(|y| (0..n).map(|j| falling(y, mu[j] + n - 1 - j)).collect()).collect();
    let den: Vec<Vec<Rational>> = shifted.iter().map(|y| (0..n).map(|j| falling(y, n - 1 - j)).collect()).collect();
    det(&num) / det(&den)
}

/// Number of standard tableaux of shape `λ/μ`, by removing corners.
pub fn count_syt(lambda: &[usize], mu: &[usize]) -> u64 {
    if mu.len() > lambda.len() || mu.iter().zip(lambda).any(|(m, l)| m > l) {
        return 0;
    }
    let size: usize = lambda.iter().sum::<usize>() - mu.iter().sum::<usize>();
    if size == 0 {
        return 1;
    }
    let inner = |i: usize| mu.get(i).copied().unwrap_or(0);
    let mut total = 0;
    for i in 0..lambda.len() {
        let is_corner = lambda[i] > inner(i) && lambda.get(i + 1).is_none_or(|&next| next < lambda[i]);
        if is_corner {
            let mut smaller = lambda.to_vec();
            smaller[i] -= 1;
            total += count_syt(&smaller, mu);
        }
    }
    total
}

pub fn small_partitions(max_size: usize, max_len: usize) -> Vec<Partition> {
    jackpoly::partitions::partitions_of_size_at_most(max_size, max_len).collect()
}

/// Solves `A c = b` exactly by Gaussian elimination; `None` if `A` is singular.
pub fn solve(mut a: Vec<Vec<Rational>>, mut b: Vec<Rational>) -> Option<Vec<Rational>> {
    let n = b.len();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        b.swap(col, pivot);
        let pivot_row = a[col].clone();
        let pivot_b = b[col].clone();
        for (r, (row, rhs)) in a.iter_mut().zip(b.iter_mut()).enumerate() {
            if r == col || row[col].is_zero() {
                continue;
            }
            let f = &row[col] / &pivot_row[col];
            for (x, p) in row.iter_mut().zip(&pivot_row).skip(col) {
                *x -= &f * p;
            }
            *rhs -= &f * &pivot_b;
        }
    }
    Some(b.iter().zip(&a).enumerate().map(|(i, (v, row))| v / &row[i]).collect())
}
