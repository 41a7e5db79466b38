//! Schur-functor combinatorics: Pieri rules and Weyl dimensions.
//!
//! Every tensor decomposition needed downstream is a Pieri rule applied
//! once or iterated, so there is no Littlewood–Richardson engine here.
//! Partitions that need more rows than there are variables contribute
//! nothing (their Schur functor has rank zero).

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{bail, Result};
use crate::weights::Partition;

pub mod oracle;

/// A formal sum of Schur functors with positive multiplicities.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SchurSum {
    terms: BTreeMap<Partition, u64>,
}

impl SchurSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn single(p: Partition) -> Self {
        let mut s = Self::new();
        s.add(p, 1);
        s
    }

    pub fn add(&mut self, p: Partition, mult: u64) {
        if mult > 0 {
            *self.terms.entry(p).or_insert(0) += mult;
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, u64)> {
        self.terms.iter().map(|(p, &m)| (p, m))
    }

    pub fn multiplicity(&self, p: &Partition) -> u64 {
        self.terms.get(p).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// `Σ mult · dim S_λ(k^n)`.
    pub fn dimension(&self, n: usize) -> BigUint {
        self.terms
            .iter()
            .map(|(p, &m)| partition_dimension(p, n) * BigUint::from(m))
            .sum()
    }

    /// Applies [`pieri_row`] to every term.
    pub fn times_sym(&self, m: u32, rows: usize) -> SchurSum {
        let mut out = SchurSum::new();
        for (p, mult) in self.terms() {
            for (q, k) in pieri_row(p, m, rows).terms() {
                out.add(q.clone(), mult * k);
            }
        }
        out
    }

    /// Applies [`pieri_col`] to every term.
    pub fn times_wedge(&self, j: usize, rows: usize) -> SchurSum {
        let mut out = SchurSum::new();
        for (p, mult) in self.terms() {
            for (q, k) in pieri_col(p, j, rows).terms() {
                out.add(q.clone(), mult * k);
            }
        }
        out
    }
}

impl FromIterator<Partition> for SchurSum {
    fn from_iter<I: IntoIterator<Item = Partition>>(iter: I) -> Self {
        let mut s = SchurSum::new();
        for p in iter {
            s.add(p, 1);
        }
        s
    }
}

/// `S_λ ⊗ Sym^m`: all `μ ⊇ λ` with `μ/λ` a horizontal strip of size `m`
/// and at most `rows` parts.
pub fn pieri_row(lambda: &Partition, m: u32, rows: usize) -> SchurSum {
    let mut out = SchurSum::new();
    if lambda.len() > rows {
        return out;
    }
    let mut mu = vec![0u32; rows];
    fn go(lambda: &Partition, i: usize, rem: u32, mu: &mut Vec<u32>, out: &mut SchurSum) {
        if i == mu.len() {
            if rem == 0 {
                out.add(Partition::new(mu.clone()).expect("strip keeps order"), 1);
            }
            return;
        }
        let lo = lambda.part(i);
        let hi = if i == 0 {
            lo + rem
        } else {
            lambda.part(i - 1).min(lo + rem)
        };
        for v in lo..=hi {
            mu[i] = v;
            go(lambda, i + 1, rem - (v - lo), mu, out);
        }
    }
    go(lambda, 0, m, &mut mu, &mut out);
    out
}

/// `S_λ ⊗ Λ^j`: all `μ ⊇ λ` with `μ/λ` a vertical strip of size `j` and at
/// most `rows` parts.
pub fn pieri_col(lambda: &Partition, j: usize, rows: usize) -> SchurSum {
    let mut out = SchurSum::new();
    if lambda.len() > rows || j > rows {
        return out;
    }
    let mut mu: Vec<u32> = (0..rows).map(|i| lambda.part(i)).collect();
    fn go(i: usize, rem: usize, mu: &mut Vec<u32>, out: &mut SchurSum) {
        if rem == 0 {
            out.add(Partition::new(mu.clone()).expect("strip keeps order"), 1);
            return;
        }
        if i == mu.len() || mu.len() - i < rem {
            return;
        }
        if i == 0 || mu[i - 1] > mu[i] {
            mu[i] += 1;
            go(i + 1, rem - 1, mu, out);
            mu[i] -= 1;
        }
        go(i + 1, rem, mu, out);
    }
    go(0, j, &mut mu, &mut out);
    out
}

/// Dimension of the irreducible `GL_n`-module with highest weight `lambda`,
/// by the Weyl product `Π_{i<j} (λ_i − λ_j + j − i)/(j − i)`.
///
/// Short vectors are padded with zeros. Integer vectors of any sign are
/// accepted (determinant twists do not change the dimension). A vector
/// longer than `n` is a partition with too many rows and has dimension
/// zero unless the surplus entries are all zero.
pub fn weyl_dimension(lambda: &[i64], n: usize) -> Result<BigUint> {
    if n == 0 {
        bail!(InvalidArgument, "weyl_dimension needs n >= 1");
    }
    if lambda.windows(2).any(|w| w[0] < w[1]) {
        bail!(
            InvalidArgument,
            "weight {lambda:?} is not weakly decreasing"
        );
    }
    let mut v = lambda.to_vec();
    if v.len() > n {
        if v[n..].iter().all(|&x| x == 0) {
            v.truncate(n);
        } else if v[n..].iter().all(|&x| x >= 0) {
            return Ok(BigUint::zero());
        } else {
            bail!(
                InvalidArgument,
                "weight {lambda:?} has length {} > n = {n}",
                lambda.len()
            );
        }
    }
    if v.len() < n {
        if v.last().is_some_and(|&x| x < 0) {
            bail!(
                InvalidArgument,
                "cannot pad {lambda:?} with zeros: it would not be weakly decreasing"
            );
        }
        v.resize(n, 0);
    }
    let mut num = Product::default();
    let mut den = Product::default();
    for i in 0..n {
        for j in i + 1..n {
            num.mul((v[i] - v[j]) as u64 + (j - i) as u64);
            den.mul((j - i) as u64);
        }
    }
    Ok(num.finish() / den.finish())
}

/// Weyl dimension of a partition in `n` variables; zero if it has more than `n` rows.
pub fn partition_dimension(p: &Partition, n: usize) -> BigUint {
    match p.padded(n) {
        Some(v) if n > 0 => weyl_dimension(&v, n).expect("padded partition is valid"),
        _ => BigUint::zero(),
    }
}

/// Exact product of small factors, staying in `u128` until it would overflow.
struct Product {
    small: u128,
    big: Option<BigUint>,
}

impl Default for Product {
    fn default() -> Self {
        Self {
            small: 1,
            big: None,
        }
    }
}

impl Product {
    fn mul(&mut self, x: u64) {
        match self.small.checked_mul(x as u128) {
            Some(p) => self.small = p,
            None => {
                let big = self.big.take().unwrap_or_else(BigUint::one);
                self.big = Some(big * BigUint::from(self.small));
                self.small = x as u128;
            }
        }
    }

    fn finish(self) -> BigUint {
        let small = BigUint::from(self.small);
        match self.big {
            Some(b) => b * small,
            None => small,
        }
    }
}
