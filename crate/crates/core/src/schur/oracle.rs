//! Brute-force tableau enumeration, kept independent of the Weyl product
//! formula so it can serve as a test oracle.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{bail, Result};
use crate::weights::Partition;

/// Largest shape [`ssyt_count`] will enumerate.
pub const MAX_BOXES: u32 = 12;
/// Largest alphabet [`ssyt_count`] will enumerate.
pub const MAX_LETTERS: usize = 6;

/// Number of semistandard Young tableaux of shape `lambda` with entries in
/// `1..=n`, by filling cells one at a time.
pub fn ssyt_count(lambda: &Partition, n: usize) -> Result<BigUint> {
    guard(lambda, n)?;
    let mut count = 0u64;
    fill(lambda, n, &mut |_| count += 1);
    Ok(BigUint::from(count))
}

/// The character of `S_λ(k^n)` as a map from content vectors (how many times
/// each letter occurs) to the number of tableaux with that content.
pub fn ssyt_contents(lambda: &Partition, n: usize) -> Result<BTreeMap<Vec<u32>, u64>> {
    guard(lambda, n)?;
    let mut out = BTreeMap::new();
    fill(lambda, n, &mut |t: &[Vec<u32>]| {
        let mut content = vec![0u32; n];
        for row in t {
            for &x in row {
                content[x as usize - 1] += 1;
            }
        }
        *out.entry(content).or_insert(0) += 1;
    });
    Ok(out)
}

/// Number of tableaux, counted by peeling off the horizontal strip that
/// holds the largest letter (equivalently, Gelfand–Tsetlin patterns), with
/// memoization. No size guard.
pub fn ssyt_count_branching(lambda: &Partition, n: usize) -> BigUint {
    let mut memo = HashMap::new();
    branch(lambda.parts(), n, &mut memo)
}

fn branch(lambda: &[u32], n: usize, memo: &mut HashMap<(Vec<u32>, usize), BigUint>) -> BigUint {
    if lambda.len() > n {
        return BigUint::zero();
    }
    if lambda.is_empty() {
        return BigUint::one();
    }
    if n == 0 {
        return BigUint::zero();
    }
    let key = (lambda.to_vec(), n);
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    // interlacing: lambda_{i+1} <= mu_i <= lambda_i, mu has at most n-1 rows
    let mut total = BigUint::zero();
    let mut mu = vec![0u32; lambda.len()];
    fn go(
        lambda: &[u32],
        i: usize,
        n: usize,
        mu: &mut Vec<u32>,
        total: &mut BigUint,
        memo: &mut HashMap<(Vec<u32>, usize), BigUint>,
    ) {
        if i == lambda.len() {
            let mut trimmed = mu.clone();
            while trimmed.last() == Some(&0) {
                trimmed.pop();
            }
            *total += branch(&trimmed, n - 1, memo);
            return;
        }
        let lo = lambda.get(i + 1).copied().unwrap_or(0);
        for v in lo..=lambda[i] {
            mu[i] = v;
            go(lambda, i + 1, n, mu, total, memo);
        }
    }
    go(lambda, 0, n, &mut mu, &mut total, memo);
    memo.insert(key, total.clone());
    total
}

fn guard(lambda: &Partition, n: usize) -> Result<()> {
    if lambda.size() > MAX_BOXES || n > MAX_LETTERS {
        bail!(
            ResourceLimit,
            "tableau enumeration limited to |λ| <= {MAX_BOXES}, n <= {MAX_LETTERS}; got |λ| = {}, n = {n}",
            lambda.size()
        );
    }
    Ok(())
}

fn fill(lambda: &Partition, n: usize, visit: &mut dyn FnMut(&[Vec<u32>])) {
    if lambda.len() > n {
        return;
    }
    let mut t: Vec<Vec<u32>> = lambda
        .parts()
        .iter()
        .map(|&l| vec![0; l as usize])
        .collect();
    let cells: Vec<(usize, usize)> = lambda
        .parts()
        .iter()
        .enumerate()
        .flat_map(|(r, &l)| (0..l as usize).map(move |c| (r, c)))
        .collect();
    fn go(
        k: usize,
        cells: &[(usize, usize)],
        t: &mut Vec<Vec<u32>>,
        n: u32,
        visit: &mut dyn FnMut(&[Vec<u32>]),
    ) {
        if k == cells.len() {
            visit(t);
            return;
        }
        let (r, c) = cells[k];
        let mut lo = 1;
        if c > 0 {
            lo = lo.max(t[r][c - 1]);
        }
        if r > 0 {
            lo = lo.max(t[r - 1][c] + 1);
        }
        for x in lo..=n {
            t[r][c] = x;
            go(k + 1, cells, t, n, visit);
        }
    }
    go(0, &cells, &mut t, n as u32, visit);
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(ssyt_count(&p(&[1]), 4).unwrap(), BigUint::from(4u32));
        assert_eq!(ssyt_count(&p(&[1, 1]), 3).unwrap(), BigUint::from(3u32));
        assert_eq!(ssyt_count(&p(&[2, 1]), 3).unwrap(), BigUint::from(8u32));
        assert_eq!(ssyt_count(&p(&[3]), 3).unwrap(), BigUint::from(10u32));
        assert_eq!(ssyt_count(&p(&[]), 3).unwrap(), BigUint::from(1u32));
        assert_eq!(ssyt_count(&p(&[1, 1, 1]), 2).unwrap(), BigUint::zero());
    }

    #[test]
    fn guard_is_enforced() {
        assert!(ssyt_count(&p(&[13]), 2).is_err());
        assert!(ssyt_count(&p(&[1]), 7).is_err());
    }

    #[test]
    fn contents_sum_to_count() {
        let c = ssyt_contents(&p(&[2, 1]), 3).unwrap();
        assert_eq!(c.values().sum::<u64>(), 8);
        assert_eq!(c[&vec![1, 1, 1]], 2);
    }

    #[test]
    fn branching_agrees_with_enumeration() {
        for n in 1..=5 {
            for lam in [
                p(&[]),
                p(&[3]),
                p(&[2, 2]),
                p(&[4, 2, 1]),
                p(&[3, 3, 3]),
                p(&[2, 1, 1, 1]),
            ] {
                assert_eq!(ssyt_count_branching(&lam, n), ssyt_count(&lam, n).unwrap());
            }
        }
    }
}
