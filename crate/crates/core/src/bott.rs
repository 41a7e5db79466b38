//! Bott's algorithm on GL partial flag varieties.
//!
//! For a Levi-dominant weight `α` on `F(d_1, .., d_t; n)` put `v = α + ρ`.
//! If `v` has a repeated entry every cohomology group vanishes. Otherwise
//! exactly one group is non-zero: `H^i` with `i` the number of inversions of
//! `v` (for the decreasing order), and it is the irreducible `GL_n`-module
//! with highest weight `sort(v) − ρ`.
//!
//! Conventions: `(k, 0, .., 0)` on `P^n = F(1; n+1)` is `O(k)`, so
//! `H^0(O(k))` has dimension `C(n+k, n)`; `H^0(L_α) ≠ 0` iff `α` is globally
//! non-increasing.

use std::ops::ControlFlow;

use num_bigint::BigUint;
use num_traits::Zero;
use serde::Serialize;

use crate::error::{bail, Result};
use crate::schur::weyl_dimension;
use crate::weights::{count_ascents, is_singular, rho, sort_descending, FlagShape, LeviWeight};

/// The cohomology of one homogeneous bundle: zero, or a single non-zero degree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CohomologyResult {
    Zero,
    NonZero {
        degree: usize,
        dominant_weight: Vec<i64>,
        #[serde(serialize_with = "crate::serialize_biguint")]
        dimension: BigUint,
    },
}

impl CohomologyResult {
    pub fn is_zero(&self) -> bool {
        matches!(self, Self::Zero)
    }

    pub fn degree(&self) -> Option<usize> {
        match self {
            Self::Zero => None,
            Self::NonZero { degree, .. } => Some(*degree),
        }
    }

    /// `dim H^i`.
    pub fn dimension_in(&self, i: usize) -> BigUint {
        match self {
            Self::NonZero {
                degree, dimension, ..
            } if *degree == i => dimension.clone(),
            _ => BigUint::zero(),
        }
    }

    /// Whether `H^i ≠ 0`.
    pub fn nonzero_in(&self, i: usize) -> bool {
        self.degree() == Some(i)
    }
}

/// Cohomology of the homogeneous bundle named by `alpha`.
pub fn cohomology(alpha: &LeviWeight) -> CohomologyResult {
    let n = alpha.shape().n();
    let rho = rho(n).expect("shape has n >= 2");
    let v: Vec<i64> = alpha
        .entries()
        .iter()
        .zip(&rho)
        .map(|(a, r)| a + r)
        .collect();
    if is_singular(&v) {
        return CohomologyResult::Zero;
    }
    let degree = count_ascents(&v);
    let dominant_weight: Vec<i64> = sort_descending(&v)
        .iter()
        .zip(&rho)
        .map(|(x, r)| x - r)
        .collect();
    let dimension = weyl_dimension(&dominant_weight, n).expect("sorted weight is dominant");
    CohomologyResult::NonZero {
        degree,
        dominant_weight,
        dimension,
    }
}

/// [`cohomology`] for raw entries; rejects weights that are not Levi-dominant.
pub fn cohomology_of(shape: &FlagShape, entries: &[i64]) -> Result<CohomologyResult> {
    Ok(cohomology(&LeviWeight::new(shape, entries.to_vec())?))
}

/// The canonical bundle: block `j` carries `d_{j-1} − (n − d_j)`.
pub fn canonical_weight(shape: &FlagShape) -> LeviWeight {
    let n = shape.n() as i64;
    let values: Vec<i64> = (1..=shape.num_blocks())
        .map(|j| shape.d(j - 1) as i64 - (n - shape.d(j) as i64))
        .collect();
    LeviWeight::from_block_values(shape, &values).expect("one value per block")
}

/// Weight of `κ ⊗ L_α^∨`.
pub fn serre_dual(alpha: &LeviWeight) -> LeviWeight {
    canonical_weight(alpha.shape())
        .add(&alpha.dual())
        .expect("same shape")
}

/// Checks `dim H^i(L_α) = dim H^{dim−i}(κ ⊗ L_α^∨)` with two independent
/// cohomology computations.
pub fn serre_check(alpha: &LeviWeight) -> bool {
    let dim = alpha.shape().dim();
    let lhs = cohomology(alpha);
    let rhs = cohomology(&serre_dual(alpha));
    match (&lhs, &rhs) {
        (CohomologyResult::Zero, CohomologyResult::Zero) => true,
        (
            CohomologyResult::NonZero {
                degree, dimension, ..
            },
            CohomologyResult::NonZero {
                degree: d2,
                dimension: dim2,
                ..
            },
        ) => degree + d2 == dim && dimension == dim2,
        _ => false,
    }
}

/// Bott degree of the line bundle with the given block values, or `None`
/// when it has no cohomology at all.
///
/// Inside block `j` the entries of `α + ρ` form a run of consecutive
/// integers, so `α + ρ` is non-singular iff the runs are disjoint, and then
/// every pair of blocks contributes `λ_i λ_j` inversions or none.
pub fn line_bundle_degree(shape: &FlagShape, values: &[i64]) -> Option<usize> {
    let n = shape.n() as i64;
    let lengths = shape.block_lengths();
    let runs: Vec<(i64, i64)> = values
        .iter()
        .enumerate()
        .map(|(j, &a)| {
            let start = shape.d(j) as i64;
            let end = shape.d(j + 1) as i64;
            (a + n - end, a + n - 1 - start)
        })
        .collect();
    let mut degree = 0;
    for i in 0..runs.len() {
        for j in i + 1..runs.len() {
            let (lo_i, hi_i) = runs[i];
            let (lo_j, hi_j) = runs[j];
            if hi_i >= lo_j && hi_j >= lo_i {
                return None;
            }
            if hi_i < lo_j {
                degree += lengths[i] * lengths[j];
            }
        }
    }
    Some(degree)
}

/// Outcome of an h-splitting search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HSplitting {
    pub holds: bool,
    /// A line bundle with `H^i ≠ 0` for some `1 ≤ i ≤ h`, when `holds` is false.
    pub witness: Option<LeviWeight>,
    /// Box half-width that was searched.
    pub bound: u64,
}

/// Default box half-width for [`h_splitting`]: `n · t`.
pub fn default_bound(shape: &FlagShape) -> u64 {
    (shape.n() * shape.t()) as u64
}

/// Decides whether `H^1(L) = .. = H^h(L) = 0` for every line bundle with
/// block values in `[−B, B]` (last block normalized to 0). The box is
/// walked in shells of growing `max |a_j|`, so the witness is the first hit
/// in that order.
pub fn h_splitting(shape: &FlagShape, h: usize, bound: Option<u64>) -> HSplitting {
    let bound = bound.unwrap_or_else(|| default_bound(shape));
    let t = shape.t();
    let mut values = vec![0i64; t + 1];
    for r in 0..=bound as i64 {
        let found = for_each_in_shell(t, r, &mut |prefix| {
            values[..t].copy_from_slice(prefix);
            match line_bundle_degree(shape, &values) {
                Some(d) if (1..=h).contains(&d) => ControlFlow::Break(()),
                _ => ControlFlow::Continue(()),
            }
        });
        if found.is_break() {
            let witness = LeviWeight::from_block_values(shape, &values).expect("block values");
            return HSplitting {
                holds: false,
                witness: Some(witness),
                bound,
            };
        }
    }
    HSplitting {
        holds: true,
        witness: None,
        bound,
    }
}

/// Visits every vector in `[−r, r]^len` with `max |x_i| = r`.
fn for_each_in_shell(
    len: usize,
    r: i64,
    f: &mut dyn FnMut(&[i64]) -> ControlFlow<()>,
) -> ControlFlow<()> {
    let mut v = vec![0i64; len];
    if r == 0 {
        return f(&v);
    }
    for p in 0..len {
        for edge in [-r, r] {
            // coordinates before p stay strictly inside the shell
            let ranges: Vec<(i64, i64)> = (0..len)
                .map(|i| match i.cmp(&p) {
                    std::cmp::Ordering::Less => (-(r - 1), r - 1),
                    std::cmp::Ordering::Equal => (edge, edge),
                    std::cmp::Ordering::Greater => (-r, r),
                })
                .collect();
            for (x, &(lo, _)) in v.iter_mut().zip(&ranges) {
                *x = lo;
            }
            loop {
                f(&v)?;
                let mut i = len;
                let advanced = loop {
                    if i == 0 {
                        break false;
                    }
                    i -= 1;
                    if v[i] < ranges[i].1 {
                        v[i] += 1;
                        for k in i + 1..len {
                            v[k] = ranges[k].0;
                        }
                        break true;
                    }
                };
                if !advanced {
                    break;
                }
            }
        }
    }
    ControlFlow::Continue(())
}

/// Two consecutive blocks of length one: some `d_{j+1} − d_{j−1} ≤ 2`.
pub fn has_adjacent_singleton_blocks(shape: &FlagShape) -> bool {
    (1..=shape.t()).any(|j| shape.d(j + 1) - shape.d(j - 1) <= 2)
}

/// Outcome of the `∀ m ≥ 1` vanishing check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Claim2Outcome {
    pub holds: bool,
    pub counterexample_m: Option<u64>,
    /// Last `m` checked explicitly; beyond it the Bott data is constant in `m`.
    pub stable_from: u64,
}

/// The flag `F(n, ν+n−1; ν+n)` (the middle step collapses when `ν = 1`).
pub fn claim2_shape(nu: usize, n: usize) -> Result<FlagShape> {
    if nu == 0 || n == 0 {
        bail!(
            InvalidArgument,
            "claim2 needs nu >= 1 and n >= 1, got nu={nu}, n={n}"
        );
    }
    let mut steps = vec![n, nu + n - 1, nu + n];
    steps.dedup();
    FlagShape::new(steps)
}

/// The weight `(k+1 (n times), 0 (ν−1 times), ν+m)`.
pub fn claim2_weight(nu: usize, n: usize, k: i64, m: u64) -> Result<LeviWeight> {
    let shape = claim2_shape(nu, n)?;
    let mut entries = vec![k + 1; n];
    entries.extend(std::iter::repeat(0).take(nu - 1));
    entries.push(nu as i64 + m as i64);
    LeviWeight::new(&shape, entries)
}

/// Decides whether `H^ν` of the line bundle [`claim2_weight`] vanishes for
/// every `m ≥ 1`.
///
/// Once `m > k + n` the last entry of `α + ρ` exceeds all others, so the
/// singularity and inversion count no longer depend on `m`. Values up to
/// `m* = k + n + ν + 2` are checked one by one and the freeze at `m*`,
/// `m* + 1` is asserted.
pub fn claim2_vanishing(nu: usize, n: usize, k: i64) -> Result<Claim2Outcome> {
    let m_star = (k + n as i64 + nu as i64 + 2).max(1) as u64;
    for m in 1..=m_star {
        if cohomology(&claim2_weight(nu, n, k, m)?).nonzero_in(nu) {
            return Ok(Claim2Outcome {
                holds: false,
                counterexample_m: Some(m),
                stable_from: m_star,
            });
        }
    }
    let at = |m: u64| -> Result<Option<usize>> {
        let w = claim2_weight(nu, n, k, m)?;
        let rho = rho(w.shape().n())?;
        let v: Vec<i64> = w.entries().iter().zip(&rho).map(|(a, r)| a + r).collect();
        Ok((!is_singular(&v)).then(|| count_ascents(&v)))
    };
    if at(m_star)? != at(m_star + 1)? {
        bail!(
            Internal,
            "Bott data not stable past m* = {m_star} for nu={nu}, n={n}, k={k}"
        );
    }
    Ok(Claim2Outcome {
        holds: true,
        counterexample_m: None,
        stable_from: m_star,
    })
}
