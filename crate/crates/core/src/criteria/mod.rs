//! Arithmetic of the splitting criteria on split homogeneous data.
//!
//! Line bundles on a flag variety are block-constant weights up to a global
//! shift (`det W` is trivial). A line bundle is ample iff its block values
//! strictly decrease; a split bundle is ample iff every summand is.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::bott::cohomology;
use crate::error::{bail, Result};
use crate::weights::{FlagShape, LeviWeight};

mod chains;
mod report;

pub use chains::{
    cd_bound, reduction_chain_flag, reduction_chain_grass, seq_leq, CdBound, CdTarget, FlagStep,
    GrassStep, GrassStepKind,
};
pub use report::{theorem_gate, GateItem, GateReport, GateStatus, NormalBundle, Scenario};

/// A direct sum of line bundles, grouped by isomorphism class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitBundle {
    shape: FlagShape,
    /// Normalized block values (last block 0) to multiplicity.
    summands: BTreeMap<Vec<i64>, u64>,
}

fn normalize(values: &[i64]) -> Vec<i64> {
    let last = *values.last().expect("at least two blocks");
    values.iter().map(|v| v - last).collect()
}

impl SplitBundle {
    /// Builds `⊕ L_i^{m_i}` from block-constant weights and multiplicities.
    pub fn new<'a>(
        shape: &FlagShape,
        summands: impl IntoIterator<Item = (&'a LeviWeight, u64)>,
    ) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (w, mult) in summands {
            if w.shape() != shape {
                bail!(
                    InvalidArgument,
                    "summand {w} lives on {}, not {shape}",
                    w.shape()
                );
            }
            let Some(values) = w.block_values() else {
                bail!(
                    InvalidArgument,
                    "summand {w} is not a line bundle on {shape}"
                );
            };
            if mult > 0 {
                *map.entry(normalize(&values)).or_insert(0) += mult;
            }
        }
        if map.is_empty() {
            bail!(InvalidArgument, "a split bundle needs rank >= 1");
        }
        Ok(Self {
            shape: shape.clone(),
            summands: map,
        })
    }

    /// A single line bundle given by block values.
    pub fn line(shape: &FlagShape, values: &[i64]) -> Result<Self> {
        let w = LeviWeight::from_block_values(shape, values)?;
        Self::new(shape, [(&w, 1)])
    }

    /// Builds from `(block values, multiplicity)` pairs.
    pub fn from_block_values(shape: &FlagShape, summands: &[(Vec<i64>, u64)]) -> Result<Self> {
        let weights = summands
            .iter()
            .map(|(v, m)| Ok((LeviWeight::from_block_values(shape, v)?, *m)))
            .collect::<Result<Vec<_>>>()?;
        Self::new(shape, weights.iter().map(|(w, m)| (w, *m)))
    }

    fn from_map(shape: &FlagShape, summands: BTreeMap<Vec<i64>, u64>) -> Self {
        Self {
            shape: shape.clone(),
            summands: summands.into_iter().filter(|(_, m)| *m > 0).fold(
                BTreeMap::new(),
                |mut acc, (v, m)| {
                    *acc.entry(normalize(&v)).or_insert(0) += m;
                    acc
                },
            ),
        }
    }

    pub fn shape(&self) -> &FlagShape {
        &self.shape
    }

    pub fn rank(&self) -> u64 {
        self.summands.values().sum()
    }

    /// Isotypical classes with multiplicities, ordered by block values.
    pub fn summands(&self) -> impl Iterator<Item = (LeviWeight, u64)> + '_ {
        self.summands.iter().map(|(v, &m)| {
            (
                LeviWeight::from_block_values(&self.shape, v).expect("stored per block"),
                m,
            )
        })
    }

    pub fn block_values(&self) -> impl Iterator<Item = (&[i64], u64)> {
        self.summands.iter().map(|(v, &m)| (v.as_slice(), m))
    }

    pub fn num_classes(&self) -> usize {
        self.summands.len()
    }

    /// Smallest gap `a_k − a_{k+1}` over all summands, for each adjacent pair of blocks.
    pub fn min_gaps(&self) -> Vec<i64> {
        let blocks = self.shape.num_blocks();
        (0..blocks - 1)
            .map(|k| {
                self.summands
                    .keys()
                    .map(|v| v[k] - v[k + 1])
                    .min()
                    .expect("rank >= 1")
            })
            .collect()
    }

    /// Whether every summand is ample.
    pub fn is_ample(&self) -> bool {
        self.min_gaps().iter().all(|&g| g >= 1)
    }
}

/// Strictly decreasing block values.
pub fn is_ample_line(w: &LeviWeight) -> bool {
    w.block_values()
        .is_some_and(|v| v.windows(2).all(|p| p[0] > p[1]))
}

fn binom(n: u64, k: u64) -> Option<u64> {
    let k = k.min(n - k);
    (0..k).try_fold(1u64, |acc, i| Some(acc.checked_mul(n - i)? / (i + 1)))
}

/// `Sym^m` of a split bundle: one summand per multiset of `m` line summands.
/// Fails with a resource error when a multiplicity overflows `u64`.
pub fn sym_split(b: &SplitBundle, m: u32) -> Result<SplitBundle> {
    let classes: Vec<(&Vec<i64>, u64)> = b.summands.iter().map(|(v, &c)| (v, c)).collect();
    let blocks = b.shape.num_blocks();
    let mut out = BTreeMap::new();
    fn go(
        classes: &[(&Vec<i64>, u64)],
        i: usize,
        rem: u32,
        acc: &mut Vec<i64>,
        mult: u64,
        out: &mut BTreeMap<Vec<i64>, u64>,
    ) -> Option<()> {
        if i + 1 == classes.len() {
            let (v, c) = classes[i];
            let w: Vec<i64> = acc.iter().zip(v).map(|(a, x)| a + x * rem as i64).collect();
            let k = binom(c - 1 + rem as u64, rem as u64)?;
            let slot = out.entry(w).or_insert(0);
            *slot = slot.checked_add(mult.checked_mul(k)?)?;
            return Some(());
        }
        let (v, c) = classes[i];
        for take in 0..=rem {
            for (a, x) in acc.iter_mut().zip(v) {
                *a += x * take as i64;
            }
            let k = binom(c - 1 + take as u64, take as u64)?;
            go(classes, i + 1, rem - take, acc, mult.checked_mul(k)?, out)?;
            for (a, x) in acc.iter_mut().zip(v) {
                *a -= x * take as i64;
            }
        }
        Some(())
    }
    if go(&classes, 0, m, &mut vec![0; blocks], 1, &mut out).is_none() {
        bail!(ResourceLimit, "multiplicities of Sym^{m} overflow u64");
    }
    Ok(SplitBundle::from_map(&b.shape, out))
}

/// `det` of a split bundle.
pub fn det_split(b: &SplitBundle) -> LeviWeight {
    let blocks = b.shape.num_blocks();
    let mut values = vec![0i64; blocks];
    for (v, &m) in &b.summands {
        for (a, x) in values.iter_mut().zip(v) {
            *a += x * m as i64;
        }
    }
    LeviWeight::from_block_values(&b.shape, &normalize(&values)).expect("one value per block")
}

pub fn dual_split(b: &SplitBundle) -> SplitBundle {
    SplitBundle::from_map(
        &b.shape,
        b.summands
            .iter()
            .map(|(v, &m)| (v.iter().map(|x| -x).collect(), m))
            .collect(),
    )
}

pub fn tensor_split(a: &SplitBundle, b: &SplitBundle) -> Result<SplitBundle> {
    if a.shape != b.shape {
        bail!(
            InvalidArgument,
            "cannot tensor bundles on {} and {}",
            a.shape,
            b.shape
        );
    }
    let mut out = BTreeMap::new();
    for (v, &m) in &a.summands {
        for (w, &k) in &b.summands {
            let s: Vec<i64> = v.iter().zip(w).map(|(x, y)| x + y).collect();
            *out.entry(s).or_insert(0) += m * k;
        }
    }
    Ok(SplitBundle::from_map(&a.shape, out))
}

/// `End(V) = V ⊗ V^∨`.
pub fn end_split(v: &SplitBundle) -> SplitBundle {
    tensor_split(v, &dual_split(v)).expect("same shape")
}

fn line_bundle(shape: &FlagShape, w: &LeviWeight) -> SplitBundle {
    SplitBundle::new(shape, [(w, 1)]).expect("rank one")
}

fn gaps_of(w: &LeviWeight) -> Vec<i64> {
    w.block_values()
        .expect("block constant")
        .windows(2)
        .map(|p| p[0] - p[1])
        .collect()
}

fn check_split_ample(f: &SplitBundle, n: &SplitBundle) -> Result<()> {
    if f.shape != n.shape {
        bail!(
            InvalidArgument,
            "bundles live on {} and {}",
            f.shape,
            n.shape
        );
    }
    if !n.is_ample() {
        bail!(Precondition, "N must be a sum of ample line bundles");
    }
    Ok(())
}

/// Upper limit on the threshold search.
const MAX_THRESHOLD: u64 = 10_000_000;

/// Smallest `m` at or above `start` with `base_k + (m + offset)·γ_k ≥ 1`
/// for every gap `k`; `γ_k ≥ 1` makes the predicate monotone in `m`.
fn first_ample(base: &[i64], gamma: &[i64], start: u64, offset: i64) -> Result<u64> {
    let holds = |m: u64| {
        base.iter()
            .zip(gamma)
            .all(|(b, g)| b + (m as i64 + offset) * g >= 1)
    };
    let mut m = start;
    while !holds(m) {
        m += 1;
        if m > MAX_THRESHOLD {
            bail!(Internal, "threshold search exceeded {MAX_THRESHOLD}");
        }
    }
    Ok(m)
}

/// Minimal `m ≥ 1` with `Sym^{1+f}(F^∨) ⊗ det F ⊗ Sym^{m−1+ν}(N) ⊗ det(N)^{−1}`
/// ample, where `f = rank F` and `ν = rank N`.
pub fn m_threshold_f(f: &SplitBundle, n: &SplitBundle) -> Result<u64> {
    check_split_ample(f, n)?;
    let rank_f = f.rank() as i64;
    let nu = n.rank() as i64;
    let det_f = gaps_of(&det_split(f));
    let det_n = gaps_of(&det_split(n));
    let base: Vec<i64> = dual_split(f)
        .min_gaps()
        .iter()
        .zip(&det_f)
        .zip(&det_n)
        .map(|((g, df), dn)| (1 + rank_f) * g + df - dn)
        .collect();
    first_ample(&base, &n.min_gaps(), 1, nu - 1)
}

/// Minimal `m ≥ 0` with `Sym^{1+r²}(End V) ⊗ Sym^{m+ν}(N) ⊗ det(N)^{−1}` ample.
pub fn m_threshold_v(v: &SplitBundle, n: &SplitBundle) -> Result<u64> {
    check_split_ample(v, n)?;
    let e = end_split(v);
    let r2 = e.rank() as i64;
    let nu = n.rank() as i64;
    let det_n = gaps_of(&det_split(n));
    let base: Vec<i64> = e
        .min_gaps()
        .iter()
        .zip(&det_n)
        .map(|(g, dn)| (1 + r2) * g - dn)
        .collect();
    first_ample(&base, &n.min_gaps(), 0, nu)
}

/// Same summands with multiplicity one; enough for ampleness tests, and it
/// keeps the symmetric powers below from overflowing.
fn support(b: &SplitBundle) -> SplitBundle {
    SplitBundle::from_map(
        &b.shape,
        b.summands.keys().map(|v| (v.clone(), 1)).collect(),
    )
}

/// Expands `Sym^{1+f}(F^∨) ⊗ det F ⊗ Sym^{m−1+ν}(N) ⊗ det(N)^{−1}` summand
/// by summand and tests each for ampleness.
pub fn threshold_f_holds_at(f: &SplitBundle, n: &SplitBundle, m: u64) -> Result<bool> {
    let sym_n = (m as i64 - 1 + n.rank() as i64) as u32;
    let lhs = tensor_split(
        &sym_split(&support(&dual_split(f)), 1 + f.rank() as u32)?,
        &line_bundle(&f.shape, &det_split(f)),
    )?;
    let rhs = tensor_split(
        &sym_split(&support(n), sym_n)?,
        &dual_split(&line_bundle(&n.shape, &det_split(n))),
    )?;
    Ok(tensor_split(&lhs, &rhs)?
        .summands()
        .all(|(w, _)| is_ample_line(&w)))
}

/// Expands `Sym^{1+r²}(End V) ⊗ Sym^{m+ν}(N) ⊗ det(N)^{−1}` and tests each summand.
pub fn threshold_v_holds_at(v: &SplitBundle, n: &SplitBundle, m: u64) -> Result<bool> {
    let e = end_split(v);
    let lhs = sym_split(&support(&e), 1 + e.rank() as u32)?;
    let rhs = tensor_split(
        &sym_split(&support(n), (m + n.rank()) as u32)?,
        &dual_split(&line_bundle(&n.shape, &det_split(n))),
    )?;
    Ok(tensor_split(&lhs, &rhs)?
        .summands()
        .all(|(w, _)| is_ample_line(&w)))
}

/// `ν ≤ min{(dim X − 3)/2, (dim X − 1)/3}`, or `ν = 1`, `dim X = 4` and
/// `κ_X ⊗ N²` globally generated.
pub fn gate_3nu(dim_x: u64, nu: u64, kappa_n2_globally_generated: bool) -> bool {
    let (d, nu) = (dim_x as i64, nu as i64);
    (2 * nu <= d - 3 && 3 * nu < d) || (nu == 1 && d == 4 && kappa_n2_globally_generated)
}

/// `f + (ν+1)²/4 ≤ dim X`.
pub fn gate_quadratic(dim_x: u64, f: u64, nu: u64) -> bool {
    4 * f as u128 + (nu as u128 + 1).pow(2) <= 4 * dim_x as u128
}

/// `ν ≤ (dim X − 1)/2`.
pub fn gate_halfdim(dim_x: u64, nu: u64) -> bool {
    2 * nu < dim_x
}

/// The order `i ≺ j ⇔ i ≠ j and Γ(L_i^{−1} L_j) ≠ 0` on isotypical classes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Poset {
    /// Normalized block values of each class, in index order.
    pub classes: Vec<Vec<i64>>,
    pub multiplicities: Vec<u64>,
    /// Pairs `(i, j)` with `i ≺ j`.
    pub relation: BTreeSet<(usize, usize)>,
    pub maximal: Vec<usize>,
}

pub fn poset(v: &SplitBundle) -> Poset {
    let classes: Vec<(LeviWeight, u64)> = v.summands().collect();
    let mut relation = BTreeSet::new();
    for (i, (wi, _)) in classes.iter().enumerate() {
        for (j, (wj, _)) in classes.iter().enumerate() {
            if i != j {
                let diff = wj.sub(wi).expect("same shape");
                if cohomology(&diff).nonzero_in(0) {
                    relation.insert((i, j));
                }
            }
        }
    }
    let maximal = (0..classes.len())
        .filter(|&i| !relation.iter().any(|&(a, _)| a == i))
        .collect();
    Poset {
        classes: classes
            .iter()
            .map(|(w, _)| w.block_values().expect("line"))
            .collect(),
        multiplicities: classes.iter().map(|(_, m)| *m).collect(),
        relation,
        maximal,
    }
}
