//! Integer weights on GL partial flag varieties.
//!
//! A flag shape `d_1 < ... < d_t < d_{t+1} = n` cuts `{0, .., n-1}` into
//! `t + 1` consecutive blocks of lengths `d_j - d_{j-1}`. A weight is a
//! length-`n` integer vector; it names a homogeneous line or Schur bundle
//! when it is non-increasing inside every block.

use std::fmt;
use std::ops::Range;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{bail, Error, Result};

/// The dimension sequence of a partial flag variety `F(d_1, .., d_t; n)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct FlagShape {
    /// `d_1, .., d_t, d_{t+1}`; the last entry is the ambient dimension.
    steps: Vec<usize>,
}

impl FlagShape {
    pub fn new(steps: Vec<usize>) -> Result<Self> {
        if steps.len() < 2 {
            bail!(
                InvalidArgument,
                "a flag shape needs at least one proper step, got {steps:?}"
            );
        }
        if steps[0] == 0 {
            bail!(
                InvalidArgument,
                "flag steps must be positive, got {steps:?}"
            );
        }
        if steps.windows(2).any(|w| w[0] >= w[1]) {
            bail!(
                InvalidArgument,
                "flag steps must be strictly increasing, got {steps:?}"
            );
        }
        Ok(Self { steps })
    }

    /// `Grs(e; d) = F(e; d)`.
    pub fn grassmannian(e: usize, d: usize) -> Result<Self> {
        Self::new(vec![e, d])
    }

    /// `P^n = F(1; n + 1)`.
    pub fn projective(n: usize) -> Result<Self> {
        Self::new(vec![1, n + 1])
    }

    /// The shape `2_• = (2, 4, .., 2t; 2(t + 1))`.
    pub fn twos(t: usize) -> Result<Self> {
        Self::new((1..=t + 1).map(|j| 2 * j).collect())
    }

    /// Builds a shape from its block lengths `λ_1, .., λ_{t+1}`.
    pub fn from_block_lengths(lengths: &[usize]) -> Result<Self> {
        if lengths.contains(&0) {
            bail!(
                InvalidArgument,
                "block lengths must be positive, got {lengths:?}"
            );
        }
        let steps = lengths
            .iter()
            .scan(0, |acc, &l| {
                *acc += l;
                Some(*acc)
            })
            .collect();
        Self::new(steps)
    }

    /// Every shape with ambient dimension `n`, in lexicographic order of steps.
    pub fn all_with_ambient(n: usize) -> Vec<Self> {
        if n < 2 {
            return Vec::new();
        }
        let inner = n - 1;
        let mut shapes = Vec::new();
        for mask in 1u64..(1 << inner) {
            let mut steps: Vec<usize> = (0..inner)
                .filter(|i| mask & (1 << i) != 0)
                .map(|i| i + 1)
                .collect();
            steps.push(n);
            shapes.push(Self { steps });
        }
        shapes.sort();
        shapes
    }

    pub fn steps(&self) -> &[usize] {
        &self.steps
    }

    /// Ambient dimension `n = d_{t+1}`.
    pub fn n(&self) -> usize {
        *self.steps.last().expect("non-empty")
    }

    /// Number of proper steps.
    pub fn t(&self) -> usize {
        self.steps.len() - 1
    }

    pub fn num_blocks(&self) -> usize {
        self.steps.len()
    }

    pub fn block_lengths(&self) -> Vec<usize> {
        let mut prev = 0;
        self.steps
            .iter()
            .map(|&d| {
                let l = d - prev;
                prev = d;
                l
            })
            .collect()
    }

    /// Index ranges of the blocks inside a length-`n` vector.
    pub fn blocks(&self) -> Vec<Range<usize>> {
        let mut prev = 0;
        self.steps
            .iter()
            .map(|&d| {
                let r = prev..d;
                prev = d;
                r
            })
            .collect()
    }

    /// `dim F = Σ_{i<j} λ_i λ_j`.
    pub fn dim(&self) -> usize {
        let lengths = self.block_lengths();
        let mut dim = 0;
        for i in 0..lengths.len() {
            for j in i + 1..lengths.len() {
                dim += lengths[i] * lengths[j];
            }
        }
        dim
    }

    /// `d_j` with the convention `d_0 = 0`.
    pub fn d(&self, j: usize) -> usize {
        if j == 0 {
            0
        } else {
            self.steps[j - 1]
        }
    }

    pub fn is_grassmannian(&self) -> bool {
        self.t() == 1
    }
}

impl TryFrom<Vec<usize>> for FlagShape {
    type Error = Error;

    fn try_from(steps: Vec<usize>) -> Result<Self> {
        Self::new(steps)
    }
}

impl From<FlagShape> for Vec<usize> {
    fn from(shape: FlagShape) -> Self {
        shape.steps
    }
}

/// Formats as `d1,..,dt:n`, the syntax accepted by [`FromStr`].
impl fmt::Display for FlagShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let inner: Vec<String> = self.steps[..self.t()]
            .iter()
            .map(|d| d.to_string())
            .collect();
        write!(f, "{}:{}", inner.join(","), self.n())
    }
}

impl FromStr for FlagShape {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (inner, n) = s.split_once(':').ok_or_else(|| {
            Error::InvalidArgument(format!("flag `{s}` is not of the form d1,..,dt:n"))
        })?;
        let parse = |x: &str| {
            x.trim()
                .parse::<usize>()
                .map_err(|_| Error::InvalidArgument(format!("bad flag entry `{x}` in `{s}`")))
        };
        let mut steps = inner
            .split(',')
            .filter(|x| !x.trim().is_empty())
            .map(parse)
            .collect::<Result<Vec<_>>>()?;
        steps.push(parse(n)?);
        Self::new(steps)
    }
}

/// A weakly decreasing sequence of non-negative integers, trailing zeros trimmed.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            bail!(
                InvalidArgument,
                "partition must be weakly decreasing, got {parts:?}"
            );
        }
        let mut parts = parts;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Self(parts))
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    /// One row of length `m`.
    pub fn row(m: u32) -> Self {
        Self::hook(m, 1)
    }

    /// One column of length `j`.
    pub fn column(j: usize) -> Self {
        Self(vec![1; j])
    }

    /// The hook `(m, 1^{j-1})`; empty when `m == 0` or `j == 0`.
    pub fn hook(m: u32, j: usize) -> Self {
        if m == 0 || j == 0 {
            return Self::empty();
        }
        let mut parts = vec![m];
        parts.extend(std::iter::repeat(1).take(j - 1));
        Self(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Number of non-zero rows.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of boxes.
    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Part `i`, zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// The parts padded with zeros to length `n`, as signed integers.
    /// `None` if the partition has more than `n` rows.
    pub fn padded(&self, n: usize) -> Option<Vec<i64>> {
        if self.len() > n {
            return None;
        }
        let mut v: Vec<i64> = self.0.iter().map(|&p| p as i64).collect();
        v.resize(n, 0);
        Some(v)
    }

    pub fn conjugate(&self) -> Self {
        let cols = self.part(0) as usize;
        Self(
            (0..cols)
                .map(|c| self.0.iter().filter(|&&p| p as usize > c).count() as u32)
                .collect(),
        )
    }

    /// Whether `self ⊇ other` as Young diagrams.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && (0..other.len()).all(|i| self.part(i) >= other.part(i))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// A Levi-dominant weight on a fixed flag shape.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LeviWeight {
    shape: FlagShape,
    entries: Vec<i64>,
}

impl LeviWeight {
    pub fn new(shape: &FlagShape, entries: Vec<i64>) -> Result<Self> {
        if entries.len() != shape.n() {
            bail!(
                InvalidArgument,
                "weight has length {}, shape {shape} needs {}",
                entries.len(),
                shape.n()
            );
        }
        if !is_levi_dominant(&entries, shape) {
            bail!(
                InvalidArgument,
                "weight {entries:?} is not non-increasing within the blocks of {shape}"
            );
        }
        Ok(Self {
            shape: shape.clone(),
            entries,
        })
    }

    /// The block-constant weight with value `values[j]` on block `j`.
    pub fn from_block_values(shape: &FlagShape, values: &[i64]) -> Result<Self> {
        if values.len() != shape.num_blocks() {
            bail!(
                InvalidArgument,
                "{} block values given, shape {shape} has {} blocks",
                values.len(),
                shape.num_blocks()
            );
        }
        let entries = shape
            .block_lengths()
            .iter()
            .zip(values)
            .flat_map(|(&len, &v)| std::iter::repeat(v).take(len))
            .collect();
        Ok(Self {
            shape: shape.clone(),
            entries,
        })
    }

    pub fn zero(shape: &FlagShape) -> Self {
        Self {
            shape: shape.clone(),
            entries: vec![0; shape.n()],
        }
    }

    pub fn shape(&self) -> &FlagShape {
        &self.shape
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<i64> {
        self.entries
    }

    pub fn is_block_constant(&self) -> bool {
        self.shape
            .blocks()
            .into_iter()
            .all(|r| self.entries[r].windows(2).all(|w| w[0] == w[1]))
    }

    /// Per-block values, if the weight is constant on every block.
    pub fn block_values(&self) -> Option<Vec<i64>> {
        self.is_block_constant().then(|| {
            self.shape
                .blocks()
                .into_iter()
                .map(|r| self.entries[r.start])
                .collect()
        })
    }

    /// Entrywise sum; both weights must live on the same shape.
    pub fn add(&self, other: &LeviWeight) -> Result<LeviWeight> {
        if self.shape != other.shape {
            bail!(
                InvalidArgument,
                "cannot add weights on {} and {}",
                self.shape,
                other.shape
            );
        }
        Ok(Self {
            shape: self.shape.clone(),
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    /// Entrywise difference of block-constant weights.
    pub fn sub(&self, other: &LeviWeight) -> Result<LeviWeight> {
        self.add(&other.scale(-1))
    }

    /// Multiplies every entry by `c`; for `c < 0` the result is only
    /// meaningful on block-constant weights, which it stays.
    pub(crate) fn scale(&self, c: i64) -> LeviWeight {
        Self {
            shape: self.shape.clone(),
            entries: self.entries.iter().map(|a| a * c).collect(),
        }
    }

    /// The weight of the dual bundle: negate and reverse inside each block.
    pub fn dual(&self) -> LeviWeight {
        let mut entries = Vec::with_capacity(self.entries.len());
        for r in self.shape.blocks() {
            entries.extend(self.entries[r].iter().rev().map(|a| -a));
        }
        Self {
            shape: self.shape.clone(),
            entries,
        }
    }
}

impl fmt::Display for LeviWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", join_ints(&self.entries))
    }
}

pub(crate) fn join_ints(v: &[i64]) -> String {
    v.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// `ρ = (n-1, .., 1, 0)`.
pub fn rho(n: usize) -> Result<Vec<i64>> {
    if n == 0 {
        bail!(InvalidArgument, "rho needs n >= 1");
    }
    Ok((0..n as i64).rev().collect())
}

/// True iff two entries coincide.
pub fn is_singular(v: &[i64]) -> bool {
    let mut sorted = v.to_vec();
    sorted.sort_unstable();
    sorted.windows(2).any(|w| w[0] == w[1])
}

/// Number of pairs `i < j` with `v_i < v_j`, i.e. inversions for the
/// decreasing order. Entries must be pairwise distinct.
pub fn inversion_count(v: &[i64]) -> Result<usize> {
    if is_singular(v) {
        bail!(
            Precondition,
            "inversion count needs distinct entries, got {v:?}"
        );
    }
    Ok(count_ascents(v))
}

pub(crate) fn count_ascents(v: &[i64]) -> usize {
    let mut count = 0;
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            if v[i] < v[j] {
                count += 1;
            }
        }
    }
    count
}

pub fn sort_descending(v: &[i64]) -> Vec<i64> {
    let mut sorted = v.to_vec();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    sorted
}

/// Adds `c` to every entry.
pub fn shift(w: &LeviWeight, c: i64) -> LeviWeight {
    LeviWeight {
        shape: w.shape.clone(),
        entries: w.entries.iter().map(|a| a + c).collect(),
    }
}

/// Non-increasing inside each block of `shape`.
pub fn is_levi_dominant(entries: &[i64], shape: &FlagShape) -> bool {
    entries.len() == shape.n()
        && shape
            .blocks()
            .into_iter()
            .all(|r| entries[r].windows(2).all(|w| w[0] >= w[1]))
}
