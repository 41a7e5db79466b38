//! Koszul and Buchsbaum–Eisenbud resolutions as formal complexes.
//!
//! For the zero locus `Y` of a regular section of a rank-`ν` bundle `N`,
//! `I_Y^m` is resolved by `L^ν_m → .. → L^1_m = Sym^m N^∨`, where
//! `L^j_m(N^∨)` is the hook Schur functor `S_{(m,1^{j−1})}(N^∨)`. For `m = 1`
//! this is the Koszul complex of exterior powers.

use num_bigint::{BigInt, BigUint};
use num_traits::One;
use serde::Serialize;

use crate::bott::{cohomology, CohomologyResult};
use crate::criteria::SplitBundle;
use crate::error::{bail, Result};
use crate::schur::partition_dimension;
use crate::weights::{FlagShape, LeviWeight, Partition};

/// One Schur functor per block, with a multiplicity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormalTerm {
    pub partitions: Vec<Partition>,
    pub multiplicity: u64,
}

/// A formal direct sum of products of Schur functors of the graded pieces
/// of a flag (block ranks `λ_j`). A term whose partition has more rows than
/// its block is dropped.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormalBundle {
    block_ranks: Vec<usize>,
    terms: Vec<FormalTerm>,
}

impl FormalBundle {
    pub fn new(block_ranks: Vec<usize>) -> Self {
        Self {
            block_ranks,
            terms: Vec::new(),
        }
    }

    /// A single Schur functor of one bundle of rank `rank`.
    pub fn schur(rank: usize, p: Partition) -> Self {
        let mut b = Self::new(vec![rank]);
        b.push(vec![p], 1);
        b
    }

    pub fn push(&mut self, partitions: Vec<Partition>, multiplicity: u64) {
        assert_eq!(
            partitions.len(),
            self.block_ranks.len(),
            "one partition per block"
        );
        let fits = partitions
            .iter()
            .zip(&self.block_ranks)
            .all(|(p, &r)| p.len() <= r);
        if fits && multiplicity > 0 {
            self.terms.push(FormalTerm {
                partitions,
                multiplicity,
            });
        }
    }

    pub fn terms(&self) -> &[FormalTerm] {
        &self.terms
    }

    pub fn block_ranks(&self) -> &[usize] {
        &self.block_ranks
    }

    pub fn rank(&self) -> BigUint {
        self.terms
            .iter()
            .map(|t| {
                t.partitions
                    .iter()
                    .zip(&self.block_ranks)
                    .map(|(p, &r)| partition_dimension(p, r))
                    .product::<BigUint>()
                    * BigUint::from(t.multiplicity)
            })
            .sum()
    }
}

/// A bounded complex `0 → C_top → .. → C_1 → target → 0`, stored by position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormalComplex {
    pub target: String,
    /// `(position, term)`, positions strictly increasing.
    pub terms: Vec<(i64, FormalBundle)>,
}

impl FormalComplex {
    pub fn ranks(&self) -> Vec<(i64, BigUint)> {
        self.terms.iter().map(|(p, b)| (*p, b.rank())).collect()
    }
}

/// `Λ^ν N^∨ → .. → N^∨ → I_Y`.
pub fn koszul_complex(nu: usize) -> Result<FormalComplex> {
    if nu == 0 {
        bail!(InvalidArgument, "Koszul complex needs rank nu >= 1");
    }
    Ok(FormalComplex {
        target: "I_Y".into(),
        terms: (1..=nu)
            .map(|j| (j as i64, FormalBundle::schur(nu, Partition::column(j))))
            .collect(),
    })
}

/// `L^ν_m → .. → L^1_m → I_Y^m`.
pub fn be_complex(nu: usize, m: u32) -> Result<FormalComplex> {
    if nu == 0 || m == 0 {
        bail!(
            InvalidArgument,
            "BE complex needs nu >= 1 and m >= 1, got nu={nu}, m={m}"
        );
    }
    Ok(FormalComplex {
        target: format!("I_Y^{m}"),
        terms: (1..=nu)
            .map(|j| (j as i64, FormalBundle::schur(nu, Partition::hook(m, j))))
            .collect(),
    })
}

/// Exactness forces `Σ (−1)^{j−1} rank C_j = 1`, the generic rank of `I_Y^m`.
pub fn euler_rank_check(c: &FormalComplex) -> bool {
    let sum: BigInt = c
        .terms
        .iter()
        .map(|(pos, b)| {
            let r = BigInt::from(b.rank());
            if pos.rem_euclid(2) == 1 {
                r
            } else {
                -r
            }
        })
        .sum();
    sum.is_one()
}

/// Generic ranks of `𝔖_1, .., 𝔖_ν` in the short exact sequences
/// `0 → 𝔖_{j+1} → L^j_m → 𝔖_j → 0` with `𝔖_1 = I_Y^m`.
pub fn split_sequence_terms(nu: usize, m: u32) -> Result<Vec<BigUint>> {
    if nu < 2 {
        bail!(
            InvalidArgument,
            "the complex splits into short sequences only for nu >= 2"
        );
    }
    let be = be_complex(nu, m)?;
    let ranks: Vec<BigInt> = be
        .terms
        .iter()
        .map(|(_, b)| BigInt::from(b.rank()))
        .collect();
    let mut s = vec![BigInt::one()];
    for j in 1..nu {
        let next = &ranks[j - 1] - &s[j - 1];
        if next < BigInt::from(0) {
            bail!(Internal, "negative rank for S_{} (nu={nu}, m={m})", j + 1);
        }
        s.push(next);
    }
    let last = &s[nu - 1];
    let expected = BigInt::from(partition_dimension(&Partition::row(m - 1), nu));
    if *last != ranks[nu - 1] || *last != expected {
        bail!(
            Internal,
            "S_nu has rank {last}, expected rank Sym^(m-1) ⊗ det = {expected} (nu={nu}, m={m})"
        );
    }
    Ok(s.into_iter()
        .map(|x| x.to_biguint().expect("checked non-negative"))
        .collect())
}

/// One step of the chase: `H^{t+j−1}(F_summand ⊗ L^j_m(Q^∨))`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChaseEntry {
    pub j: usize,
    pub degree: usize,
    /// Block values of the split summand of `F`.
    pub summand: Vec<i64>,
    /// Full weight of `F_summand ⊗ L^j_m(Q^∨)`.
    pub weight: Vec<i64>,
    pub result: CohomologyResult,
    /// Whether this group is non-zero in the queried degree.
    pub blocks: bool,
}

/// `vanishes = true` certifies `H^t(X, F ⊗ I_Y^m) = 0`. A false value only
/// means the chase could not certify it; the ledger shows where it stopped.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChaseReport {
    pub vanishes: bool,
    pub ledger: Vec<ChaseEntry>,
}

/// Runs the chase `H^t(F ⊗ I_Y^m) ⊂ H^{t+1}(F ⊗ 𝔖_2) ⊂ .. ⊂ H^{t+ν−1}(F ⊗ L^ν_m)`
/// on `Grs(e; d)` with `N` the universal quotient `Q` of rank `ν = d − e`.
/// It certifies vanishing when `H^{t+j−1}(F ⊗ L^j_m(Q^∨)) = 0` for all `j`.
pub fn vanishing_chase(
    shape: &FlagShape,
    f: &SplitBundle,
    m: u32,
    t: usize,
) -> Result<ChaseReport> {
    if !shape.is_grassmannian() {
        bail!(
            Unsupported,
            "the chase runs on Grassmannians only, got {shape}"
        );
    }
    if f.shape() != shape {
        bail!(InvalidArgument, "F lives on {}, not on {shape}", f.shape());
    }
    if m == 0 {
        bail!(InvalidArgument, "m must be >= 1");
    }
    let e = shape.d(1);
    let nu = shape.n() - e;
    let mut ledger = Vec::new();
    for j in 1..=nu {
        let mut hook = vec![0i64; e];
        hook.extend(
            Partition::hook(m, j)
                .padded(nu)
                .expect("hook has j <= nu rows"),
        );
        let hook = LeviWeight::new(shape, hook)?;
        for (summand, _) in f.summands() {
            let weight = summand.add(&hook)?;
            let result = cohomology(&weight);
            let degree = t + j - 1;
            ledger.push(ChaseEntry {
                j,
                degree,
                summand: summand.block_values().expect("split summand"),
                weight: weight.entries().to_vec(),
                blocks: result.nonzero_in(degree),
                result,
            });
        }
    }
    Ok(ChaseReport {
        vanishes: ledger.iter().all(|e| !e.blocks),
        ledger,
    })
}
