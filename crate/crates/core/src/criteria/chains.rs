//! Cohomological-dimension bounds and the reduction chains for
//! Grassmannians and partial flag varieties.

use serde::Serialize;

use crate::bott::has_adjacent_singleton_blocks;
use crate::error::{bail, Result};
use crate::weights::FlagShape;

/// Blockwise comparison `d'_j − d'_{j−1} ≤ d_j − d_{j−1}` for all `j`.
pub fn seq_leq(lhs: &FlagShape, rhs: &FlagShape) -> Result<bool> {
    if lhs.num_blocks() != rhs.num_blocks() {
        bail!(
            InvalidArgument,
            "cannot compare {lhs} and {rhs}: different numbers of blocks"
        );
    }
    Ok(lhs
        .block_lengths()
        .iter()
        .zip(rhs.block_lengths())
        .all(|(a, b)| *a <= b))
}

fn dominates_twos(shape: &FlagShape) -> bool {
    shape.block_lengths().iter().all(|&l| l >= 2)
}

/// Complement whose cohomological dimension is bounded.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CdTarget {
    /// `Grs(n+1; ν+n+1)` minus `Grs(n; ν+n)`.
    GrassmannianDeletion { n: usize, nu: usize },
    /// `F_{d_•}` minus `F_{d^j_•}`.
    FlagDeletion { shape: FlagShape, j: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CdBound {
    pub dim: usize,
    pub bound: usize,
    /// The sharper bound from the single-projection argument, when it applies
    /// (`j = 1`: `dim − d_1`; `j = t+1`: `dim − (n − d_t)`).
    pub intermediate: Option<usize>,
}

pub fn cd_bound(target: &CdTarget) -> Result<CdBound> {
    match target {
        CdTarget::GrassmannianDeletion { n, nu } => {
            if *n < 2 || *nu < 2 {
                bail!(Precondition, "need n, nu >= 2, got n={n}, nu={nu}");
            }
            let dim = (n + 1) * nu;
            Ok(CdBound {
                dim,
                bound: dim - (n + 1),
                intermediate: None,
            })
        }
        CdTarget::FlagDeletion { shape, j } => {
            let t = shape.t();
            if !dominates_twos(shape) {
                bail!(Precondition, "{shape} is not >= 2_•");
            }
            if *j == 0 || *j > t + 1 {
                bail!(
                    InvalidArgument,
                    "block index {j} out of range 1..={}",
                    t + 1
                );
            }
            if shape.d(*j) - shape.d(j - 1) < 3 {
                bail!(
                    Precondition,
                    "block {j} of {shape} has length {} < 3",
                    shape.d(*j) - shape.d(j - 1)
                );
            }
            let dim = shape.dim();
            let intermediate = if *j == 1 {
                Some(dim - shape.d(1))
            } else if *j == t + 1 {
                Some(dim - (shape.n() - shape.d(t)))
            } else {
                None
            };
            Ok(CdBound {
                dim,
                bound: dim - 3,
                intermediate,
            })
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GrassStepKind {
    /// `Grs(n+1; ν+n+1) → Grs(n; ν+n)`, valid for `ν, n ≥ 2`.
    Restrict { n: usize, nu: usize },
    /// `Grs(e; d) ≅ Grs(d−e; d)`.
    Duality,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GrassStep {
    pub from: (usize, usize),
    pub to: (usize, usize),
    pub step: GrassStepKind,
}

/// Reduces `Grs(e; d)` to `Grs(2; 4)` by restriction steps, dualizing when `e = 2`.
pub fn reduction_chain_grass(e: usize, d: usize) -> Result<Vec<GrassStep>> {
    if e < 2 || d < e + 2 {
        bail!(OutOfScope, "Grs({e}; {d}) needs e >= 2 and d - e >= 2");
    }
    let mut chain = Vec::new();
    let (mut e, mut d) = (e, d);
    while (e, d) != (2, 4) {
        let from = (e, d);
        let step = if e >= 3 {
            let (n, nu) = (e - 1, d - e);
            e -= 1;
            d -= 1;
            GrassStepKind::Restrict { n, nu }
        } else {
            e = d - e;
            GrassStepKind::Duality
        };
        if let GrassStepKind::Restrict { n, nu } = step {
            if n < 2 || nu < 2 {
                bail!(
                    Internal,
                    "restriction step from {from:?} violates n, nu >= 2"
                );
            }
        }
        chain.push(GrassStep {
            from,
            to: (e, d),
            step,
        });
    }
    Ok(chain)
}

/// One step `d_• → d^j_•` with its certificates.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FlagStep {
    pub from: FlagShape,
    pub j: usize,
    pub to: FlagShape,
    /// `d^j_• ≥ 2_•`.
    pub target_dominates_twos: bool,
    /// Whether the target has two adjacent blocks of length one (must be false).
    pub target_adjacent_singletons: bool,
    pub cd: CdBound,
}

/// `d^j_• = (d_1, .., d_{j−1}, d_j − 1, .., d_t − 1; d_{t+1} − 1)`.
pub fn drop_block(shape: &FlagShape, j: usize) -> Result<FlagShape> {
    let steps = shape
        .steps()
        .iter()
        .enumerate()
        .map(|(i, &d)| if i + 1 >= j { d - 1 } else { d })
        .collect();
    FlagShape::new(steps)
}

/// Walks `d_•` down to `2_•`, each time shrinking the first block of length ≥ 3.
pub fn reduction_chain_flag(shape: &FlagShape) -> Result<Vec<FlagStep>> {
    if !dominates_twos(shape) {
        bail!(OutOfScope, "{shape} is not >= 2_•");
    }
    let mut chain = Vec::new();
    let mut cur = shape.clone();
    loop {
        let lengths = cur.block_lengths();
        let Some(j) = lengths.iter().position(|&l| l >= 3).map(|i| i + 1) else {
            break;
        };
        let cd = cd_bound(&CdTarget::FlagDeletion {
            shape: cur.clone(),
            j,
        })?;
        let next = drop_block(&cur, j)?;
        chain.push(FlagStep {
            from: cur,
            j,
            target_dominates_twos: seq_leq(&FlagShape::twos(next.t())?, &next)?,
            target_adjacent_singletons: has_adjacent_singleton_blocks(&next),
            to: next.clone(),
            cd,
        });
        cur = next;
    }
    Ok(chain)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shape(s: &str) -> FlagShape {
        s.parse().unwrap()
    }

    #[test]
    fn seq_leq_examples() {
        assert!(seq_leq(&FlagShape::twos(2).unwrap(), &shape("2,5:8")).unwrap());
        assert!(seq_leq(&shape("1,2:3"), &shape("1,2:3")).unwrap());
        assert!(!seq_leq(&shape("3:4"), &shape("2:4")).unwrap());
        assert!(seq_leq(&shape("2:4"), &shape("1,2:3")).is_err());
    }

    #[test]
    fn cd_examples() {
        let g = cd_bound(&CdTarget::GrassmannianDeletion { n: 2, nu: 2 }).unwrap();
        assert_eq!((g.dim, g.bound), (6, 3));
        assert!(cd_bound(&CdTarget::FlagDeletion {
            shape: shape("2,4:6"),
            j: 1
        })
        .is_err());
        let f = cd_bound(&CdTarget::FlagDeletion {
            shape: shape("3,6:9"),
            j: 1,
        })
        .unwrap();
        assert_eq!(f.dim, 27);
        assert_eq!(f.bound, 24);
        assert_eq!(f.intermediate, Some(24));
        let last = cd_bound(&CdTarget::FlagDeletion {
            shape: shape("2,4:8"),
            j: 3,
        })
        .unwrap();
        assert_eq!(last.intermediate, Some(last.dim - 4));
        let mid = cd_bound(&CdTarget::FlagDeletion {
            shape: shape("2,5:7"),
            j: 2,
        })
        .unwrap();
        assert_eq!(mid.intermediate, None);
        assert!(cd_bound(&CdTarget::FlagDeletion {
            shape: shape("1,4:6"),
            j: 2
        })
        .is_err());
    }

    #[test]
    fn grass_chains() {
        assert!(reduction_chain_grass(2, 4).unwrap().is_empty());
        let c = reduction_chain_grass(3, 7).unwrap();
        let path: Vec<_> = c.iter().map(|s| s.to).collect();
        assert_eq!(path, vec![(2, 6), (4, 6), (3, 5), (2, 4)]);
        assert_eq!(c[1].step, GrassStepKind::Duality);
        let c = reduction_chain_grass(2, 5).unwrap();
        assert_eq!(
            c.iter().map(|s| s.to).collect::<Vec<_>>(),
            vec![(3, 5), (2, 4)]
        );
        assert!(matches!(
            reduction_chain_grass(1, 5),
            Err(crate::Error::OutOfScope(_))
        ));
        assert!(reduction_chain_grass(3, 4).is_err());
    }

    #[test]
    fn flag_chains() {
        assert!(reduction_chain_flag(&FlagShape::twos(3).unwrap())
            .unwrap()
            .is_empty());
        let c = reduction_chain_flag(&shape("2,5:8")).unwrap();
        let path: Vec<String> = c.iter().map(|s| s.to.to_string()).collect();
        assert_eq!(path, vec!["2,4:7", "2,4:6"]);
        assert_eq!(c.iter().map(|s| s.j).collect::<Vec<_>>(), vec![2, 3]);
        let c = reduction_chain_flag(&shape("3,6:9")).unwrap();
        assert_eq!(c.first().unwrap().j, 1);
        assert_eq!(c.last().unwrap().to, FlagShape::twos(2).unwrap());
        assert!(c
            .iter()
            .all(|s| s.target_dominates_twos && !s.target_adjacent_singletons));
        assert!(reduction_chain_flag(&shape("1,3:5")).is_err());
    }
}
