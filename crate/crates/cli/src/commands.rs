use std::fmt;

use bundlesplit_core::bott::{
    claim2_vanishing, cohomology_of, default_bound, h_splitting, has_adjacent_singleton_blocks,
};
use bundlesplit_core::criteria::{
    cd_bound, poset, reduction_chain_flag, reduction_chain_grass, theorem_gate, CdTarget,
    GrassStepKind, SplitBundle,
};
use bundlesplit_core::resolutions::{
    be_complex, euler_rank_check, koszul_complex, split_sequence_terms, vanishing_chase,
};
use bundlesplit_core::{cohomology, CohomologyResult, Error, FlagShape};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::args::RangeArg;
use crate::output::{Report, Row};
use crate::{scenario, Command};

#[derive(Debug)]
pub enum CliError {
    Input(String),
    Resource(String),
    /// An internal consistency check failed.
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) => 2,
            CliError::Resource(_) => 3,
            CliError::Internal(_) => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input(m) | CliError::Resource(m) | CliError::Internal(m) => f.write_str(m),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::ResourceLimit(_) => CliError::Resource(e.to_string()),
            Error::Internal(_) => CliError::Internal(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}

type Result<T> = std::result::Result<T, CliError>;

fn row(v: Value) -> Row {
    match v {
        Value::Object(m) => m,
        _ => unreachable!("rows are built from object literals"),
    }
}

fn ints(v: &[i64]) -> String {
    v.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn guard(cases: u64, max_cases: u64, what: &str) -> Result<()> {
    if cases > max_cases {
        return Err(CliError::Resource(format!(
            "{what}: {cases} cases exceed --max-cases {max_cases}"
        )));
    }
    Ok(())
}

/// `(2B+1)^t`, saturating.
fn box_volume(shape: &FlagShape, bound: u64) -> u64 {
    (2 * bound + 1).saturating_pow(shape.t() as u32)
}

fn unsigned(r: &RangeArg, name: &str) -> Result<Vec<usize>> {
    if r.lo < 1 {
        return Err(CliError::Input(format!("--{name} must be >= 1, got {r}")));
    }
    Ok(r.iter().map(|x| x as usize).collect())
}

fn cohomology_fields(r: &CohomologyResult) -> Value {
    match r {
        CohomologyResult::Zero => json!({
            "result": "zero", "degree": null, "dominant_weight": null, "dimension": null,
        }),
        CohomologyResult::NonZero {
            degree,
            dominant_weight,
            dimension,
        } => json!({
            "result": "nonzero",
            "degree": degree,
            "dominant_weight": ints(dominant_weight),
            "dimension": dimension.to_string(),
        }),
    }
}

fn merge(mut a: Row, b: Value) -> Row {
    a.extend(row(b));
    a
}

pub fn dispatch(cmd: &Command, max_cases: u64) -> Result<Report> {
    match cmd {
        Command::Cohomology { flag, weight } => {
            let result = cohomology_of(&flag.0, &weight.0)?;
            let r = merge(
                row(json!({"flag": flag.0.to_string(), "weight": ints(&weight.0)})),
                cohomology_fields(&result),
            );
            let summary = row(
                json!({"rows": 1, "vanishing": u8::from(result.is_zero()), "nonvanishing": u8::from(!result.is_zero())}),
            );
            Ok(Report {
                rows: vec![r],
                summary,
                failed: false,
            })
        }
        Command::Hsplit { flag, h, bound } => hsplit(&flag.0, *h, *bound, max_cases),
        Command::Claim2 {
            nu_range,
            n_range,
            k_range,
        } => claim2(nu_range, n_range, k_range, max_cases),
        Command::Cohom0Verify { max_n } => cohom0_verify(*max_n, max_cases),
        Command::Resolution { nu, m } => resolution(*nu, *m),
        Command::Chase { grass, twist, m, t } => {
            let shape = FlagShape::grassmannian(grass.e, grass.d)?;
            let f = SplitBundle::line(&shape, &[*twist, 0])?;
            let report = vanishing_chase(&shape, &f, *m, *t)?;
            let rows: Vec<Row> = report
                .ledger
                .iter()
                .map(|e| {
                    merge(
                        row(json!({
                            "grass": format!("{},{}", grass.e, grass.d),
                            "twist": twist,
                            "m": m,
                            "t": t,
                            "j": e.j,
                            "queried_degree": e.degree,
                            "weight": ints(&e.weight),
                        })),
                        json!({
                            "cohomology_degree": e.result.degree(),
                            "dimension": e.result.dimension_in(e.result.degree().unwrap_or(0)).to_string(),
                            "blocks": e.blocks,
                        }),
                    )
                })
                .collect();
            let stalled = report.ledger.iter().find(|e| e.blocks).map(|e| e.j);
            let summary = row(json!({
                "rows": rows.len(),
                "vanishes": report.vanishes,
                "stalled_at_j": stalled,
            }));
            Ok(Report {
                rows,
                summary,
                failed: false,
            })
        }
        Command::Thresholds { scenario: path } => {
            let s = scenario::load(path).map_err(|e| CliError::Input(format!("{e:#}")))?;
            let rep = theorem_gate(&s)?;
            let rows = rep
                .items
                .iter()
                .map(|i| row(json!({"name": i.name, "status": i.status, "detail": i.detail})))
                .collect::<Vec<_>>();
            let summary = row(json!({
                "flag": s.shape.to_string(),
                "dim_x": rep.dim_x,
                "nu": rep.nu,
                "r": rep.r,
                "m_v": rep.m_v,
                "m_f": rep.m_f,
            }));
            Ok(Report {
                rows,
                summary,
                failed: false,
            })
        }
        Command::Poset { scenario: path } => {
            let s = scenario::load(path).map_err(|e| CliError::Input(format!("{e:#}")))?;
            let p = poset(&s.v);
            let rows = p
                .classes
                .iter()
                .enumerate()
                .map(|(i, c)| {
                    let above: Vec<usize> = p
                        .relation
                        .iter()
                        .filter(|&&(a, _)| a == i)
                        .map(|&(_, b)| b)
                        .collect();
                    row(json!({
                        "index": i,
                        "weight": ints(c),
                        "mult": p.multiplicities[i],
                        "maximal": p.maximal.contains(&i),
                        "precedes": above,
                    }))
                })
                .collect::<Vec<_>>();
            let summary = row(json!({
                "classes": p.classes.len(),
                "relations": p.relation.len(),
                "maximal": p.maximal,
            }));
            Ok(Report {
                rows,
                summary,
                failed: false,
            })
        }
        Command::Reduce { grass, flag } => match (grass, flag) {
            (Some(g), None) => reduce_grass(g.e, g.d),
            (None, Some(f)) => reduce_flag(&f.0, max_cases),
            _ => Err(CliError::Input(
                "give exactly one of --grass, --flag".into(),
            )),
        },
    }
}

fn hsplit(shape: &FlagShape, h: usize, bound: Option<u64>, max_cases: u64) -> Result<Report> {
    let b = bound.unwrap_or_else(|| default_bound(shape));
    guard(box_volume(shape, b), max_cases, "hsplit box")?;
    let out = h_splitting(shape, h, Some(b));
    let adjacent = has_adjacent_singleton_blocks(shape);
    let witness = out
        .witness
        .as_ref()
        .map(|w| w.block_values().expect("line"));
    let witness_degree = out.witness.as_ref().and_then(|w| cohomology(w).degree());
    let agrees = (h == 1).then_some(out.holds == !adjacent);
    let r = row(json!({
        "flag": shape.to_string(),
        "h": h,
        "bound": b,
        "holds": out.holds,
        "witness": witness.as_deref().map(ints),
        "witness_degree": witness_degree,
        "adjacent_singletons": adjacent,
        "agrees_with_structure": agrees,
    }));
    Ok(Report {
        rows: vec![r],
        summary: row(json!({"rows": 1, "holds": out.holds})),
        failed: agrees == Some(false),
    })
}

fn claim2(nu: &RangeArg, n: &RangeArg, k: &RangeArg, max_cases: u64) -> Result<Report> {
    let cases = nu.len().saturating_mul(n.len()).saturating_mul(k.len());
    guard(cases, max_cases, "claim2 sweep")?;
    let nus = unsigned(nu, "nu-range")?;
    let ns = unsigned(n, "n-range")?;
    let grid: Vec<(usize, usize, i64)> = nus
        .iter()
        .flat_map(|&a| {
            ns.iter()
                .flat_map(move |&b| k.iter().map(move |c| (a, b, c)))
        })
        .collect();
    let outcomes = grid
        .par_iter()
        .map(|&(a, b, c)| claim2_vanishing(a, b, c).map(|o| (a, b, c, o)))
        .collect::<std::result::Result<Vec<_>, _>>()?;
    let mut vanishing = 0u64;
    let mut failures = 0u64;
    let rows: Vec<Row> = outcomes
        .into_iter()
        .map(|(a, b, c, o)| {
            let in_regime = a >= 2 && b >= 2;
            vanishing += u64::from(o.holds);
            failures += u64::from(in_regime && !o.holds);
            row(json!({
                "nu": a,
                "n": b,
                "k": c,
                "in_regime": in_regime,
                "holds": o.holds,
                "counterexample_m": o.counterexample_m,
                "stable_from": o.stable_from,
            }))
        })
        .collect();
    let total = rows.len() as u64;
    let status = if failures > 0 {
        "FAILED"
    } else if vanishing == total {
        "all vanish"
    } else {
        "counterexamples outside nu, n >= 2 only"
    };
    Ok(Report {
        summary: row(json!({
            "cases": total,
            "vanishing": vanishing,
            "nonvanishing": total - vanishing,
            "failures_in_regime": failures,
            "status": status,
        })),
        rows,
        failed: failures > 0,
    })
}

fn cohom0_verify(max_n: usize, max_cases: u64) -> Result<Report> {
    if max_n < 2 {
        return Err(CliError::Input("--max-n must be >= 2".into()));
    }
    let shapes: Vec<FlagShape> = (2..=max_n).flat_map(FlagShape::all_with_ambient).collect();
    guard(shapes.len() as u64, max_cases, "cohom0-verify shapes")?;
    let rows: Vec<Row> = shapes
        .par_iter()
        .map(|shape| {
            let out = h_splitting(shape, 1, None);
            let adjacent = has_adjacent_singleton_blocks(shape);
            let witness_degree = out.witness.as_ref().and_then(|w| cohomology(w).degree());
            let witness_ok = out.holds || witness_degree == Some(1);
            row(json!({
                "flag": shape.to_string(),
                "bound": out.bound,
                "search_holds": out.holds,
                "witness": out.witness.as_ref().map(|w| ints(&w.block_values().expect("line"))),
                "witness_degree": witness_degree,
                "adjacent_singletons": adjacent,
                "agree": out.holds == !adjacent && witness_ok,
            }))
        })
        .collect();
    let agree = rows
        .iter()
        .filter(|r| r["agree"] == Value::Bool(true))
        .count();
    let holds = rows
        .iter()
        .filter(|r| r["search_holds"] == Value::Bool(true))
        .count();
    Ok(Report {
        summary: row(json!({
            "shapes": rows.len(),
            "one_splitting": holds,
            "not_one_splitting": rows.len() - holds,
            "disagreements": rows.len() - agree,
        })),
        failed: agree != rows.len(),
        rows,
    })
}

fn resolution(nu: usize, m: u32) -> Result<Report> {
    let be = be_complex(nu, m)?;
    let euler = euler_rank_check(&be);
    let matches_koszul = (m == 1)
        .then(|| koszul_complex(nu).map(|k| k.terms == be.terms))
        .transpose()?;
    let rows = be
        .terms
        .iter()
        .map(|(pos, b)| {
            let schur = b.terms().first().map(|t| t.partitions[0].to_string());
            row(json!({
                "nu": nu,
                "m": m,
                "position": pos,
                "schur": schur,
                "rank": b.rank().to_string(),
            }))
        })
        .collect();
    let split = if nu >= 2 {
        Some(
            split_sequence_terms(nu, m)?
                .iter()
                .map(|r| r.to_string())
                .collect::<Vec<_>>(),
        )
    } else {
        None
    };
    Ok(Report {
        rows,
        summary: row(json!({
            "target": be.target,
            "euler_rank_check": euler,
            "matches_koszul": matches_koszul,
            "split_sequence_ranks": split,
        })),
        failed: !euler || matches_koszul == Some(false),
    })
}

fn reduce_grass(e: usize, d: usize) -> Result<Report> {
    let chain = reduction_chain_grass(e, d)?;
    let rows: Vec<Row> = chain
        .iter()
        .map(|s| {
            let (kind, n, nu) = match s.step {
                GrassStepKind::Restrict { n, nu } => ("restrict", Some(n), Some(nu)),
                GrassStepKind::Duality => ("duality", None, None),
            };
            let cd = match s.step {
                GrassStepKind::Restrict { n, nu } => {
                    Some(cd_bound(&CdTarget::GrassmannianDeletion { n, nu }).map(|c| c.bound))
                }
                GrassStepKind::Duality => None,
            }
            .transpose();
            cd.map(|cd| {
                row(json!({
                    "from": format!("{},{}", s.from.0, s.from.1),
                    "to": format!("{},{}", s.to.0, s.to.1),
                    "step": kind,
                    "n": n,
                    "nu": nu,
                    "hypothesis_n_nu_ge_2": n.map(|n| n >= 2 && nu.unwrap_or(0) >= 2),
                    "cd_bound": cd,
                }))
            })
        })
        .collect::<std::result::Result<_, _>>()?;
    Ok(Report {
        summary: row(json!({"steps": rows.len(), "terminal": "2,4"})),
        rows,
        failed: false,
    })
}

fn reduce_flag(shape: &FlagShape, max_cases: u64) -> Result<Report> {
    let chain = reduction_chain_flag(shape)?;
    for s in &chain {
        guard(
            box_volume(&s.to, default_bound(&s.to)),
            max_cases,
            "1-splitting certificate",
        )?;
    }
    let rows: Vec<Row> = chain
        .par_iter()
        .map(|s| {
            row(json!({
                "from": s.from.to_string(),
                "j": s.j,
                "to": s.to.to_string(),
                "target_dominates_twos": s.target_dominates_twos,
                "target_one_splitting": h_splitting(&s.to, 1, None).holds,
                "cd_dim": s.cd.dim,
                "cd_bound": s.cd.bound,
                "cd_intermediate": s.cd.intermediate,
            }))
        })
        .collect();
    let certified = rows.iter().all(|r| {
        r["target_one_splitting"] == Value::Bool(true)
            && r["target_dominates_twos"] == Value::Bool(true)
    });
    let terminal = chain
        .last()
        .map_or_else(|| shape.to_string(), |s| s.to.to_string());
    Ok(Report {
        summary: row(json!({"steps": rows.len(), "terminal": terminal, "certified": certified})),
        rows,
        failed: !certified,
    })
}
