//! End-to-end acceptance suite. Prints one line per criterion and exits
//! non-zero if any of them fails.

use std::collections::{BTreeMap, HashMap};
use std::process::Command;
use std::time::{Duration, Instant};

use bundlesplit_core::bott::{claim2_vanishing, h_splitting, has_adjacent_singleton_blocks};
use bundlesplit_core::criteria::{
    end_split, m_threshold_f, m_threshold_v, reduction_chain_flag, reduction_chain_grass, seq_leq,
    threshold_f_holds_at, threshold_v_holds_at, GrassStepKind, SplitBundle,
};
use bundlesplit_core::resolutions::{
    be_complex, euler_rank_check, koszul_complex, split_sequence_terms,
};
use bundlesplit_core::schur::oracle::{ssyt_contents, ssyt_count, ssyt_count_branching, MAX_BOXES};
use bundlesplit_core::schur::{pieri_col, pieri_row};
use bundlesplit_core::weights::is_levi_dominant;
use bundlesplit_core::{cohomology, CohomologyResult, FlagShape, LeviWeight, Partition};
use num_bigint::BigUint;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;

type Outcome = Result<String, String>;
type Criterion = (&'static str, Duration, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn binom(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::from(0u32);
    }
    (0..k).fold(BigUint::from(1u32), |acc, i| acc * (n - i) / (i + 1))
}

fn shapes_up_to(n: usize) -> Vec<FlagShape> {
    (2..=n).flat_map(FlagShape::all_with_ambient).collect()
}

fn c1_projective_anchor() -> Outcome {
    let mut checked = 0;
    for n in 1..=6usize {
        let p = FlagShape::projective(n).unwrap();
        for k in -12..=12i64 {
            let mut w = vec![0; n + 1];
            w[0] = k;
            let got = cohomology(&LeviWeight::new(&p, w).unwrap());
            let expected = if k >= 0 {
                Some((0, binom((n as i64 + k) as u64, n as u64)))
            } else if k < -(n as i64) {
                Some((n, binom((-k - 1) as u64, n as u64)))
            } else {
                None
            };
            let ok = match (&got, &expected) {
                (CohomologyResult::Zero, None) => true,
                (
                    CohomologyResult::NonZero {
                        degree, dimension, ..
                    },
                    Some((d, dim)),
                ) => degree == d && dimension == dim,
                _ => false,
            };
            ensure(ok, || {
                format!("O({k}) on P^{n}: got {got:?}, expected {expected:?}")
            })?;
            checked += 1;
        }
    }
    Ok(format!("{checked} line bundles O(k) on P^1..P^6"))
}

fn c2_oracle_equivalence() -> Outcome {
    let per_shape: Vec<Result<(u64, u64), String>> = shapes_up_to(5)
        .par_iter()
        .map(|shape| {
            let n = shape.n();
            let (mut weights, mut explicit) = (0u64, 0u64);
            let mut w = vec![-4i64; n];
            loop {
                if is_levi_dominant(&w, shape) {
                    weights += 1;
                    explicit += check_against_oracle(shape, &w)?;
                }
                let mut i = 0;
                while i < n && w[i] == 4 {
                    w[i] = -4;
                    i += 1;
                }
                if i == n {
                    break;
                }
                w[i] += 1;
            }
            Ok((weights, explicit))
        })
        .collect();
    let (mut weights, mut explicit) = (0, 0);
    for r in per_shape {
        let (a, b) = r?;
        weights += a;
        explicit += b;
    }
    Ok(format!(
        "{weights} dominant weights on all shapes n <= 5; {explicit} also checked by explicit tableau filling"
    ))
}

/// Returns 1 when the cell-by-cell enumeration was also consulted.
fn check_against_oracle(shape: &FlagShape, w: &[i64]) -> Result<u64, String> {
    let n = w.len();
    let v: Vec<i64> = w
        .iter()
        .enumerate()
        .map(|(i, a)| a + (n - 1 - i) as i64)
        .collect();
    let mut inversions = 0;
    let mut repeated = false;
    for i in 0..n {
        for j in i + 1..n {
            inversions += usize::from(v[i] < v[j]);
            repeated |= v[i] == v[j];
        }
    }
    let got = cohomology(&LeviWeight::new(shape, w.to_vec()).unwrap());
    match got {
        CohomologyResult::Zero => {
            ensure(repeated, || {
                format!("{shape} {w:?}: zero but alpha+rho is regular")
            })?;
            Ok(0)
        }
        CohomologyResult::NonZero {
            degree,
            dominant_weight,
            dimension,
        } => {
            ensure(!repeated && degree == inversions, || {
                format!("{shape} {w:?}: degree {degree}, brute force {inversions}")
            })?;
            let low = *dominant_weight.last().unwrap();
            let parts: Vec<u32> = dominant_weight.iter().map(|x| (x - low) as u32).collect();
            let lambda = Partition::new(parts).unwrap();
            let oracle = ssyt_count_branching(&lambda, n);
            ensure(oracle == dimension, || {
                format!("{shape} {w:?}: dim {dimension}, tableaux {oracle}")
            })?;
            if lambda.size() <= MAX_BOXES {
                let explicit = ssyt_count(&lambda, n).map_err(|e| e.to_string())?;
                ensure(explicit == dimension, || {
                    format!("{shape} {w:?}: dim {dimension}, filled tableaux {explicit}")
                })?;
                return Ok(1);
            }
            Ok(0)
        }
    }
}

fn c3_serre_duality() -> Outcome {
    let counts: Vec<Result<u64, String>> = shapes_up_to(6)
        .par_iter()
        .map(|shape| {
            let lengths = shape.block_lengths();
            let n = shape.n() as i64;
            let dim = shape.dim();
            // κ on block j: (entries before the block) − (entries after it)
            let mut before = 0i64;
            let kappa: Vec<i64> = lengths
                .iter()
                .map(|&l| {
                    let k = before - (n - before - l as i64);
                    before += l as i64;
                    k
                })
                .collect();
            let blocks = lengths.len();
            let mut a = vec![-5i64; blocks];
            let mut count = 0;
            loop {
                let dual: Vec<i64> = kappa.iter().zip(&a).map(|(k, x)| k - x).collect();
                let lhs = cohomology(&LeviWeight::from_block_values(shape, &a).unwrap());
                let rhs = cohomology(&LeviWeight::from_block_values(shape, &dual).unwrap());
                let ok = match (&lhs, &rhs) {
                    (CohomologyResult::Zero, CohomologyResult::Zero) => true,
                    (
                        CohomologyResult::NonZero {
                            degree: i,
                            dimension: x,
                            ..
                        },
                        CohomologyResult::NonZero {
                            degree: j,
                            dimension: y,
                            ..
                        },
                    ) => i + j == dim && x == y,
                    _ => false,
                };
                ensure(ok, || format!("{shape} {a:?}: {lhs:?} vs dual {rhs:?}"))?;
                count += 1;
                let mut i = 0;
                while i < blocks && a[i] == 5 {
                    a[i] = -5;
                    i += 1;
                }
                if i == blocks {
                    break;
                }
                a[i] += 1;
            }
            Ok(count)
        })
        .collect();
    let mut total = 0;
    for c in counts {
        total += c?;
    }
    Ok(format!("{total} line bundles on all shapes n <= 6"))
}

fn c4_claim2() -> Outcome {
    let mut cases = 0;
    for nu in 2..=5 {
        for n in 2..=5 {
            for k in -10..=10 {
                let o = claim2_vanishing(nu, n, k).map_err(|e| e.to_string())?;
                ensure(o.holds && o.counterexample_m.is_none(), || {
                    format!("nu={nu} n={n} k={k}: {o:?}")
                })?;
                cases += 1;
            }
        }
    }
    let mut controls = 0;
    for nu in 1..=5 {
        for k in 0..=10i64 {
            let o = claim2_vanishing(nu, 1, k).map_err(|e| e.to_string())?;
            ensure(o.counterexample_m == Some(k as u64 + 2), || {
                format!("control nu={nu} n=1 k={k}: {o:?}")
            })?;
            controls += 1;
        }
    }
    Ok(format!(
        "{cases} cases vanish for all m; {controls} n = 1 controls fail at m = k + 2"
    ))
}

fn c5_cohom0() -> Outcome {
    let shapes = shapes_up_to(7);
    let results: Vec<Result<bool, String>> = shapes
        .par_iter()
        .map(|shape| {
            let out = h_splitting(shape, 1, None);
            let adjacent = has_adjacent_singleton_blocks(shape);
            ensure(out.holds == !adjacent, || {
                format!("{shape}: search {} vs structure {}", out.holds, !adjacent)
            })?;
            if let Some(w) = &out.witness {
                let d = cohomology(w).degree();
                ensure(d == Some(1), || {
                    format!("{shape}: witness {:?} has degree {d:?}", w.entries())
                })?;
            } else {
                ensure(out.holds, || format!("{shape}: no witness"))?;
            }
            Ok(out.holds)
        })
        .collect();
    let mut holds = 0;
    for r in &results {
        holds += usize::from(*r.as_ref().map_err(Clone::clone)?);
    }
    Ok(format!(
        "{} shapes n <= 7: {holds} 1-splitting, {} with verified witnesses",
        shapes.len(),
        shapes.len() - holds
    ))
}

fn c6_resolutions() -> Outcome {
    let mut complexes = 0;
    for nu in 1..=8usize {
        ensure(euler_rank_check(&koszul_complex(nu).unwrap()), || {
            format!("koszul({nu})")
        })?;
        ensure(
            be_complex(nu, 1).unwrap().terms == koszul_complex(nu).unwrap().terms,
            || format!("be({nu}, 1) differs from koszul({nu})"),
        )?;
        for m in 1..=8u32 {
            let be = be_complex(nu, m).unwrap();
            ensure(euler_rank_check(&be), || {
                format!("be({nu}, {m}) Euler check")
            })?;
            for (pos, b) in &be.terms {
                let j = *pos as u64;
                let (m, nu) = (m as u64, nu as u64);
                let expected = binom(m + nu - 1, m + j - 1) * binom(m + j - 2, j - 1);
                ensure(b.rank() == expected, || {
                    format!("rank L^{j}_{m} on rank {nu}: {} vs {expected}", b.rank())
                })?;
            }
            if nu >= 2 {
                split_sequence_terms(nu, m).map_err(|e| e.to_string())?;
            }
            complexes += 1;
        }
    }
    Ok(format!("{complexes} BE complexes, 8 Koszul complexes"))
}

fn partitions(max_size: u32) -> Vec<Partition> {
    fn go(rem: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        out.push(Partition::new(cur.clone()).unwrap());
        for p in (1..=rem.min(max)).rev() {
            cur.push(p);
            go(rem - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(max_size, max_size, &mut Vec::new(), &mut out);
    out
}

type Character = BTreeMap<Vec<u32>, u64>;

fn product(a: &Character, b: &Character) -> Character {
    let mut out = Character::new();
    for (x, p) in a {
        for (y, q) in b {
            let sum: Vec<u32> = x.iter().zip(y).map(|(s, t)| s + t).collect();
            *out.entry(sum).or_insert(0) += p * q;
        }
    }
    out
}

fn character(sum: &bundlesplit_core::schur::SchurSum, n: usize) -> Result<Character, String> {
    let mut out = Character::new();
    for (mu, mult) in sum.terms() {
        for (c, k) in ssyt_contents(mu, n).map_err(|e| e.to_string())? {
            *out.entry(c).or_insert(0) += mult * k;
        }
    }
    Ok(out)
}

fn c7_pieri() -> Outcome {
    let mut checks = 0;
    for n in 1..=4usize {
        for lambda in partitions(6) {
            let chi = ssyt_contents(&lambda, n).map_err(|e| e.to_string())?;
            for s in 1..=4u32 {
                let row = ssyt_contents(&Partition::row(s), n).map_err(|e| e.to_string())?;
                let col =
                    ssyt_contents(&Partition::column(s as usize), n).map_err(|e| e.to_string())?;
                ensure(
                    character(&pieri_row(&lambda, s, n), n)? == product(&chi, &row),
                    || format!("pieri_row {lambda} x Sym^{s} on {n} letters"),
                )?;
                ensure(
                    character(&pieri_col(&lambda, s as usize, n), n)? == product(&chi, &col),
                    || format!("pieri_col {lambda} x Wedge^{s} on {n} letters"),
                )?;
                checks += 2;
            }
        }
    }
    Ok(format!("{checks} products compared as tableau characters"))
}

fn line_sums(shape: &FlagShape, degrees: &[i64]) -> SplitBundle {
    let zeros = shape.num_blocks() - 1;
    let summands: Vec<(Vec<i64>, u64)> = degrees
        .iter()
        .map(|&a| {
            let mut v = vec![a];
            v.extend(std::iter::repeat(0).take(zeros));
            (v, 1)
        })
        .collect();
    SplitBundle::from_block_values(shape, &summands).unwrap()
}

fn bracketed(
    m: u64,
    first: u64,
    holds: impl Fn(u64) -> bundlesplit_core::Result<bool>,
) -> Result<(), String> {
    ensure(holds(m).map_err(|e| e.to_string())?, || {
        format!("predicate fails at m = {m}")
    })?;
    if m > first {
        ensure(!holds(m - 1).map_err(|e| e.to_string())?, || {
            format!("predicate already holds at m - 1 = {}", m - 1)
        })?;
    }
    Ok(())
}

fn random_split(
    rng: &mut StdRng,
    shape: &FlagShape,
    ample: bool,
    max_summands: usize,
) -> SplitBundle {
    let blocks = shape.num_blocks();
    let count = rng.gen_range(1..=max_summands);
    let summands: Vec<(Vec<i64>, u64)> = (0..count)
        .map(|_| {
            let mut v = vec![0i64; blocks];
            for j in (0..blocks - 1).rev() {
                v[j] = if ample {
                    v[j + 1] + rng.gen_range(1..=2)
                } else {
                    rng.gen_range(-2..=2)
                };
            }
            (v, rng.gen_range(1..=2))
        })
        .collect();
    SplitBundle::from_block_values(shape, &summands).unwrap()
}

fn c8_thresholds() -> Outcome {
    for d in 2..=6 {
        let p = FlagShape::projective(d).unwrap();
        let v = line_sums(&p, &[0, 1]);
        let o1 = line_sums(&p, &[1]);
        let m = m_threshold_v(&v, &o1).map_err(|e| e.to_string())?;
        ensure(m == 6, || format!("m_V on P^{d} is {m}"))?;
        bracketed(m, 0, |m| threshold_v_holds_at(&v, &o1, m))?;
        for nu in 1..=3 {
            let n = line_sums(&p, &vec![1; nu]);
            let end = end_split(&v);
            let m = m_threshold_f(&end, &n).map_err(|e| e.to_string())?;
            ensure(m == 7, || format!("m_F on P^{d}, nu = {nu} is {m}"))?;
            bracketed(m, 1, |m| threshold_f_holds_at(&end, &n, m))?;
        }
    }
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let all: Vec<FlagShape> = shapes_up_to(5);
    for _ in 0..200 {
        let shape = &all[rng.gen_range(0..all.len())];
        let n = random_split(&mut rng, shape, true, 2);
        let v = random_split(&mut rng, shape, false, 2);
        let f = random_split(&mut rng, shape, false, 3);
        let mv = m_threshold_v(&v, &n).map_err(|e| e.to_string())?;
        bracketed(mv, 0, |m| threshold_v_holds_at(&v, &n, m))
            .map_err(|e| format!("{shape} m_V: {e}"))?;
        let mf = m_threshold_f(&f, &n).map_err(|e| e.to_string())?;
        bracketed(mf, 1, |m| threshold_f_holds_at(&f, &n, m))
            .map_err(|e| format!("{shape} m_F: {e}"))?;
    }
    Ok("m_V = 6 and m_F = 7 bracketed; 200 random scenarios bracketed for m_V and m_F".into())
}

fn c9_chains() -> Outcome {
    let mut grass = 0;
    for d in 4..=12 {
        for e in 2..=d - 2 {
            let chain = reduction_chain_grass(e, d).map_err(|err| err.to_string())?;
            let end = chain.last().map_or((e, d), |s| s.to);
            ensure(end == (2, 4), || format!("Grs({e}; {d}) ends at {end:?}"))?;
            let mut at = (e, d);
            for s in &chain {
                ensure(s.from == at, || {
                    format!("Grs({e}; {d}): broken chain at {s:?}")
                })?;
                match s.step {
                    GrassStepKind::Restrict { n, nu } => ensure(
                        n >= 2 && nu >= 2 && s.from == (n + 1, nu + n + 1) && s.to == (n, nu + n),
                        || format!("Grs({e}; {d}): bad restriction {s:?}"),
                    )?,
                    GrassStepKind::Duality => {
                        ensure(s.to == (s.from.1 - s.from.0, s.from.1), || {
                            format!("Grs({e}; {d}): bad duality {s:?}")
                        })?
                    }
                }
                at = s.to;
            }
            grass += 1;
        }
    }
    let mut certified: HashMap<FlagShape, bool> = HashMap::new();
    let mut flags = 0;
    for n in 4..=10 {
        for shape in FlagShape::all_with_ambient(n) {
            let twos = FlagShape::twos(shape.t()).unwrap();
            if !seq_leq(&twos, &shape).unwrap() {
                continue;
            }
            let chain = reduction_chain_flag(&shape).map_err(|e| e.to_string())?;
            let end = chain.last().map_or(shape.clone(), |s| s.to.clone());
            ensure(end == twos, || format!("{shape} ends at {end}"))?;
            for s in &chain {
                ensure(seq_leq(&twos, &s.to).unwrap(), || {
                    format!("{shape}: {} is not >= 2_•", s.to)
                })?;
                let ok = *certified
                    .entry(s.to.clone())
                    .or_insert_with(|| h_splitting(&s.to, 1, None).holds);
                ensure(ok, || {
                    format!("{shape}: intermediate {} is not 1-splitting", s.to)
                })?;
            }
            flags += 1;
        }
    }
    Ok(format!(
        "{grass} Grassmannian chains to Grs(2; 4); {flags} flag chains to 2_• through {} certified shapes",
        certified.len()
    ))
}

fn cli(args: &[&str]) -> Result<Vec<u8>, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_bundlesplit"))
        .args(args)
        .output()
        .map_err(|e| e.to_string())?;
    ensure(out.status.success(), || {
        format!("{args:?} exited with {:?}", out.status.code())
    })?;
    Ok(out.stdout)
}

fn c10_determinism() -> Outcome {
    let sweeps: [&[&str]; 2] = [
        &[
            "claim2",
            "--nu-range",
            "1..5",
            "--n-range",
            "1..5",
            "--k-range",
            "-10..10",
        ],
        &["cohom0-verify", "--max-n", "7"],
    ];
    let mut bytes = 0;
    for sweep in sweeps {
        let mut outputs = Vec::new();
        for threads in ["1", "3", "8"] {
            outputs.push(cli(&[sweep, &["--threads", threads]].concat())?);
        }
        outputs.push(cli(
            &[sweep, &["--threads", "8", "--format", "csv"]].concat()
        )?);
        outputs.push(cli(
            &[sweep, &["--threads", "1", "--format", "csv"]].concat()
        )?);
        ensure(outputs[0] == outputs[1] && outputs[1] == outputs[2], || {
            format!("{} JSON output differs across --threads", sweep[0])
        })?;
        ensure(outputs[3] == outputs[4], || {
            format!("{} CSV output differs across --threads", sweep[0])
        })?;
        bytes += outputs[0].len();
    }
    Ok(format!(
        "claim2 and cohom0-verify byte-identical at 1/3/8 threads ({bytes} bytes)"
    ))
}

fn main() {
    let criteria: [Criterion; 10] = [
        (
            "projective-space anchor",
            Duration::from_secs(1),
            c1_projective_anchor,
        ),
        (
            "Bott vs tableau oracle",
            Duration::from_secs(120),
            c2_oracle_equivalence,
        ),
        ("Serre duality", Duration::from_secs(60), c3_serre_duality),
        (
            "vanishing on F(n, nu+n-1; nu+n)",
            Duration::from_secs(60),
            c4_claim2,
        ),
        (
            "1-splitting vs adjacent singletons",
            Duration::from_secs(300),
            c5_cohom0,
        ),
        (
            "BE/Koszul identities",
            Duration::from_secs(1),
            c6_resolutions,
        ),
        (
            "Pieri vs tableau products",
            Duration::from_secs(120),
            c7_pieri,
        ),
        (
            "effective thresholds",
            Duration::from_secs(10),
            c8_thresholds,
        ),
        ("reduction chains", Duration::from_secs(60), c9_chains),
        (
            "determinism across --threads",
            Duration::from_secs(300),
            c10_determinism,
        ),
    ];
    let mut failed = 0;
    for (i, (name, budget, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let (status, detail) = match outcome {
            Ok(d) if elapsed <= *budget => ("PASS", d),
            Ok(d) => ("FAIL", format!("{d}; took longer than {budget:?}")),
            Err(e) => ("FAIL", e),
        };
        failed += usize::from(status == "FAIL");
        println!(
            "acceptance {:>2} [PRIMARY] {status} {name}: {detail} ({:.2}s, budget {}s)",
            i + 1,
            elapsed.as_secs_f64(),
            budget.as_secs()
        );
    }
    println!(
        "acceptance: {}/{} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
