use std::path::Path;

use anyhow::{bail, Context};
use bundlesplit_core::criteria::{NormalBundle, Scenario, SplitBundle};
use bundlesplit_core::FlagShape;
use serde::Deserialize;

/// A split summand: one integer per block of the flag, and a multiplicity.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct Summand {
    weight: Vec<i64>,
    #[serde(default = "one")]
    mult: u64,
}

fn one() -> u64 {
    1
}

#[derive(Debug, Deserialize)]
#[serde(rename_all = "kebab-case", deny_unknown_fields)]
enum NormalSpec {
    Split(Vec<Summand>),
    UniversalQuotient,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct ScenarioFile {
    schema: u32,
    flag: String,
    #[serde(rename = "V")]
    v: Vec<Summand>,
    #[serde(rename = "N")]
    n: NormalSpec,
    #[serde(rename = "F", default)]
    f: Option<Vec<Summand>>,
}

fn split(shape: &FlagShape, summands: &[Summand]) -> anyhow::Result<SplitBundle> {
    let data: Vec<(Vec<i64>, u64)> = summands
        .iter()
        .map(|s| (s.weight.clone(), s.mult))
        .collect();
    Ok(SplitBundle::from_block_values(shape, &data)?)
}

pub fn parse(text: &str) -> anyhow::Result<Scenario> {
    let file: ScenarioFile = serde_json::from_str(text).context("malformed scenario")?;
    if file.schema != 1 {
        bail!("unsupported scenario schema {}", file.schema);
    }
    let shape: FlagShape = file.flag.parse()?;
    let v = split(&shape, &file.v).context("V")?;
    let n = match &file.n {
        NormalSpec::Split(s) => NormalBundle::Split(split(&shape, s).context("N")?),
        NormalSpec::UniversalQuotient => NormalBundle::UniversalQuotient,
    };
    let f = file
        .f
        .as_deref()
        .map(|s| split(&shape, s).context("F"))
        .transpose()?;
    Ok(Scenario::new(shape, v, n, f)?)
}

pub fn load(path: &Path) -> anyhow::Result<Scenario> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    parse(&text)
}
