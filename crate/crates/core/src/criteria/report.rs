//! Hypothesis reports for a concrete scenario `(X, V, N)`.

use serde::Serialize;

use super::{
    det_split, end_split, gate_halfdim, gate_quadratic, m_threshold_f, m_threshold_v, SplitBundle,
};
use crate::error::{bail, Result};
use crate::weights::FlagShape;

/// The bundle whose sections cut out the test subvariety.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NormalBundle {
    Split(SplitBundle),
    /// The universal quotient of a Grassmannian: globally generated, not ample.
    UniversalQuotient,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Scenario {
    pub shape: FlagShape,
    pub v: SplitBundle,
    pub n: NormalBundle,
    /// Optional auxiliary bundle for the `m_F` threshold.
    pub f: Option<SplitBundle>,
}

impl Scenario {
    pub fn new(
        shape: FlagShape,
        v: SplitBundle,
        n: NormalBundle,
        f: Option<SplitBundle>,
    ) -> Result<Self> {
        let mut on_shape = vec![&v];
        if let NormalBundle::Split(b) = &n {
            on_shape.push(b);
        }
        on_shape.extend(f.as_ref());
        if let Some(b) = on_shape.iter().find(|b| *b.shape() != shape) {
            bail!(
                InvalidArgument,
                "bundle on {} in a scenario on {shape}",
                b.shape()
            );
        }
        if matches!(n, NormalBundle::UniversalQuotient) && !shape.is_grassmannian() {
            bail!(
                Unsupported,
                "the universal quotient is only supported on Grassmannians"
            );
        }
        Ok(Self { shape, v, n, f })
    }

    pub fn dim_x(&self) -> u64 {
        self.shape.dim() as u64
    }

    /// `ν = rank N`.
    pub fn nu(&self) -> u64 {
        match &self.n {
            NormalBundle::Split(b) => b.rank(),
            NormalBundle::UniversalQuotient => (self.shape.n() - self.shape.d(1)) as u64,
        }
    }

    pub fn r(&self) -> u64 {
        self.v.rank()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GateStatus {
    Verified,
    NotVerified,
    /// The hypothesis is not decidable by split/homogeneous arithmetic.
    Undecidable,
}

impl GateStatus {
    fn all(parts: &[GateStatus]) -> GateStatus {
        if parts.contains(&GateStatus::NotVerified) {
            GateStatus::NotVerified
        } else if parts.contains(&GateStatus::Undecidable) {
            GateStatus::Undecidable
        } else {
            GateStatus::Verified
        }
    }

    fn describe(self) -> &'static str {
        match self {
            GateStatus::Verified => "true",
            GateStatus::NotVerified => "false",
            GateStatus::Undecidable => "undecidable",
        }
    }

    fn from_bool(b: bool) -> GateStatus {
        if b {
            GateStatus::Verified
        } else {
            GateStatus::NotVerified
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GateItem {
    pub name: &'static str,
    pub status: GateStatus,
    pub detail: String,
}

/// Per-hypothesis statuses. This never claims that `V` splits.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GateReport {
    pub dim_x: u64,
    pub nu: u64,
    pub r: u64,
    pub m_v: Option<u64>,
    pub m_f: Option<u64>,
    pub items: Vec<GateItem>,
}

impl GateReport {
    pub fn item(&self, name: &str) -> Option<&GateItem> {
        self.items.iter().find(|i| i.name == name)
    }
}

const QUOTIENT_NOTE: &str =
    "universal quotient is not ample (it restricts to O^(nu-1) + O(1) on lines)";

/// Evaluates the hypotheses of the ampleness criteria on a scenario.
pub fn theorem_gate(s: &Scenario) -> Result<GateReport> {
    let (dim_x, nu, r) = (s.dim_x(), s.nu(), s.r());
    let e = end_split(&s.v);
    let r2 = e.rank();
    let mut items = Vec::new();

    let rank_ok = nu + 2 <= dim_x;
    items.push(GateItem {
        name: "main1.a.rank",
        status: GateStatus::from_bool(rank_ok),
        detail: format!("nu = {nu} <= dim X - 2 = {}", dim_x as i64 - 2),
    });
    let rank_status = GateStatus::from_bool(rank_ok);

    let split_n = match &s.n {
        NormalBundle::Split(b) => Some(b),
        NormalBundle::UniversalQuotient => None,
    };

    // (a)(i): Sym^{1+r²}(E) ⊗ Sym^{1+ν}(N) ⊗ det(N)^{-1} ample
    let (status, detail) = match split_n {
        Some(n) => {
            let det_n = det_split(n).block_values().expect("line");
            let ample = e
                .min_gaps()
                .iter()
                .zip(n.min_gaps())
                .zip(det_n.windows(2))
                .all(|((g, gn), dn)| {
                    (1 + r2 as i64) * g + (1 + nu as i64) * gn - (dn[0] - dn[1]) >= 1
                });
            (
                GateStatus::from_bool(ample),
                format!(
                    "Sym^{}(E) (x) Sym^{}(N) (x) det(N)^-1 ample: {ample}",
                    1 + r2,
                    1 + nu
                ),
            )
        }
        None => (GateStatus::Undecidable, QUOTIENT_NOTE.to_string()),
    };
    items.push(GateItem {
        name: "main1.a.i",
        status: GateStatus::all(&[rank_status, status]),
        detail,
    });

    // (a)(ii): (ν+1)²/4 <= dim X − r² and E ⊗ N ample
    let quad = gate_quadratic(dim_x, r2, nu);
    let (tensor_status, tensor_detail) = match split_n {
        Some(n) => {
            let ample = e
                .min_gaps()
                .iter()
                .zip(n.min_gaps())
                .all(|(a, b)| a + b >= 1);
            (
                GateStatus::from_bool(ample),
                format!("E (x) N ample: {ample}"),
            )
        }
        None => (GateStatus::Undecidable, QUOTIENT_NOTE.to_string()),
    };
    items.push(GateItem {
        name: "main1.a.ii",
        status: GateStatus::all(&[rank_status, GateStatus::from_bool(quad), tensor_status]),
        detail: format!("({nu}+1)^2/4 <= {dim_x} - {r2}: {quad}; {tensor_detail}"),
    });

    // (a)(iii): only the rank inequality is decidable here
    let half = gate_halfdim(dim_x, nu);
    items.push(GateItem {
        name: "main1.a.iii",
        status: GateStatus::all(&[
            rank_status,
            GateStatus::from_bool(half),
            GateStatus::Undecidable,
        ]),
        detail: format!(
            "nu <= (dim X - 1)/2: {half}; smoothness of Y and N = G (x) A are not decided here"
        ),
    });

    // formal(i): N ample of rank <= dim X − 1, threshold m_V
    let mut m_v = None;
    let formal = match split_n {
        Some(n) if n.is_ample() => {
            let m = m_threshold_v(&s.v, n)?;
            m_v = Some(m);
            (
                GateStatus::from_bool(nu < dim_x),
                format!("N ample; m_V = {m}; nu <= dim X - 1: {}", nu < dim_x),
            )
        }
        Some(_) => (
            GateStatus::NotVerified,
            "N is split but not ample".to_string(),
        ),
        None => (GateStatus::Undecidable, QUOTIENT_NOTE.to_string()),
    };
    items.push(GateItem {
        name: "formal.i",
        status: formal.0,
        detail: formal.1,
    });

    let mut m_f = None;
    if let Some(f) = &s.f {
        let cohom_i = match split_n {
            Some(n) if n.is_ample() => {
                let m = m_threshold_f(f, n)?;
                m_f = Some(m);
                (GateStatus::Verified, format!("m_F = {m}"))
            }
            Some(_) => (
                GateStatus::NotVerified,
                "N is split but not ample".to_string(),
            ),
            None => (GateStatus::Undecidable, QUOTIENT_NOTE.to_string()),
        };
        items.push(GateItem {
            name: "cohom.i",
            status: cohom_i.0,
            detail: cohom_i.1,
        });
        let quad_f = gate_quadratic(dim_x, f.rank(), nu);
        let dual_ok = match split_n {
            Some(n) => GateStatus::from_bool(
                super::dual_split(f)
                    .min_gaps()
                    .iter()
                    .zip(n.min_gaps())
                    .all(|(a, b)| a + b >= 1),
            ),
            None => GateStatus::Undecidable,
        };
        items.push(GateItem {
            name: "cohom.ii",
            status: GateStatus::all(&[GateStatus::from_bool(quad_f), dual_ok]),
            detail: format!(
                "f + ({nu}+1)^2/4 <= {dim_x}: {quad_f}; F^vee (x) N ample: {}",
                dual_ok.describe()
            ),
        });
    }

    Ok(GateReport {
        dim_x,
        nu,
        r,
        m_v,
        m_f,
        items,
    })
}
