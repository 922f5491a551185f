//! Structured output. One [`Report`] document per run; the field layout is
//! versioned by [`SCHEMA_VERSION`] and described in `docs/schema.md`.

use serde::{Deserialize, Serialize};

use crate::apparent::{AxisReport, MadTrace, StopReason};
use crate::error::{Error, Result};
use crate::orbits::{CodeShape, IndexTuple};

pub const SCHEMA_NAME: &str = "abds-report";
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Report {
    pub schema: String,
    pub schema_version: u32,
    pub tool_version: String,
    pub command: String,
    /// SHA-256 of the raw job document, hex encoded.
    pub input_sha256: Option<String>,
    pub result: ReportBody,
}

impl Report {
    pub fn new(command: &str, input_sha256: Option<String>, result: ReportBody) -> Self {
        Self {
            schema: SCHEMA_NAME.into(),
            schema_version: SCHEMA_VERSION,
            tool_version: env!("CARGO_PKG_VERSION").into(),
            command: command.into(),
            input_sha256,
            result,
        }
    }

    /// Parses an emitted document and checks it against the schema.
    pub fn parse(text: &str) -> Result<Self> {
        let r: Report =
            serde_json::from_str(text).map_err(|e| Error::Parse(format!("report JSON: {e}")))?;
        if r.schema != SCHEMA_NAME || r.schema_version != SCHEMA_VERSION {
            return Err(Error::Parse(format!(
                "unsupported schema {} v{} (expected {SCHEMA_NAME} v{SCHEMA_VERSION})",
                r.schema, r.schema_version
            )));
        }
        if r.result.command() != r.command {
            return Err(Error::Parse(format!(
                "command {:?} does not match result kind {:?}",
                r.command,
                r.result.command()
            )));
        }
        Ok(r)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum ReportBody {
    Orbit(OrbitReport),
    Bound(BoundReport),
    Appdist(AppdistReport),
    Mad(MadReport),
    Code(CodeSummary),
    Verify(VerifyReport),
    Table1(Table1Report),
}

impl ReportBody {
    pub fn command(&self) -> &'static str {
        match self {
            ReportBody::Orbit(_) => "orbit",
            ReportBody::Bound(_) => "bound",
            ReportBody::Appdist(_) => "appdist",
            ReportBody::Mad(_) => "mad",
            ReportBody::Code(_) => "code",
            ReportBody::Verify(_) => "verify",
            ReportBody::Table1(_) => "table1",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShapeInfo {
    pub q: u64,
    pub r: Vec<usize>,
    pub n: usize,
}

impl From<&CodeShape> for ShapeInfo {
    fn from(s: &CodeShape) -> Self {
        Self {
            q: s.q(),
            r: s.dims().to_vec(),
            n: s.len(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitEntry {
    pub rep: IndexTuple,
    pub members: Vec<IndexTuple>,
    pub size: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitReport {
    pub shape: ShapeInfo,
    pub orbits: Vec<OrbitEntry>,
    /// `|D|`.
    pub total: usize,
    pub dimension: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundValue {
    pub bound: String,
    pub value: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReport {
    pub n: usize,
    pub set: Vec<usize>,
    pub values: Vec<BoundValue>,
    pub best: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AppdistReport {
    pub shape: ShapeInfo,
    pub bounds: Vec<String>,
    pub value: usize,
    pub axes: Vec<AxisReport>,
    /// `(axis, index)` pairs of the involved hypercolumns.
    pub involved: Vec<(usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MadStepReport {
    /// Representatives of the q-orbits in the support of `M_i`.
    pub support_orbits: Vec<IndexTuple>,
    /// `Δ_B(M_i)`.
    pub distance: usize,
    /// `m_i`.
    pub value: usize,
    pub involved: Vec<(usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MadReport {
    pub shape: ShapeInfo,
    pub bounds: Vec<String>,
    pub steps: Vec<MadStepReport>,
    pub result: usize,
    /// `l'`.
    pub first_min: usize,
    /// `l`.
    pub last: usize,
    pub stop_reason: StopReason,
    pub mu: usize,
    pub free_orbits: usize,
}

impl MadReport {
    pub fn new(shape: &CodeShape, bounds: Vec<String>, t: &MadTrace) -> Self {
        let orbits = shape.orbits();
        let steps = t
            .steps
            .iter()
            .map(|s| MadStepReport {
                support_orbits: orbits
                    .iter()
                    .filter(|o| s.matrix.support()[o[0]])
                    .map(|o| shape.tuple(o[0]))
                    .collect(),
                distance: s.distance,
                value: s.value,
                involved: s.involved.clone(),
            })
            .collect();
        Self {
            shape: shape.into(),
            bounds,
            steps,
            result: t.result,
            first_min: t.first_min,
            last: t.len(),
            stop_reason: t.stop_reason,
            mu: t.mu,
            free_orbits: t.free_orbits,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeSummary {
    pub shape: ShapeInfo,
    pub reps: Vec<IndexTuple>,
    pub length: usize,
    pub dimension: usize,
    pub bounds: Vec<String>,
    /// Whether the value is maximised over all primitive root tuples.
    pub over_u: bool,
    pub bound_value: usize,
    pub alpha_variant: Vec<u64>,
    pub variants: usize,
    pub trace: MadReport,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub check: String,
    pub seed: Option<u64>,
    /// Number of instances (codes, trials or sub-hypermatrices) examined.
    pub cases: u64,
    /// Instances skipped because they exceed the budget.
    pub skipped: u64,
    pub violations: u64,
    pub runtime_ms: f64,
    pub min_distance: Option<usize>,
    pub bound_value: Option<usize>,
    pub brute_min: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RowStatus {
    Match,
    Mismatch,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Triple {
    pub n: usize,
    pub dim: usize,
    pub delta: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Table1Row {
    pub code: String,
    pub q: u64,
    pub r: Vec<usize>,
    pub reps: Vec<IndexTuple>,
    pub bounds: Vec<String>,
    pub expected: Triple,
    pub computed: Option<Triple>,
    pub alpha_variant: Option<Vec<u64>>,
    pub status: RowStatus,
    /// Where the expected values come from.
    pub source: String,
    pub note: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Table1Report {
    pub rows: Vec<Table1Row>,
    pub matched: usize,
    pub compared: usize,
}
