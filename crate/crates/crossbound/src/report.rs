//! JSON reports written by the command line.

use std::collections::BTreeMap;

use crossbound_core::bounds::{BoundValue, Lemma21PartReport};
use crossbound_core::critical::BoundReport;
use crossbound_core::light_cycle::{CycleWitness, FallbackReason, Provenance};
use crossbound_core::router::PlanarizationDrawing;
use crossbound_core::skewness::SkewnessCertificate;
use crossbound_core::{Edge, Graph, Vertex};
use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::format::to_graph6;

/// Budgets that shape a run's output.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Budgets {
    pub max_k: usize,
    pub max_edges: usize,
    pub sk_budget: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RunInfo {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: &'static str,
    pub input_sha256: Option<String>,
    pub seed: Option<u64>,
    pub budgets: Budgets,
}

impl RunInfo {
    pub fn new(command: &'static str, input: Option<&Graph>, seed: Option<u64>, budgets: Budgets) -> Self {
        RunInfo {
            tool: env!("CARGO_PKG_NAME"),
            version: env!("CARGO_PKG_VERSION"),
            command,
            input_sha256: input.map(graph_hash),
            seed,
            budgets,
        }
    }
}

/// SHA-256 of the graph6 encoding.
pub fn graph_hash(g: &Graph) -> String {
    let digest = Sha256::digest(to_graph6(g).as_bytes());
    digest.iter().map(|b| format!("{b:02x}")).collect()
}

fn pair(e: Edge) -> [Vertex; 2] {
    [e.lo(), e.hi()]
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GraphSummary {
    pub n: usize,
    pub m: usize,
    pub delta: Option<usize>,
}

impl GraphSummary {
    pub fn of(g: &Graph) -> Self {
        GraphSummary {
            n: g.vertex_count(),
            m: g.edge_count(),
            delta: g.min_degree().ok(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SkewnessJson {
    pub value: usize,
    pub exact: bool,
    pub removed: Vec<[Vertex; 2]>,
}

impl From<&SkewnessCertificate> for SkewnessJson {
    fn from(c: &SkewnessCertificate) -> Self {
        SkewnessJson {
            value: c.value,
            exact: c.exact,
            removed: c.removed.iter().copied().map(pair).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessJson {
    pub cycle: Vec<Vertex>,
    pub apex: Vertex,
    pub mu: usize,
    pub provenance: &'static str,
}

pub fn provenance_name(p: Provenance) -> &'static str {
    match p {
        Provenance::FaceWeight => "face-weight",
        Provenance::Induction => "induction",
        Provenance::Exhaustive => "exhaustive",
        Provenance::Fallback(FallbackReason::DegreeDrop) => "fallback:degree-drop",
        Provenance::Fallback(FallbackReason::BoundExceeded) => "fallback:bound-exceeded",
    }
}

impl From<&CycleWitness> for WitnessJson {
    fn from(w: &CycleWitness) -> Self {
        WitnessJson {
            cycle: w.cycle.clone(),
            apex: w.apex,
            mu: w.mu,
            provenance: provenance_name(w.provenance),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundValueJson {
    /// Exact value, when rational.
    pub exact: Option<String>,
    pub lower: String,
    pub upper: String,
    pub approx: f64,
}

impl From<&BoundValue> for BoundValueJson {
    fn from(b: &BoundValue) -> Self {
        BoundValueJson {
            exact: match b {
                BoundValue::Exact(v) => Some(v.to_string()),
                BoundValue::Interval { .. } => None,
            },
            lower: b.lower().to_string(),
            upper: b.upper().to_string(),
            approx: b.approx(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundsJson {
    pub thm32: String,
    pub thm41: Option<String>,
    pub thm42: Option<BoundValueJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DrawingSummary {
    pub crossing_count: usize,
    pub bound_met: bool,
}

impl From<&PlanarizationDrawing> for DrawingSummary {
    fn from(d: &PlanarizationDrawing) -> Self {
        DrawingSummary {
            crossing_count: d.crossing_count,
            bound_met: d.bound_met,
        }
    }
}

/// Measured values and bounds for one graph.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AnalysisJson {
    pub graph: GraphSummary,
    pub k: Option<usize>,
    pub skewness: SkewnessJson,
    pub mu_witness: Option<WitnessJson>,
    pub cr: Option<usize>,
    pub bounds: BoundsJson,
    pub satisfied: BTreeMap<&'static str, &'static str>,
    pub drawing: Option<DrawingSummary>,
}

impl AnalysisJson {
    pub fn new(g: &Graph, r: &BoundReport, drawing: Option<&PlanarizationDrawing>) -> Self {
        AnalysisJson {
            graph: GraphSummary::of(g),
            k: r.k,
            skewness: (&r.skewness).into(),
            mu_witness: r.mu_witness.as_ref().map(Into::into),
            cr: r.cr,
            bounds: BoundsJson {
                thm32: r.bound_thm32.to_string(),
                thm41: r.bound_thm41.map(|b| b.to_string()),
                thm42: r.bound_thm42.as_ref().map(Into::into),
            },
            satisfied: r.satisfied.iter().map(|(k, v)| (k.name(), v.name())).collect(),
            drawing: drawing.map(Into::into),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AnalyzeReport {
    pub run: RunInfo,
    #[serde(flatten)]
    pub analysis: AnalysisJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleReport {
    pub run: RunInfo,
    pub graph: GraphSummary,
    /// `None` when the budget ran out.
    pub cr: Option<usize>,
    /// Known strict lower bound when `cr` is unknown.
    pub cr_exceeds: Option<usize>,
    pub witness: Vec<[[Vertex; 2]; 2]>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CriticalReport {
    pub run: RunInfo,
    pub graph: GraphSummary,
    pub k: usize,
    pub critical: bool,
    pub reaches_k: bool,
    /// First edge whose deletion keeps `cr ≥ k`.
    pub failing_edge: Option<[Vertex; 2]>,
    pub analysis: Option<AnalysisJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Lemma21PartJson {
    pub terms: usize,
    pub threshold: String,
    pub summed: usize,
    pub limit: usize,
    pub hypothesis_tuples: usize,
    pub counterexamples: Vec<Vec<usize>>,
}

impl From<&Lemma21PartReport> for Lemma21PartJson {
    fn from(r: &Lemma21PartReport) -> Self {
        let (p, q) = r.part.threshold;
        Lemma21PartJson {
            terms: r.part.terms,
            threshold: if q == 1 { p.to_string() } else { format!("{p}/{q}") },
            summed: r.part.summed,
            limit: r.part.limit,
            hypothesis_tuples: r.hypothesis_tuples,
            counterexamples: r.counterexamples.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Lemma21Report {
    pub run: RunInfo,
    pub d_max: usize,
    pub verified: bool,
    pub parts: Vec<Lemma21PartJson>,
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}
