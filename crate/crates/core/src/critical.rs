//! Crossing-critical graphs and bound reports.

use alloc::vec::Vec;
use core::fmt;

use crate::bounds::{bound_thm32, bound_thm41, bound_thm42, BoundValue};
use crate::graph::{Edge, Graph};
use crate::light_cycle::{light_cycle_general, CycleWitness, LightCycleError};
use crate::oracle::{cr_at_most, crossing_number, OracleBudget, OracleError};
use crate::skewness::{default_budget, skewness_exact, SkewnessCertificate, SkewnessError};
use crate::Rational;

/// The pieces of a criticality check; the per-edge queries are independent
/// and may be computed in any order or in parallel.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriticalityCheck {
    pub k: usize,
    /// `cr(g) ≥ k`.
    pub reaches_k: bool,
    /// `(e, cr(g ∖ e) ≤ k − 1)` for every edge; empty when `reaches_k` fails.
    pub deletions: Vec<(Edge, bool)>,
}

impl CriticalityCheck {
    pub fn is_critical(&self) -> bool {
        self.reaches_k && self.deletions.iter().all(|&(_, ok)| ok)
    }
}

/// `cr(g) ≥ k`.
pub fn reaches(g: &Graph, k: usize, budget: &OracleBudget) -> Result<bool, OracleError> {
    match k {
        0 => Ok(true),
        _ => Ok(cr_at_most(g, k - 1, budget)?.is_none()),
    }
}

/// `cr(g ∖ e) ≤ k − 1`.
pub fn deletion_drops(g: &Graph, e: Edge, k: usize, budget: &OracleBudget) -> Result<bool, OracleError> {
    if k == 0 {
        return Ok(false);
    }
    let h = g.delete_edge(e).expect("e is an edge of g");
    Ok(cr_at_most(&h, k - 1, budget)?.is_some())
}

/// Full check, sequentially and stopping early on the first failure.
pub fn criticality_check(g: &Graph, k: usize, budget: &OracleBudget) -> Result<CriticalityCheck, OracleError> {
    let mut check = CriticalityCheck {
        k,
        reaches_k: reaches(g, k, budget)?,
        deletions: Vec::new(),
    };
    if !check.reaches_k {
        return Ok(check);
    }
    for e in g.edges() {
        let ok = deletion_drops(g, e, k, budget)?;
        check.deletions.push((e, ok));
        if !ok {
            break;
        }
    }
    Ok(check)
}

/// `cr(g) ≥ k` and `cr(g ∖ e) < k` for every edge `e`.
pub fn is_k_crossing_critical(g: &Graph, k: usize, budget: &OracleBudget) -> Result<bool, OracleError> {
    criticality_check(g, k, budget).map(|c| c.is_critical())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum BoundKind {
    Thm32,
    Thm41,
    Thm42,
}

impl BoundKind {
    pub fn name(self) -> &'static str {
        match self {
            BoundKind::Thm32 => "thm32",
            BoundKind::Thm41 => "thm41",
            BoundKind::Thm42 => "thm42",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    Violated,
    Unknown,
}

impl Verdict {
    pub fn name(self) -> &'static str {
        match self {
            Verdict::Holds => "true",
            Verdict::Violated => "false",
            Verdict::Unknown => "unknown",
        }
    }
}

/// Measured quantities and bound values for one graph.
#[derive(Clone, Debug, PartialEq)]
pub struct BoundReport {
    pub n: usize,
    pub delta: usize,
    pub k: Option<usize>,
    pub skewness: SkewnessCertificate,
    pub mu_witness: Option<CycleWitness>,
    pub cr: Option<usize>,
    pub bound_thm32: Rational,
    pub bound_thm41: Option<Rational>,
    pub bound_thm42: Option<BoundValue>,
    pub satisfied: Vec<(BoundKind, Verdict)>,
}

impl BoundReport {
    pub fn verdict(&self, kind: BoundKind) -> Option<Verdict> {
        self.satisfied.iter().find(|(k, _)| *k == kind).map(|&(_, v)| v)
    }

    pub fn all_hold(&self) -> bool {
        self.satisfied.iter().all(|&(_, v)| v == Verdict::Holds)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ReportError {
    NotCritical { k: usize },
    Skewness(SkewnessError),
    Oracle(OracleError),
    LightCycle(LightCycleError),
    EmptyGraph,
}

impl fmt::Display for ReportError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ReportError::NotCritical { k } => write!(f, "graph is not {k}-crossing-critical"),
            ReportError::Skewness(e) => write!(f, "{e}"),
            ReportError::Oracle(e) => write!(f, "{e}"),
            ReportError::LightCycle(e) => write!(f, "{e}"),
            ReportError::EmptyGraph => f.write_str("graph has no vertices"),
        }
    }
}

impl core::error::Error for ReportError {}

/// Limits for [`bound_report`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AnalysisBudget {
    pub oracle: OracleBudget,
    /// Largest skewness searched; `None` uses the lower bound plus slack.
    pub skewness: Option<usize>,
}

impl Default for AnalysisBudget {
    fn default() -> Self {
        AnalysisBudget {
            oracle: OracleBudget::default(),
            skewness: None,
        }
    }
}

/// Skewness, a light cycle, the oracle crossing number (if within budget)
/// and every bound applicable to `g`. The bounds that need `k` are only
/// evaluated when `k` is given.
pub fn bound_report(g: &Graph, k: Option<usize>, budget: &AnalysisBudget) -> Result<BoundReport, ReportError> {
    let delta = g.min_degree().map_err(|_| ReportError::EmptyGraph)?;
    let sk_budget = budget.skewness.unwrap_or_else(|| default_budget(g));
    let skewness = skewness_exact(g, sk_budget).map_err(ReportError::Skewness)?;
    let mu_witness = if delta >= 3 {
        Some(light_cycle_general(g, &skewness.removed).map_err(ReportError::LightCycle)?)
    } else {
        None
    };
    let cr = match crossing_number(g, &budget.oracle) {
        Ok(c) => Some(c),
        Err(OracleError::BudgetExceeded { .. }) | Err(OracleError::TooManyEdges { .. }) => None,
    };
    let n = g.vertex_count();
    let bound_thm32 = bound_thm32(n, skewness.value);
    let (bound_thm41, bound_thm42) = match (k, &mu_witness) {
        (Some(k), Some(w)) => (
            bound_thm41(k, delta, w.mu, skewness.value).ok(),
            bound_thm42(k, delta, n).ok(),
        ),
        _ => (None, None),
    };
    let against = |holds: Option<bool>| match holds {
        Some(true) => Verdict::Holds,
        Some(false) => Verdict::Violated,
        None => Verdict::Unknown,
    };
    let mut satisfied = Vec::from([(
        BoundKind::Thm32,
        against(cr.map(|c| Rational::from_integer(c as i128) <= bound_thm32)),
    )]);
    if let Some(b) = bound_thm41 {
        satisfied.push((
            BoundKind::Thm41,
            against(cr.map(|c| Rational::from_integer(c as i128) <= b)),
        ));
    }
    if let Some(b) = &bound_thm42 {
        satisfied.push((BoundKind::Thm42, against(cr.and_then(|c| b.admits(c)))));
    }
    Ok(BoundReport {
        n,
        delta,
        k,
        skewness,
        mu_witness,
        cr,
        bound_thm32,
        bound_thm41,
        bound_thm42,
        satisfied,
    })
}

/// Checks that `g` is k-crossing-critical, then reports every bound
/// against its crossing number.
pub fn certify_critical_bounds(g: &Graph, k: usize, budget: &AnalysisBudget) -> Result<BoundReport, ReportError> {
    if !is_k_crossing_critical(g, k, &budget.oracle).map_err(ReportError::Oracle)? {
        return Err(ReportError::NotCritical { k });
    }
    let report = bound_report(g, Some(k), budget)?;
    if report.cr.is_none() {
        return Err(ReportError::Oracle(OracleError::BudgetExceeded {
            max_k: budget.oracle.max_k,
        }));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;

    fn budget() -> OracleBudget {
        OracleBudget::default()
    }

    #[test]
    fn critical_examples() {
        assert_eq!(is_k_crossing_critical(&generate::complete(5), 1, &budget()), Ok(true));
        assert_eq!(is_k_crossing_critical(&generate::complete_bipartite(3, 3), 1, &budget()), Ok(true));
        assert_eq!(is_k_crossing_critical(&generate::cycle(4), 1, &budget()), Ok(false));
        assert_eq!(is_k_crossing_critical(&generate::complete(5), 2, &budget()), Ok(false));
    }

    #[test]
    fn k5_report() {
        let r = certify_critical_bounds(&generate::complete(5), 1, &AnalysisBudget::default()).unwrap();
        assert_eq!((r.n, r.delta, r.cr, r.skewness.value), (5, 4, Some(1), 1));
        assert_eq!(r.bound_thm32, Rational::from_integer(1));
        assert_eq!(r.bound_thm42, Some(BoundValue::Exact(Rational::from_integer(10))));
        assert!(r.all_hold());
    }

    #[test]
    fn k33_report() {
        let r = certify_critical_bounds(&generate::complete_bipartite(3, 3), 1, &AnalysisBudget::default())
            .unwrap();
        assert_eq!(r.delta, 3);
        assert_eq!(r.bound_thm42, Some(BoundValue::Exact(Rational::from_integer(5))));
        assert!(r.all_hold());
    }

    #[test]
    fn not_critical_is_an_error() {
        assert_eq!(
            certify_critical_bounds(&generate::cycle(4), 1, &AnalysisBudget::default()),
            Err(ReportError::NotCritical { k: 1 })
        );
    }

    #[test]
    fn planar_report_without_k() {
        let r = bound_report(&generate::cube(), None, &AnalysisBudget::default()).unwrap();
        assert_eq!((r.cr, r.skewness.value), (Some(0), 0));
        assert_eq!(r.bound_thm41, None);
        assert_eq!(r.verdict(BoundKind::Thm32), Some(Verdict::Holds));
    }
}
