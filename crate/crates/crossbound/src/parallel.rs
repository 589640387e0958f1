//! Criticality checks with the per-edge oracle calls spread over a thread
//! pool.

use crossbound_core::critical::{deletion_drops, reaches, CriticalityCheck};
use crossbound_core::oracle::{OracleBudget, OracleError};
use crossbound_core::{Edge, Graph};
use rayon::prelude::*;

/// Same result as the sequential check, except that every edge is examined.
pub fn criticality_check(g: &Graph, k: usize, budget: &OracleBudget) -> Result<CriticalityCheck, OracleError> {
    let reaches_k = reaches(g, k, budget)?;
    let deletions = if reaches_k {
        let edges: Vec<Edge> = g.edges().collect();
        edges
            .par_iter()
            .map(|&e| deletion_drops(g, e, k, budget).map(|ok| (e, ok)))
            .collect::<Result<Vec<_>, _>>()?
    } else {
        Vec::new()
    };
    Ok(CriticalityCheck { k, reaches_k, deletions })
}

/// Runs `f` on a pool of `jobs` threads.
pub fn with_jobs<T: Send>(jobs: usize, f: impl FnOnce() -> T + Send) -> T {
    match rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
        Ok(pool) => pool.install(f),
        Err(_) => f(),
    }
}
