//! Skewness: the fewest edges whose removal leaves a planar graph.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::vec::Vec;
use core::fmt;

use crate::graph::{Edge, EdgeSet, Graph};
use crate::planar::{is_planar, kuratowski_subgraph};

/// Extra subset sizes searched above the lower bound by default.
pub const DEFAULT_BUDGET_SLACK: usize = 4;

/// A set of edges whose removal leaves the graph planar.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewnessCertificate {
    pub value: usize,
    pub removed: EdgeSet,
    /// True when no smaller removal set exists.
    pub exact: bool,
}

impl SkewnessCertificate {
    /// Re-checks that `g ∖ removed` is planar.
    pub fn verify(&self, g: &Graph) -> bool {
        self.removed.len() == self.value
            && g.delete_edges(&self.removed).is_ok_and(|h| is_planar(&h))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SkewnessError {
    /// No removal set of size ≤ budget exists; carries the greedy bound.
    BudgetExceeded { budget: usize, best: SkewnessCertificate },
}

impl fmt::Display for SkewnessError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SkewnessError::BudgetExceeded { budget, best } => write!(
                f,
                "skewness exceeds search budget {budget}; best known upper bound {}",
                best.value
            ),
        }
    }
}

impl core::error::Error for SkewnessError {}

/// Euler-count lower bound: a planar graph on n ≥ 3 vertices has at most
/// 3n − 6 edges, and at most 2n − 4 when bipartite.
pub fn skewness_lower_bound(g: &Graph) -> usize {
    let (n, m) = (g.vertex_count(), g.edge_count());
    if n < 3 {
        return 0;
    }
    let general = m.saturating_sub(3 * n - 6);
    if g.is_bipartite() {
        general.max(m.saturating_sub(2 * n - 4))
    } else {
        general
    }
}

/// Default search budget: lower bound plus [`DEFAULT_BUDGET_SLACK`].
pub fn default_budget(g: &Graph) -> usize {
    skewness_lower_bound(g) + DEFAULT_BUDGET_SLACK
}

/// Exact skewness, trying removal sets of size lower-bound, lower-bound + 1,
/// … up to `budget`.
///
/// Any removal set must hit every Kuratowski subdivision, so each search node
/// finds one subdivision and branches only on its edges. Among the minimum
/// removal sets the lexicographically smallest is returned.
pub fn skewness_exact(g: &Graph, budget: usize) -> Result<SkewnessCertificate, SkewnessError> {
    for size in skewness_lower_bound(g)..=budget {
        let mut search = Search {
            best: None,
            seen: BTreeSet::new(),
        };
        search.run(g.clone(), Vec::new(), size);
        if let Some(removed) = search.best {
            let cert = SkewnessCertificate {
                value: removed.len(),
                removed: removed.into_iter().collect(),
                exact: true,
            };
            debug_assert!(cert.verify(g));
            return Ok(cert);
        }
    }
    Err(SkewnessError::BudgetExceeded {
        budget,
        best: planar_subgraph_heuristic(g),
    })
}

struct Search {
    best: Option<Vec<Edge>>,
    seen: BTreeSet<Vec<Edge>>,
}

impl Search {
    fn run(&mut self, h: Graph, removed: Vec<Edge>, left: usize) {
        let mut key = removed.clone();
        key.sort_unstable();
        if !self.seen.insert(key.clone()) {
            return;
        }
        if skewness_lower_bound(&h) > left {
            return;
        }
        let Some(witness) = kuratowski_subgraph(&h) else {
            if self.best.as_ref().is_none_or(|b| key < *b) {
                self.best = Some(key);
            }
            return;
        };
        if left == 0 {
            return;
        }
        for e in witness.edges {
            let mut next = h.clone();
            next.remove(e);
            let mut r = removed.clone();
            r.push(e);
            self.run(next, r, left - 1);
        }
    }
}

/// Greedy planar subgraph: a spanning forest first, then every other edge in
/// lexicographic order, kept when the subgraph stays planar. The discarded
/// edges form the certificate.
pub fn planar_subgraph_heuristic(g: &Graph) -> SkewnessCertificate {
    let mut kept = Graph::with_vertices(g.vertices(), []).expect("no edges");
    let mut visited = BTreeSet::new();
    for root in g.vertices() {
        if !visited.insert(root) {
            continue;
        }
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for w in g.neighbors(v) {
                if visited.insert(w) {
                    kept.insert(Edge::new(v, w));
                    queue.push_back(w);
                }
            }
        }
    }
    let mut removed = EdgeSet::new();
    for e in g.edges() {
        if kept.contains_edge(e) {
            continue;
        }
        kept.insert(e);
        if !is_planar(&kept) {
            kept.remove(e);
            removed.insert(e);
        }
    }
    SkewnessCertificate {
        value: removed.len(),
        removed,
        exact: false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;

    #[test]
    fn lower_bound_examples() {
        assert_eq!(skewness_lower_bound(&generate::complete(5)), 1);
        assert_eq!(skewness_lower_bound(&generate::complete(6)), 3);
        assert_eq!(skewness_lower_bound(&generate::complete_bipartite(3, 3)), 1);
        assert_eq!(skewness_lower_bound(&generate::cycle(3)), 0);
        assert_eq!(skewness_lower_bound(&generate::path(2)), 0);
    }

    #[test]
    fn exact_examples() {
        let k5 = generate::complete(5);
        let c = skewness_exact(&k5, default_budget(&k5)).unwrap();
        assert_eq!((c.value, c.exact), (1, true));
        assert_eq!(c.removed, EdgeSet::from([Edge::new(0, 1)]));

        let k6 = generate::complete(6);
        let c = skewness_exact(&k6, default_budget(&k6)).unwrap();
        assert_eq!(c.value, 3);
        assert!(c.verify(&k6));

        let q3 = generate::cube();
        let c = skewness_exact(&q3, 0).unwrap();
        assert_eq!((c.value, c.removed.len()), (0, 0));

        let p = generate::petersen();
        assert_eq!(skewness_exact(&p, default_budget(&p)).unwrap().value, 2);
    }

    #[test]
    fn budget_exceeded_returns_upper_bound() {
        let k6 = generate::complete(6);
        let Err(SkewnessError::BudgetExceeded { best, .. }) = skewness_exact(&k6, 2) else {
            panic!("K6 needs three removals");
        };
        assert!(!best.exact);
        assert!(best.verify(&k6));
    }

    #[test]
    fn heuristic_examples() {
        let c = planar_subgraph_heuristic(&generate::icosahedron());
        assert_eq!((c.value, c.exact), (0, false));

        let k5 = generate::complete(5);
        let c = planar_subgraph_heuristic(&k5);
        assert_eq!(c.value, 1);
        assert!(c.verify(&k5));

        let k7 = generate::complete(7);
        let c = planar_subgraph_heuristic(&k7);
        assert!(!c.exact);
        assert!(c.verify(&k7));
        assert!(c.value >= skewness_lower_bound(&k7));
        assert_eq!(c.value, 6);
    }
}
