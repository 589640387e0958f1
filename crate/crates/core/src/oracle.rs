//! Exact crossing numbers of small graphs.
//!
//! A drawing with `k` crossings is described, up to the planarity of its
//! planarization, by which `k` edge pairs cross and in what order the
//! crossings sit along each edge. Some optimal drawing is good (adjacent
//! edges never cross, two edges cross at most once), so only pairs of
//! independent edges are considered, each at most once. `cr(G) ≤ k` exactly
//! when some such configuration with at most `k` pairs has a planar
//! planarization.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;
use core::fmt;

use crate::graph::{Edge, EdgeSet, Graph, Vertex};
use crate::planar::{is_planar, kuratowski_subgraph};

/// Search limits.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleBudget {
    /// Largest crossing count tried.
    pub max_k: usize,
    /// Largest edge count accepted.
    pub max_edges: usize,
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget {
            max_k: 4,
            max_edges: 20,
        }
    }
}

impl OracleBudget {
    pub fn with_max_k(max_k: usize) -> Self {
        OracleBudget {
            max_k,
            ..Self::default()
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OracleError {
    /// Every level up to the budget failed, so `cr(G) > max_k`.
    BudgetExceeded { max_k: usize },
    TooManyEdges { edges: usize, limit: usize },
}

impl fmt::Display for OracleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OracleError::BudgetExceeded { max_k } => {
                write!(f, "crossing number exceeds the budget: cr(G) > {max_k}")
            }
            OracleError::TooManyEdges { edges, limit } => {
                write!(f, "{edges} edges exceed the oracle limit of {limit}")
            }
        }
    }
}

impl core::error::Error for OracleError {}

/// Crossing pairs plus the order of crossings along multiply crossed edges.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CrossingConfig {
    /// Pairs `(e, f)` with `e < f`, sorted.
    pub pairs: Vec<(Edge, Edge)>,
    /// For every edge in two or more pairs, its partners from the lower
    /// endpoint to the higher one.
    pub orders: BTreeMap<Edge, Vec<Edge>>,
}

impl CrossingConfig {
    pub fn crossing_count(&self) -> usize {
        self.pairs.len()
    }

    /// Partners of `e` in order along `e`.
    pub fn partners(&self, e: Edge) -> Vec<Edge> {
        if let Some(o) = self.orders.get(&e) {
            return o.clone();
        }
        self.pairs
            .iter()
            .filter_map(|&(a, b)| {
                if a == e {
                    Some(b)
                } else if b == e {
                    Some(a)
                } else {
                    None
                }
            })
            .collect()
    }

    /// True when no pair shares an endpoint and no pair repeats.
    pub fn is_good(&self) -> bool {
        let distinct: BTreeSet<_> = self.pairs.iter().collect();
        distinct.len() == self.pairs.len() && self.pairs.iter().all(|(a, b)| a.independent_of(*b))
    }
}

/// Replaces every crossing by a degree-4 vertex. Crossing `i` (in `pairs`
/// order) becomes vertex `max_vertex + 1 + i`.
pub fn planarize_config(g: &Graph, cfg: &CrossingConfig) -> Graph {
    let base = g.max_vertex().map_or(0, |v| v + 1);
    let dummy: BTreeMap<(Edge, Edge), Vertex> = cfg
        .pairs
        .iter()
        .enumerate()
        .map(|(i, &p)| (p, base + i as Vertex))
        .collect();
    let pair_key = |a: Edge, b: Edge| if a < b { (a, b) } else { (b, a) };
    let mut h = Graph::with_vertices(g.vertices().chain(dummy.values().copied()), [])
        .expect("no edges yet");
    for e in g.edges() {
        let mut chain = Vec::from([e.lo()]);
        chain.extend(cfg.partners(e).into_iter().map(|f| dummy[&pair_key(e, f)]));
        chain.push(e.hi());
        for w in chain.windows(2) {
            h.insert(Edge::new(w[0], w[1]));
        }
    }
    h
}

/// A configuration with exactly `level` crossings whose planarization is
/// planar, if one exists. The first in lexicographic search order is
/// returned.
pub fn config_at_level(g: &Graph, level: usize) -> Option<CrossingConfig> {
    let (n, m) = (g.vertex_count(), g.edge_count());
    if level == 0 {
        return is_planar(g).then(CrossingConfig::default);
    }
    // the planarization has n + level vertices and m + 2·level edges
    if n + level >= 3 && m + 2 * level > 3 * (n + level) - 6 {
        return None;
    }
    let obstruction: EdgeSet = kuratowski_subgraph(g)?.edges;
    let edges: Vec<Edge> = g.edges().collect();
    let pairs: Vec<(Edge, Edge)> = edges
        .iter()
        .enumerate()
        .flat_map(|(i, &a)| edges[i + 1..].iter().map(move |&b| (a, b)))
        .filter(|(a, b)| a.independent_of(*b))
        .collect();
    if pairs.len() < level {
        return None;
    }
    let mut idx: Vec<usize> = (0..level).collect();
    loop {
        let chosen: Vec<(Edge, Edge)> = idx.iter().map(|&i| pairs[i]).collect();
        // one edge of each pair removed leaves a planar graph, so the crossed
        // edges must touch the known obstruction
        let hits = chosen
            .iter()
            .any(|(a, b)| obstruction.contains(a) || obstruction.contains(b));
        if hits {
            if let Some(cfg) = first_planar_ordering(g, chosen) {
                return Some(cfg);
            }
        }
        if !next_combination(&mut idx, pairs.len()) {
            return None;
        }
    }
}

fn first_planar_ordering(g: &Graph, pairs: Vec<(Edge, Edge)>) -> Option<CrossingConfig> {
    let mut partners: BTreeMap<Edge, Vec<Edge>> = BTreeMap::new();
    for &(a, b) in &pairs {
        partners.entry(a).or_default().push(b);
        partners.entry(b).or_default().push(a);
    }
    let mut multi: Vec<(Edge, Vec<Edge>)> = partners
        .into_iter()
        .filter(|(_, p)| p.len() >= 2)
        .map(|(e, mut p)| {
            p.sort_unstable();
            (e, p)
        })
        .collect();
    loop {
        let cfg = CrossingConfig {
            pairs: pairs.clone(),
            orders: multi.iter().cloned().collect(),
        };
        if is_planar(&planarize_config(g, &cfg)) {
            return Some(cfg);
        }
        // odometer over the permutations of every multiply crossed edge
        let mut advanced = false;
        for (_, order) in multi.iter_mut().rev() {
            if next_permutation(order) {
                advanced = true;
                break;
            }
            order.sort_unstable();
        }
        if !advanced {
            return None;
        }
    }
}

fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let k = idx.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if idx[i] < n - k + i {
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

fn next_permutation<T: Ord>(v: &mut [T]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

fn check_edges(g: &Graph, budget: &OracleBudget) -> Result<(), OracleError> {
    if g.edge_count() > budget.max_edges {
        return Err(OracleError::TooManyEdges {
            edges: g.edge_count(),
            limit: budget.max_edges,
        });
    }
    Ok(())
}

/// Smallest level ≤ `max_k` with a planar configuration, per connected
/// component; crossing numbers add over components.
fn solve(g: &Graph, max_k: usize) -> Option<(usize, CrossingConfig)> {
    let mut total = 0;
    let mut combined = CrossingConfig::default();
    for comp in g.components() {
        let sub = g.induced(&comp);
        let (level, cfg) = (0..=max_k - total)
            .find_map(|j| config_at_level(&sub, j).map(|c| (j, c)))?;
        total += level;
        combined.pairs.extend(cfg.pairs);
        combined.orders.extend(cfg.orders);
    }
    combined.pairs.sort_unstable();
    Some((total, combined))
}

/// Decides `cr(g) ≤ k`, returning a witness configuration with at most `k`
/// crossings when it holds.
pub fn cr_at_most(
    g: &Graph,
    k: usize,
    budget: &OracleBudget,
) -> Result<Option<CrossingConfig>, OracleError> {
    check_edges(g, budget)?;
    if k > budget.max_k {
        return Err(OracleError::BudgetExceeded { max_k: budget.max_k });
    }
    Ok(solve(g, k).map(|(_, cfg)| cfg))
}

/// cr(g), searching levels `0..=budget.max_k`.
pub fn crossing_number(g: &Graph, budget: &OracleBudget) -> Result<usize, OracleError> {
    crossing_number_with_witness(g, budget).map(|(k, _)| k)
}

pub fn crossing_number_with_witness(
    g: &Graph,
    budget: &OracleBudget,
) -> Result<(usize, CrossingConfig), OracleError> {
    check_edges(g, budget)?;
    solve(g, budget.max_k).ok_or(OracleError::BudgetExceeded { max_k: budget.max_k })
}
