//! Simple undirected graphs with stable vertex ids.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;
use core::fmt;

/// Vertex identifier. Ids are stable under deletion; contraction keeps the
/// lower id of a merged pair.
pub type Vertex = u32;

/// An unordered vertex pair, stored with `lo < hi`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    lo: Vertex,
    hi: Vertex,
}

impl Edge {
    /// Builds the normalized edge `{a, b}`. Panics on a loop.
    pub fn new(a: Vertex, b: Vertex) -> Self {
        assert!(a != b, "loop {a}-{a} is not an edge of a simple graph");
        if a < b {
            Edge { lo: a, hi: b }
        } else {
            Edge { lo: b, hi: a }
        }
    }

    pub fn try_new(a: Vertex, b: Vertex) -> Option<Self> {
        (a != b).then(|| Edge::new(a, b))
    }

    pub fn lo(self) -> Vertex {
        self.lo
    }

    pub fn hi(self) -> Vertex {
        self.hi
    }

    pub fn ends(self) -> (Vertex, Vertex) {
        (self.lo, self.hi)
    }

    pub fn contains(self, v: Vertex) -> bool {
        self.lo == v || self.hi == v
    }

    /// The endpoint other than `v`.
    pub fn other(self, v: Vertex) -> Vertex {
        if v == self.lo {
            self.hi
        } else {
            debug_assert_eq!(v, self.hi);
            self.lo
        }
    }

    /// True when the two edges share no endpoint.
    pub fn independent_of(self, other: Edge) -> bool {
        !other.contains(self.lo) && !other.contains(self.hi)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.lo, self.hi)
    }
}

/// A set of edges, iterated in lexicographic order.
pub type EdgeSet = BTreeSet<Edge>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphError {
    SelfLoop(Vertex),
    DuplicateEdge(Edge),
    MissingEdge(Edge),
    MissingVertex(Vertex),
    Empty,
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::SelfLoop(v) => write!(f, "self-loop at vertex {v}"),
            GraphError::DuplicateEdge(e) => write!(f, "duplicate edge {e}"),
            GraphError::MissingEdge(e) => write!(f, "{e} is not an edge of the graph"),
            GraphError::MissingVertex(v) => write!(f, "vertex {v} is not in the graph"),
            GraphError::Empty => f.write_str("graph has no vertices"),
        }
    }
}

impl core::error::Error for GraphError {}

/// Immutable simple undirected graph.
///
/// Adjacency is kept symmetric and sorted, so iteration order over vertices,
/// neighbours and edges is deterministic.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Graph {
    adj: BTreeMap<Vertex, BTreeSet<Vertex>>,
    edge_count: usize,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("vertices", &self.adj.keys().collect::<Vec<_>>())
            .field("edges", &self.edges().map(|e| e.ends()).collect::<Vec<_>>())
            .finish()
    }
}

impl Graph {
    /// Graph on vertices `0..n` with the given edges. Duplicates and loops are
    /// rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        Self::with_vertices(0..n as Vertex, edges)
    }

    /// Graph on an explicit vertex set. Edge endpoints must be in the set.
    pub fn with_vertices<V, I>(vertices: V, edges: I) -> Result<Self, GraphError>
    where
        V: IntoIterator<Item = Vertex>,
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut g = Graph {
            adj: vertices.into_iter().map(|v| (v, BTreeSet::new())).collect(),
            edge_count: 0,
        };
        for (a, b) in edges {
            if a == b {
                return Err(GraphError::SelfLoop(a));
            }
            for v in [a, b] {
                if !g.adj.contains_key(&v) {
                    return Err(GraphError::MissingVertex(v));
                }
            }
            if !g.insert(Edge::new(a, b)) {
                return Err(GraphError::DuplicateEdge(Edge::new(a, b)));
            }
        }
        Ok(g)
    }

    /// Returns false if the edge was already present.
    pub(crate) fn insert(&mut self, e: Edge) -> bool {
        let fresh = self.adj.entry(e.lo).or_default().insert(e.hi);
        self.adj.entry(e.hi).or_default().insert(e.lo);
        if fresh {
            self.edge_count += 1;
        }
        fresh
    }

    pub(crate) fn remove(&mut self, e: Edge) -> bool {
        let had = self.adj.get_mut(&e.lo).is_some_and(|s| s.remove(&e.hi));
        if had {
            self.adj.get_mut(&e.hi).map(|s| s.remove(&e.lo));
            self.edge_count -= 1;
        }
        had
    }

    pub(crate) fn add_vertex(&mut self, v: Vertex) {
        self.adj.entry(v).or_default();
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.adj.keys().copied()
    }

    pub fn contains_vertex(&self, v: Vertex) -> bool {
        self.adj.contains_key(&v)
    }

    pub fn neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.adj.get(&v).into_iter().flatten().copied()
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj.get(&v).map_or(0, BTreeSet::len)
    }

    pub fn has_edge(&self, a: Vertex, b: Vertex) -> bool {
        self.adj.get(&a).is_some_and(|s| s.contains(&b))
    }

    pub fn contains_edge(&self, e: Edge) -> bool {
        self.has_edge(e.lo, e.hi)
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.adj
            .iter()
            .flat_map(|(&u, nbrs)| nbrs.range(u + 1..).map(move |&v| Edge { lo: u, hi: v }))
    }

    pub fn edge_set(&self) -> EdgeSet {
        self.edges().collect()
    }

    /// Largest vertex id, if any.
    pub fn max_vertex(&self) -> Option<Vertex> {
        self.adj.keys().next_back().copied()
    }

    /// δ(G).
    pub fn min_degree(&self) -> Result<usize, GraphError> {
        self.adj.values().map(BTreeSet::len).min().ok_or(GraphError::Empty)
    }

    pub fn max_degree(&self) -> usize {
        self.adj.values().map(BTreeSet::len).max().unwrap_or(0)
    }

    /// G∖e. The vertex set is unchanged.
    pub fn delete_edge(&self, e: Edge) -> Result<Graph, GraphError> {
        let mut g = self.clone();
        if !g.remove(e) {
            return Err(GraphError::MissingEdge(e));
        }
        Ok(g)
    }

    /// G∖S for an edge set; every edge of `set` must be present.
    pub fn delete_edges<'a, I>(&self, set: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = &'a Edge>,
    {
        let mut g = self.clone();
        for &e in set {
            if !g.remove(e) {
                return Err(GraphError::MissingEdge(e));
            }
        }
        Ok(g)
    }

    /// G + e for a non-edge between existing vertices.
    pub fn add_edge(&self, e: Edge) -> Result<Graph, GraphError> {
        for v in [e.lo, e.hi] {
            if !self.contains_vertex(v) {
                return Err(GraphError::MissingVertex(v));
            }
        }
        let mut g = self.clone();
        if !g.insert(e) {
            return Err(GraphError::DuplicateEdge(e));
        }
        Ok(g)
    }

    /// Induced subgraph on `keep`.
    pub fn induced(&self, keep: &BTreeSet<Vertex>) -> Graph {
        let mut g = Graph::default();
        for &v in keep {
            if self.contains_vertex(v) {
                g.add_vertex(v);
            }
        }
        for e in self.edges() {
            if keep.contains(&e.lo) && keep.contains(&e.hi) {
                g.insert(e);
            }
        }
        g
    }

    /// Contracts every edge of `set`, merging parallel edges and dropping
    /// loops. Each merged class is named by its lowest id.
    pub fn contract_edges(&self, set: &EdgeSet) -> Result<Contraction, GraphError> {
        if let Some(&e) = set.iter().find(|e| !self.contains_edge(**e)) {
            return Err(GraphError::MissingEdge(e));
        }
        // union-find keyed by vertex id, representative = min id
        let mut parent: BTreeMap<Vertex, Vertex> = self.vertices().map(|v| (v, v)).collect();
        fn find(parent: &mut BTreeMap<Vertex, Vertex>, v: Vertex) -> Vertex {
            let p = parent[&v];
            if p == v {
                return v;
            }
            let r = find(parent, p);
            parent.insert(v, r);
            r
        }
        for e in set {
            let a = find(&mut parent, e.lo);
            let b = find(&mut parent, e.hi);
            if a != b {
                let (keep, drop) = if a < b { (a, b) } else { (b, a) };
                parent.insert(drop, keep);
            }
        }
        let mapping: BTreeMap<Vertex, Vertex> = self
            .vertices()
            .map(|v| (v, find(&mut parent, v)))
            .collect();

        let mut graph = Graph::default();
        for &r in mapping.values() {
            graph.add_vertex(r);
        }
        let mut merged_parallel = 0;
        for e in self.edges() {
            let (a, b) = (mapping[&e.lo], mapping[&e.hi]);
            if a == b {
                continue;
            }
            if !graph.insert(Edge::new(a, b)) {
                merged_parallel += 1;
            }
        }
        // edges of `set` became loops; the rest that collapsed were parallel
        let loops = self.edges().filter(|e| mapping[&e.lo] == mapping[&e.hi]).count();
        Ok(Contraction {
            graph,
            mapping,
            contracted: set.clone(),
            dropped_loops: loops,
            merged_parallel,
        })
    }

    /// Connected components as vertex sets, ordered by their smallest vertex.
    pub fn components(&self) -> Vec<BTreeSet<Vertex>> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for start in self.vertices() {
            if !seen.insert(start) {
                continue;
            }
            let mut comp = BTreeSet::from([start]);
            let mut stack = Vec::from([start]);
            while let Some(v) = stack.pop() {
                for w in self.neighbors(v) {
                    if seen.insert(w) {
                        comp.insert(w);
                        stack.push(w);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Two-colouring, if the graph is bipartite.
    pub fn bipartition(&self) -> Option<BTreeMap<Vertex, bool>> {
        let mut side = BTreeMap::new();
        for start in self.vertices() {
            if side.contains_key(&start) {
                continue;
            }
            side.insert(start, false);
            let mut stack = Vec::from([start]);
            while let Some(v) = stack.pop() {
                let s = side[&v];
                for w in self.neighbors(v) {
                    match side.get(&w) {
                        Some(&t) if t == s => return None,
                        Some(_) => {}
                        None => {
                            side.insert(w, !s);
                            stack.push(w);
                        }
                    }
                }
            }
        }
        Some(side)
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Relabels vertices to `0..n` in id order.
    pub fn compacted(&self) -> (Graph, BTreeMap<Vertex, Vertex>) {
        let map: BTreeMap<Vertex, Vertex> = self
            .vertices()
            .enumerate()
            .map(|(i, v)| (v, i as Vertex))
            .collect();
        let mut g = Graph::default();
        for &v in map.values() {
            g.add_vertex(v);
        }
        for e in self.edges() {
            g.insert(Edge::new(map[&e.lo], map[&e.hi]));
        }
        (g, map)
    }
}

/// Result of [`Graph::contract_edges`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Contraction {
    pub graph: Graph,
    /// old id → id of the merged class (its lowest member).
    pub mapping: BTreeMap<Vertex, Vertex>,
    pub contracted: EdgeSet,
    /// Number of edges that became loops (includes the contracted edges).
    pub dropped_loops: usize,
    /// Number of edges discarded because they duplicated another edge.
    pub merged_parallel: usize,
}

impl Contraction {
    /// Original vertices merged into `class`.
    pub fn class_of(&self, class: Vertex) -> BTreeSet<Vertex> {
        self.mapping
            .iter()
            .filter(|&(_, &r)| r == class)
            .map(|(&v, _)| v)
            .collect()
    }

    /// True when simplification removed edges beyond the contracted ones.
    pub fn simplified(&self) -> bool {
        self.merged_parallel > 0 || self.dropped_loops > self.contracted.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;

    #[test]
    fn delete_edge_examples() {
        let k5 = generate::complete(5);
        let g = k5.delete_edge(Edge::new(0, 1)).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (5, 9));

        let c3 = generate::cycle(3);
        let p = c3.delete_edge(Edge::new(0, 2)).unwrap();
        assert_eq!(p.edge_count(), 2);
        assert_eq!(p.degree(1), 2);

        let c4 = generate::cycle(4);
        assert_eq!(
            c4.delete_edge(Edge::new(0, 2)),
            Err(GraphError::MissingEdge(Edge::new(0, 2)))
        );
    }

    #[test]
    fn contract_examples() {
        let c4 = generate::cycle(4);
        let h = c4.contract_edges(&EdgeSet::from([Edge::new(1, 2)])).unwrap();
        assert_eq!(h.graph, Graph::with_vertices([0, 1, 3], [(0, 1), (1, 3), (3, 0)]).unwrap());
        assert_eq!(h.mapping[&2], 1);
        assert!(!h.simplified());

        let c3 = generate::cycle(3);
        let h = c3.contract_edges(&EdgeSet::from([Edge::new(0, 1)])).unwrap();
        assert_eq!(h.graph, Graph::with_vertices([0, 2], [(0, 2)]).unwrap());
        assert_eq!(h.merged_parallel, 1);
        assert!(h.simplified());
    }

    #[test]
    fn contract_two_degree_two_vertices() {
        // G' = K3,3 minus {0,3}: vertices 0 and 3 have degree two; contract
        // each into its lowest neighbour.
        let g = generate::complete_bipartite(3, 3).delete_edge(Edge::new(0, 3)).unwrap();
        let e1 = Edge::new(0, 4);
        let e2 = Edge::new(3, 1);
        let h = g.contract_edges(&EdgeSet::from([e1, e2])).unwrap();
        assert_eq!(h.graph.vertex_count(), 4);
        assert_eq!(h.class_of(0), BTreeSet::from([0, 4]));
        assert_eq!(h.class_of(1), BTreeSet::from([1, 3]));
        assert_eq!(h.merged_parallel, 0);
        assert_eq!(h.graph.edge_count(), 6);
    }

    #[test]
    fn min_degree_examples() {
        assert_eq!(generate::complete(5).min_degree(), Ok(4));
        assert_eq!(generate::complete_bipartite(3, 3).min_degree(), Ok(3));
        assert_eq!(generate::complete_bipartite(1, 4).min_degree(), Ok(1));
        assert_eq!(Graph::default().min_degree(), Err(GraphError::Empty));
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(
            Graph::from_edges(3, [(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge(Edge::new(0, 1)))
        );
        assert_eq!(Graph::from_edges(3, [(1, 1)]), Err(GraphError::SelfLoop(1)));
        assert_eq!(Graph::from_edges(3, [(1, 3)]), Err(GraphError::MissingVertex(3)));
    }

    #[test]
    fn bipartite_detection() {
        assert!(generate::complete_bipartite(3, 3).is_bipartite());
        assert!(!generate::complete(3).is_bipartite());
        assert!(generate::cube().is_bipartite());
    }
}
