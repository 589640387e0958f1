//! Cycles of small μ.
//!
//! For a cycle `C`, μ(C) is the smallest value of Σ (d(u) − 2) over the
//! vertices of `C` with one vertex left out; leaving out a vertex of maximum
//! degree attains it. That vertex is the *apex*.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::{Contraction, Edge, EdgeSet, Graph, GraphError, Vertex};
use crate::planar::{is_planar, RotationEmbedding};

/// How a witness was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provenance {
    /// A light face of a planar embedding.
    FaceWeight,
    /// The delete/contract/lift recursion.
    Induction,
    /// Exhaustive enumeration of short cycles.
    Exhaustive,
    /// Exhaustive search, after the recursion could not continue.
    Fallback(FallbackReason),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FallbackReason {
    /// Merging parallel edges after a contraction left a vertex of degree < 3.
    DegreeDrop,
    /// The lifted cycle exceeded `|E0| + 10`.
    BoundExceeded,
}

/// A cycle together with its apex and μ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleWitness {
    pub cycle: Vec<Vertex>,
    pub apex: Vertex,
    pub mu: usize,
    pub provenance: Provenance,
}

impl CycleWitness {
    fn new(g: &Graph, cycle: Vec<Vertex>, provenance: Provenance) -> Result<Self, LightCycleError> {
        let (mu, apex) = mu(g, &cycle)?;
        Ok(CycleWitness {
            cycle,
            apex,
            mu,
            provenance,
        })
    }

    pub fn len(&self) -> usize {
        self.cycle.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycle.is_empty()
    }

    pub fn is_fallback(&self) -> bool {
        matches!(self.provenance, Provenance::Fallback(_))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LightCycleError {
    NotACycle,
    MinDegreeBelowThree(usize),
    NotPlanar,
    /// `G ∖ E0` is not planar.
    RemainderNotPlanar,
    NoCycle,
    /// No face with positive charge has a simple boundary.
    NoLightFace,
    Graph(GraphError),
}

impl fmt::Display for LightCycleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LightCycleError::NotACycle => f.write_str("vertex sequence is not a simple cycle"),
            LightCycleError::MinDegreeBelowThree(d) => write!(f, "minimum degree {d} is below 3"),
            LightCycleError::NotPlanar => f.write_str("graph is not planar"),
            LightCycleError::RemainderNotPlanar => f.write_str("removing E0 does not leave a planar graph"),
            LightCycleError::NoCycle => f.write_str("no cycle within the length limit"),
            LightCycleError::NoLightFace => f.write_str("no light face with a simple boundary"),
            LightCycleError::Graph(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for LightCycleError {}

impl From<GraphError> for LightCycleError {
    fn from(e: GraphError) -> Self {
        LightCycleError::Graph(e)
    }
}

/// True when `seq` lists the vertices of a simple cycle of `g` in order.
pub fn is_cycle(g: &Graph, seq: &[Vertex]) -> bool {
    let l = seq.len();
    if l < 3 {
        return false;
    }
    let distinct: BTreeSet<Vertex> = seq.iter().copied().collect();
    distinct.len() == l && (0..l).all(|i| g.has_edge(seq[i], seq[(i + 1) % l]))
}

/// μ(C) and its apex: the lowest-id vertex of maximum degree on the cycle.
pub fn mu(g: &Graph, cycle: &[Vertex]) -> Result<(usize, Vertex), LightCycleError> {
    if !is_cycle(g, cycle) {
        return Err(LightCycleError::NotACycle);
    }
    let apex = *cycle
        .iter()
        .max_by_key(|&&v| (g.degree(v), core::cmp::Reverse(v)))
        .unwrap();
    let total: usize = cycle.iter().map(|&v| g.degree(v) - 2).sum();
    Ok((total - (g.degree(apex) - 2), apex))
}

fn require_min_degree3(g: &Graph) -> Result<(), LightCycleError> {
    let d = g.min_degree()?;
    if d < 3 {
        return Err(LightCycleError::MinDegreeBelowThree(d));
    }
    Ok(())
}

/// A cycle with μ ≤ 10 in a planar graph of minimum degree ≥ 3.
///
/// Embeds the component holding the lowest vertex and returns the first face
/// whose charge ω(f) − ℓ(f)/2 + 1 is positive. Such a face exists because the
/// charges sum to 2, and its length is at most 5.
pub fn light_cycle_planar(g: &Graph) -> Result<CycleWitness, LightCycleError> {
    require_min_degree3(g)?;
    if !is_planar(g) {
        return Err(LightCycleError::NotPlanar);
    }
    let comp = g.components().swap_remove(0);
    let sub = g.induced(&comp);
    let emb = RotationEmbedding::embed(&sub).map_err(|_| LightCycleError::NotPlanar)?;
    let face = emb
        .face_records()
        .into_iter()
        .find(|f| f.charge() > crate::Rational::from_integer(0) && f.is_simple_cycle())
        .ok_or(LightCycleError::NoLightFace)?;
    CycleWitness::new(g, face.boundary, Provenance::FaceWeight)
}

/// The numbers behind a chord step: the lifted cycle `C` has both ends of the
/// deleted edge on it, and the returned cycle is the part of `C ∪ e` that
/// keeps the apex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChordChain {
    /// μ of the returned cycle in G.
    pub mu_result: usize,
    /// Σ (d_G − 2) over the returned cycle without the apex.
    pub sum_kept: usize,
    /// Σ (d_G − 2) over `C` without the apex.
    pub sum_lifted: usize,
    /// Number of vertices of the discarded cycle (both chord ends included).
    pub discarded_len: usize,
    /// Σ (d_G − 2) over the interior of the discarded cycle.
    pub discarded_interior_sum: usize,
    pub min_degree: usize,
    /// Σ (d_{G∖e} − 2) over `C` without the apex.
    pub sum_lifted_without_e: usize,
    /// μ of the cycle returned for the contracted graph.
    pub mu_contracted: usize,
    /// Lifting preserved degrees (no parallel edges were merged).
    pub degree_preserving: bool,
}

impl ChordChain {
    /// Checks each inequality of the chain
    /// μ_G(C1) ≤ Σ_{C1∖v} ≤ Σ_{C∖v} − (|C2| − 2)(δ − 2) ≤ Σ'_{C∖v} + 2 − 1
    /// ≤ μ_H + 1, returning the index of the first failing step.
    pub fn first_violation(&self) -> Option<usize> {
        let drop = (self.discarded_len - 2) * (self.min_degree - 2);
        let steps = [
            self.mu_result <= self.sum_kept,
            self.sum_kept + self.discarded_interior_sum == self.sum_lifted,
            self.discarded_interior_sum >= drop,
            drop >= 1,
            self.sum_lifted <= self.sum_lifted_without_e + 2,
            !self.degree_preserving || self.sum_lifted_without_e <= self.mu_contracted,
            !self.degree_preserving || self.mu_result <= self.mu_contracted + 1,
        ];
        steps.iter().position(|ok| !ok)
    }
}

/// What happened at one level of the recursion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InductionStep {
    pub removed: Edge,
    pub contracted: EdgeSet,
    /// Contraction merged parallel edges.
    pub simplified: bool,
    pub mu_contracted: usize,
    pub mu_lifted: usize,
    pub chord: Option<ChordChain>,
    pub fallback: Option<FallbackReason>,
}

/// A cycle with μ ≤ |E0| + 10 in a graph of minimum degree ≥ 3 for which
/// `g ∖ e0` is planar.
pub fn light_cycle_general(g: &Graph, e0: &EdgeSet) -> Result<CycleWitness, LightCycleError> {
    light_cycle_general_traced(g, e0).map(|(w, _)| w)
}

/// [`light_cycle_general`] plus a record of every recursion level, outermost
/// first.
pub fn light_cycle_general_traced(
    g: &Graph,
    e0: &EdgeSet,
) -> Result<(CycleWitness, Vec<InductionStep>), LightCycleError> {
    require_min_degree3(g)?;
    if let Some(&e) = e0.iter().find(|e| !g.contains_edge(**e)) {
        return Err(GraphError::MissingEdge(e).into());
    }
    if !is_planar(&g.delete_edges(e0)?) {
        return Err(LightCycleError::RemainderNotPlanar);
    }
    let mut trace = Vec::new();
    let w = recurse(g, e0, &mut trace)?;
    trace.reverse();
    Ok((w, trace))
}

fn recurse(
    g: &Graph,
    e0: &EdgeSet,
    trace: &mut Vec<InductionStep>,
) -> Result<CycleWitness, LightCycleError> {
    let Some(&e) = e0.iter().next() else {
        return light_cycle_planar(g);
    };
    let t = e0.len();
    let (v1, v2) = e.ends();
    let reduced = g.delete_edge(e)?;

    // a degree-2 end is contracted into a neighbour; prefer an edge outside
    // E0 so that contracting it stays inside the planar part
    let mut e1 = EdgeSet::new();
    for vi in [v1, v2] {
        if g.degree(vi) == 3 {
            let nbrs: Vec<Vertex> = reduced.neighbors(vi).collect();
            let pick = nbrs
                .iter()
                .copied()
                .find(|&u| !e0.contains(&Edge::new(vi, u)))
                .unwrap_or(nbrs[0]);
            e1.insert(Edge::new(vi, pick));
        }
    }
    let contraction = reduced.contract_edges(&e1)?;
    let h = &contraction.graph;
    let fallback_step = |reason| InductionStep {
        removed: e,
        contracted: e1.clone(),
        simplified: contraction.simplified(),
        mu_contracted: 0,
        mu_lifted: 0,
        chord: None,
        fallback: Some(reason),
    };

    if h.min_degree()? < 3 {
        trace.push(fallback_step(FallbackReason::DegreeDrop));
        return fallback(g, FallbackReason::DegreeDrop);
    }
    let e0_h: EdgeSet = e0
        .iter()
        .filter(|&&x| x != e)
        .filter_map(|x| Edge::try_new(contraction.mapping[&x.lo()], contraction.mapping[&x.hi()]))
        .collect();
    debug_assert!(is_planar(&h.delete_edges(&e0_h)?));

    let inner = recurse(h, &e0_h, trace)?;
    let lifted = lift(&reduced, &contraction, &inner.cycle);
    debug_assert!(is_cycle(&reduced, &lifted));

    // apex of the contracted cycle, pulled back to its heaviest member on C
    let apex = contraction
        .class_of(inner.apex)
        .into_iter()
        .filter(|v| lifted.contains(v))
        .max_by_key(|&v| (reduced.degree(v), core::cmp::Reverse(v)))
        .unwrap();

    let pos1 = lifted.iter().position(|&x| x == v1);
    let pos2 = lifted.iter().position(|&x| x == v2);
    let (result, chord) = match (pos1, pos2) {
        (Some(p1), Some(p2)) => {
            let (i, j) = if p1 < p2 { (p1, p2) } else { (p2, p1) };
            let a: Vec<Vertex> = lifted[i..=j].to_vec();
            let b: Vec<Vertex> = lifted[j..].iter().chain(&lifted[..=i]).copied().collect();
            let (kept, discarded) = match (a.contains(&apex), b.contains(&apex)) {
                (true, true) => {
                    if mu(g, &a)?.0 <= mu(g, &b)?.0 {
                        (a, b)
                    } else {
                        (b, a)
                    }
                }
                (true, false) => (a, b),
                _ => (b, a),
            };
            let sum_excl = |graph: &Graph, cyc: &[Vertex]| -> usize {
                cyc.iter()
                    .filter(|&&u| u != apex)
                    .map(|&u| graph.degree(u) - 2)
                    .sum()
            };
            let interior: Vec<Vertex> = discarded
                .iter()
                .copied()
                .filter(|&u| u != v1 && u != v2)
                .collect();
            let chain = ChordChain {
                mu_result: mu(g, &kept)?.0,
                sum_kept: sum_excl(g, &kept),
                sum_lifted: sum_excl(g, &lifted),
                discarded_len: discarded.len(),
                discarded_interior_sum: interior.iter().map(|&u| g.degree(u) - 2).sum(),
                min_degree: g.min_degree()?,
                sum_lifted_without_e: sum_excl(&reduced, &lifted),
                mu_contracted: inner.mu,
                degree_preserving: !contraction.simplified(),
            };
            (kept, Some(chain))
        }
        _ => (lifted, None),
    };

    let provenance = match inner.provenance {
        Provenance::Fallback(r) => Provenance::Fallback(r),
        _ => Provenance::Induction,
    };
    let witness = CycleWitness::new(g, result, provenance)?;
    if witness.mu > t + 10 {
        trace.push(fallback_step(FallbackReason::BoundExceeded));
        return fallback(g, FallbackReason::BoundExceeded);
    }
    trace.push(InductionStep {
        removed: e,
        contracted: e1,
        simplified: contraction.simplified(),
        mu_contracted: inner.mu,
        mu_lifted: witness.mu,
        chord,
        fallback: None,
    });
    Ok(witness)
}

fn fallback(g: &Graph, reason: FallbackReason) -> Result<CycleWitness, LightCycleError> {
    let mut w = brute_force_min_mu(g, g.vertex_count())?;
    w.provenance = Provenance::Fallback(reason);
    Ok(w)
}

/// Expands a cycle of the contracted graph into a cycle of `reduced`: each
/// contracted edge used by the cycle becomes the path through its merged
/// vertices.
fn lift(reduced: &Graph, c: &Contraction, cycle: &[Vertex]) -> Vec<Vertex> {
    let l = cycle.len();
    // (exit of class j, entry of class j+1)
    let links: Vec<(Vertex, Vertex)> = (0..l)
        .map(|j| {
            let (from, to) = (cycle[j], cycle[(j + 1) % l]);
            c.class_of(from)
                .into_iter()
                .find_map(|x| {
                    reduced
                        .neighbors(x)
                        .find(|y| c.mapping[y] == to)
                        .map(|y| (x, y))
                })
                .expect("an edge of the contracted graph comes from an edge of the original")
        })
        .collect();
    let mut out = Vec::new();
    for j in 0..l {
        let entry = links[(j + l - 1) % l].1;
        let exit = links[j].0;
        out.extend(class_path(reduced, c, cycle[j], entry, exit));
    }
    out
}

/// Path from `a` to `b` inside a contracted class, along contracted edges.
fn class_path(reduced: &Graph, c: &Contraction, class: Vertex, a: Vertex, b: Vertex) -> Vec<Vertex> {
    let members = c.class_of(class);
    let mut prev = alloc::collections::BTreeMap::new();
    let mut stack = Vec::from([a]);
    prev.insert(a, a);
    while let Some(x) = stack.pop() {
        for y in reduced.neighbors(x) {
            if members.contains(&y) && c.contracted.contains(&Edge::new(x, y)) && !prev.contains_key(&y) {
                prev.insert(y, x);
                stack.push(y);
            }
        }
    }
    let mut path = Vec::from([b]);
    let mut x = b;
    while x != a {
        x = prev[&x];
        path.push(x);
    }
    path.reverse();
    path
}

/// The minimum of μ over all simple cycles with at most `max_len` vertices,
/// by exhaustive enumeration. Ties go to the lexicographically first cycle
/// in canonical form (lowest vertex first, smaller neighbour second).
pub fn brute_force_min_mu(g: &Graph, max_len: usize) -> Result<CycleWitness, LightCycleError> {
    struct Search<'a> {
        g: &'a Graph,
        max_len: usize,
        path: Vec<Vertex>,
        on_path: BTreeSet<Vertex>,
        best: Option<(usize, Vec<Vertex>)>,
    }
    impl Search<'_> {
        fn weight(&self, v: Vertex) -> usize {
            self.g.degree(v).saturating_sub(2)
        }
        fn go(&mut self, sum: usize, heaviest: usize) {
            let start = self.path[0];
            let last = *self.path.last().unwrap();
            let nbrs: Vec<Vertex> = self.g.neighbors(last).collect();
            for w in nbrs {
                if w == start && self.path.len() >= 3 && self.path[1] < last {
                    let value = sum - heaviest;
                    if self.best.as_ref().is_none_or(|(b, _)| value < *b) {
                        self.best = Some((value, self.path.clone()));
                    }
                    continue;
                }
                if w <= start || self.on_path.contains(&w) || self.path.len() == self.max_len {
                    continue;
                }
                let c = self.weight(w);
                let (s, h) = (sum + c, heaviest.max(c));
                // Σ − max never decreases as the path grows
                if self.best.as_ref().is_some_and(|(b, _)| s - h >= *b) {
                    continue;
                }
                self.path.push(w);
                self.on_path.insert(w);
                self.go(s, h);
                self.on_path.remove(&w);
                self.path.pop();
            }
        }
    }
    let mut s = Search {
        g,
        max_len,
        path: Vec::new(),
        on_path: BTreeSet::new(),
        best: None,
    };
    for v in g.vertices() {
        s.path = Vec::from([v]);
        s.on_path = BTreeSet::from([v]);
        let c = s.weight(v);
        s.go(c, c);
    }
    let (_, cycle) = s.best.ok_or(LightCycleError::NoCycle)?;
    CycleWitness::new(g, cycle, Provenance::Exhaustive)
}
