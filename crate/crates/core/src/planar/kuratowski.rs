//! Kuratowski subdivisions by greedy edge deletion.

use alloc::vec::Vec;

use super::dmp::is_planar;
use crate::graph::{EdgeSet, Graph, Vertex};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KuratowskiKind {
    K5,
    K33,
}

/// A subdivision of K5 or K3,3 contained in a non-planar graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KuratowskiWitness {
    pub kind: KuratowskiKind,
    pub edges: EdgeSet,
    /// Vertices of degree ≥ 3 in the subdivision.
    pub branch_vertices: Vec<Vertex>,
}

/// Finds an edge-minimal non-planar subgraph of `g`, which by Kuratowski's
/// theorem is a subdivision of K5 or K3,3. `None` if `g` is planar.
pub fn kuratowski_subgraph(g: &Graph) -> Option<KuratowskiWitness> {
    if is_planar(g) {
        return None;
    }
    let mut h = g.clone();
    for e in g.edges() {
        h.remove(e);
        if is_planar(&h) {
            h.insert(e);
        }
    }
    let branch_vertices: Vec<Vertex> = h.vertices().filter(|&v| h.degree(v) >= 3).collect();
    let kind = if branch_vertices.len() == 5 {
        KuratowskiKind::K5
    } else {
        debug_assert_eq!(branch_vertices.len(), 6);
        KuratowskiKind::K33
    };
    Some(KuratowskiWitness {
        kind,
        edges: h.edge_set(),
        branch_vertices,
    })
}
