//! Combinatorial embeddings: rotation systems, faces, face weights, duals and
//! triangulation.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use num_traits::Zero;

use super::dmp::{planar_rotation, Rotation};
use crate::graph::{Edge, EdgeSet, Graph, Vertex};
use crate::Rational;

/// A directed edge `(tail, head)`.
pub type Dart = (Vertex, Vertex);

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EmbedError {
    /// The graph has no planar embedding.
    NonPlanar,
    Disconnected,
    /// Embeddings need at least one edge.
    NoEdges,
    /// A supplied rotation does not list exactly the neighbours of a vertex.
    BadRotation(Vertex),
    /// A supplied rotation traces faces violating Euler's formula.
    NotGenusZero { vertices: usize, edges: usize, faces: usize },
}

impl fmt::Display for EmbedError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EmbedError::NonPlanar => f.write_str("graph is not planar"),
            EmbedError::Disconnected => f.write_str("graph is not connected"),
            EmbedError::NoEdges => f.write_str("graph has no edges"),
            EmbedError::BadRotation(v) => write!(f, "rotation at vertex {v} does not match its neighbours"),
            EmbedError::NotGenusZero { vertices, edges, faces } => write!(
                f,
                "rotation is not planar: {vertices} - {edges} + {faces} != 2"
            ),
        }
    }
}

impl core::error::Error for EmbedError {}

/// A planar rotation system of a connected graph together with its faces.
///
/// Following dart `(u, v)` around its face leads to `(v, w)` where `w` is
/// the successor of `u` in the rotation at `v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RotationEmbedding {
    graph: Graph,
    rotation: Rotation,
    faces: Vec<Vec<Vertex>>,
    dart_face: BTreeMap<Dart, usize>,
}

impl RotationEmbedding {
    /// Embeds a connected planar graph.
    pub fn embed(g: &Graph) -> Result<Self, EmbedError> {
        if g.edge_count() == 0 {
            return Err(EmbedError::NoEdges);
        }
        if !g.is_connected() {
            return Err(EmbedError::Disconnected);
        }
        let rotation = planar_rotation(g).ok_or(EmbedError::NonPlanar)?;
        Self::from_rotation(g.clone(), rotation)
    }

    /// Validates a rotation system against `graph`, traces its faces and
    /// checks Euler's formula.
    pub fn from_rotation(graph: Graph, rotation: Rotation) -> Result<Self, EmbedError> {
        if graph.edge_count() == 0 {
            return Err(EmbedError::NoEdges);
        }
        if !graph.is_connected() {
            return Err(EmbedError::Disconnected);
        }
        for v in graph.vertices() {
            let order = rotation.get(&v).ok_or(EmbedError::BadRotation(v))?;
            let mut sorted = order.clone();
            sorted.sort_unstable();
            if !sorted.iter().copied().eq(graph.neighbors(v)) {
                return Err(EmbedError::BadRotation(v));
            }
        }
        if rotation.len() != graph.vertex_count() {
            let extra = rotation.keys().find(|v| !graph.contains_vertex(**v)).copied();
            return Err(EmbedError::BadRotation(extra.unwrap_or(0)));
        }
        let (faces, dart_face) = trace_faces(&graph, &rotation);
        let (v, e, f) = (graph.vertex_count(), graph.edge_count(), faces.len());
        if v + f != e + 2 {
            return Err(EmbedError::NotGenusZero { vertices: v, edges: e, faces: f });
        }
        Ok(RotationEmbedding {
            graph,
            rotation,
            faces,
            dart_face,
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn rotation(&self) -> &Rotation {
        &self.rotation
    }

    pub fn rotation_at(&self, v: Vertex) -> &[Vertex] {
        &self.rotation[&v]
    }

    /// Successor of `u` in the rotation at `v`.
    pub fn succ(&self, v: Vertex, u: Vertex) -> Vertex {
        succ_in(&self.rotation, v, u)
    }

    /// Face walks; the face of dart `(walk[i], walk[i+1])`.
    pub fn faces(&self) -> &[Vec<Vertex>] {
        &self.faces
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn face_of(&self, dart: Dart) -> Option<usize> {
        self.dart_face.get(&dart).copied()
    }

    pub fn dart_faces(&self) -> &BTreeMap<Dart, usize> {
        &self.dart_face
    }

    /// Faces with `v` on their boundary, ascending, without repeats.
    pub fn faces_at(&self, v: Vertex) -> Vec<usize> {
        let mut fs: Vec<usize> = self.rotation[&v].iter().map(|&w| self.dart_face[&(v, w)]).collect();
        fs.sort_unstable();
        fs.dedup();
        fs
    }

    /// |V| − |E| + |F|.
    pub fn euler_characteristic(&self) -> i64 {
        self.graph.vertex_count() as i64 - self.graph.edge_count() as i64 + self.faces.len() as i64
    }

    pub fn face_records(&self) -> Vec<FaceRecord> {
        faces_and_weights(self)
    }

    pub fn dual(&self) -> DualGraph {
        DualGraph::of(self)
    }
}

pub(crate) fn succ_in(rotation: &Rotation, v: Vertex, u: Vertex) -> Vertex {
    let order = &rotation[&v];
    let i = order.iter().position(|&x| x == u).expect("u is a neighbour of v");
    order[(i + 1) % order.len()]
}

fn trace_faces(graph: &Graph, rotation: &Rotation) -> (Vec<Vec<Vertex>>, BTreeMap<Dart, usize>) {
    // successor tables make tracing linear in the number of darts
    let next: BTreeMap<Dart, Vertex> = rotation
        .iter()
        .flat_map(|(&v, order)| {
            let l = order.len();
            (0..l).map(move |i| ((order[i], v), order[(i + 1) % l]))
        })
        .collect();
    let mut dart_face = BTreeMap::new();
    let mut faces = Vec::new();
    for e in graph.edges() {
        for start in [(e.lo(), e.hi()), (e.hi(), e.lo())] {
            if dart_face.contains_key(&start) {
                continue;
            }
            let id = faces.len();
            let mut walk = Vec::new();
            let mut d = start;
            loop {
                dart_face.insert(d, id);
                walk.push(d.0);
                d = (d.1, next[&d]);
                if d == start {
                    break;
                }
            }
            faces.push(walk);
        }
    }
    (faces, dart_face)
}

/// One face of an embedding with its boundary length ℓ(f) and weight
/// ω(f) = Σ 1/d(v) over the boundary walk, counting a vertex once per
/// appearance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceRecord {
    pub boundary: Vec<Vertex>,
    pub length: usize,
    pub weight: Rational,
}

impl FaceRecord {
    /// True when the walk visits no vertex twice (and has length ≥ 3).
    pub fn is_simple_cycle(&self) -> bool {
        let mut vs = self.boundary.clone();
        vs.sort_unstable();
        vs.dedup();
        self.length >= 3 && vs.len() == self.length
    }

    /// ω(f) − ℓ(f)/2 + 1; the sum of this over all faces is 2.
    pub fn charge(&self) -> Rational {
        self.weight - Rational::new(self.length as i128, 2) + Rational::from_integer(1)
    }
}

pub fn faces_and_weights(emb: &RotationEmbedding) -> Vec<FaceRecord> {
    let g = emb.graph();
    emb.faces()
        .iter()
        .map(|walk| {
            let weight = walk.iter().fold(Rational::zero(), |acc, &v| {
                acc + Rational::new(1, g.degree(v) as i128)
            });
            FaceRecord {
                boundary: walk.clone(),
                length: walk.len(),
                weight,
            }
        })
        .collect()
}

/// One dual arc per primal edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DualArc {
    /// Face of the dart `(lo, hi)`.
    pub left: usize,
    /// Face of the dart `(hi, lo)`.
    pub right: usize,
    pub primal: Edge,
}

/// The dual multigraph of an embedding.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualGraph {
    pub node_count: usize,
    pub arcs: Vec<DualArc>,
}

impl DualGraph {
    pub fn of(emb: &RotationEmbedding) -> Self {
        let arcs = emb
            .graph()
            .edges()
            .map(|e| DualArc {
                left: emb.face_of((e.lo(), e.hi())).unwrap(),
                right: emb.face_of((e.hi(), e.lo())).unwrap(),
                primal: e,
            })
            .collect();
        DualGraph {
            node_count: emb.face_count(),
            arcs,
        }
    }

    /// Degree of a dual node; a loop counts twice.
    pub fn degree(&self, node: usize) -> usize {
        self.arcs
            .iter()
            .map(|a| (a.left == node) as usize + (a.right == node) as usize)
            .sum()
    }

    pub fn is_regular(&self, d: usize) -> bool {
        (0..self.node_count).all(|f| self.degree(f) == d)
    }

    /// Arcs between two nodes, in primal-edge order.
    pub fn arcs_between(&self, a: usize, b: usize) -> impl Iterator<Item = &DualArc> {
        self.arcs
            .iter()
            .filter(move |x| (x.left == a && x.right == b) || (x.left == b && x.right == a))
    }
}

/// A triangulation plus, for each of its darts, the face of the input
/// embedding it lies in.
#[derive(Clone, Debug)]
pub struct Triangulation {
    pub embedding: RotationEmbedding,
    pub fill: EdgeSet,
    pub origin: BTreeMap<Dart, usize>,
}

/// Adds chords until every face is a triangle; returns the filled embedding
/// and the added edges. Needs at least three vertices.
pub fn triangulate(emb: &RotationEmbedding) -> (RotationEmbedding, EdgeSet) {
    let t = triangulate_tracked(emb);
    (t.embedding, t.fill)
}

/// Like [`triangulate`], keeping the map from new darts to original faces.
///
/// Chords fan out from the lowest-id vertex of the first non-triangular face;
/// a chord that would duplicate an existing edge is skipped in favour of the
/// next valid pair on the walk.
pub fn triangulate_tracked(emb: &RotationEmbedding) -> Triangulation {
    assert!(emb.graph().vertex_count() >= 3, "triangulation needs three vertices");
    let mut graph = emb.graph().clone();
    let mut rotation = emb.rotation().clone();
    let mut origin = emb.dart_faces().clone();
    let mut fill = EdgeSet::new();
    let mut faces = emb.faces().to_vec();
    loop {
        let Some(face) = faces.iter().find(|f| f.len() > 3) else {
            break;
        };
        let face_origin = origin[&(face[0], face[1])];
        let l = face.len();
        let low = (0..l).min_by_key(|&i| (face[i], i)).unwrap();
        let walk: Vec<Vertex> = face[low..].iter().chain(&face[..low]).copied().collect();
        let (i, j) = (0..l)
            .flat_map(|i| (i + 2..l).map(move |j| (i, j)))
            .find(|&(i, j)| {
                !(i == 0 && j == l - 1)
                    && walk[i] != walk[j]
                    && !graph.has_edge(walk[i], walk[j])
            })
            .expect("a face of length > 3 in a simple planar graph admits a chord");
        let (a, b) = (walk[i], walk[j]);
        insert_after(&mut rotation, a, walk[(i + l - 1) % l], b);
        insert_after(&mut rotation, b, walk[j - 1], a);
        graph.insert(Edge::new(a, b));
        fill.insert(Edge::new(a, b));
        origin.insert((a, b), face_origin);
        origin.insert((b, a), face_origin);
        faces = trace_faces(&graph, &rotation).0;
    }
    let embedding = RotationEmbedding::from_rotation(graph, rotation)
        .expect("chords inside faces keep the embedding planar");
    Triangulation {
        embedding,
        fill,
        origin,
    }
}

/// Places `x` right after `after` in the rotation at `v`.
pub(crate) fn insert_after(rotation: &mut Rotation, v: Vertex, after: Vertex, x: Vertex) {
    let order = rotation.get_mut(&v).unwrap();
    let i = order.iter().position(|&y| y == after).unwrap();
    order.insert(i + 1, x);
}
