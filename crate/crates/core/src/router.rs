//! Inserting edges into planar embeddings along shortest dual paths, and
//! drawings built by inserting a whole removal set one edge at a time.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::vec::Vec;
use core::fmt;

use crate::bounds::bound_thm32;
use crate::graph::{Edge, EdgeSet, Graph, Vertex};
use crate::planar::{insert_after, triangulate_tracked, EmbedError, Rotation, RotationEmbedding};
use crate::skewness::SkewnessCertificate;
use crate::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RouteError {
    MissingVertex(Vertex),
    EdgePresent(Edge),
    /// Removing the certificate edges left a non-planar graph.
    BaseNotPlanar,
    /// The route does not fit the embedding.
    InvalidRoute,
    Embed(EmbedError),
}

impl fmt::Display for RouteError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RouteError::MissingVertex(v) => write!(f, "vertex {v} is not in the embedding"),
            RouteError::EdgePresent(e) => write!(f, "edge {e} is already present"),
            RouteError::BaseNotPlanar => f.write_str("graph minus the removal set is not planar"),
            RouteError::InvalidRoute => f.write_str("route does not match the embedding"),
            RouteError::Embed(e) => write!(f, "embedding failed: {e}"),
        }
    }
}

impl core::error::Error for RouteError {}

impl From<EmbedError> for RouteError {
    fn from(e: EmbedError) -> Self {
        RouteError::Embed(e)
    }
}

/// A curve for `edge` from its lower to its higher endpoint.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeRoute {
    pub edge: Edge,
    /// Faces visited, starting at a face of `edge.lo()`.
    pub face_sequence: Vec<usize>,
    /// `crossed[i]` separates `face_sequence[i]` and `face_sequence[i + 1]`.
    pub crossed: Vec<Edge>,
}

impl EdgeRoute {
    pub fn crossing_count(&self) -> usize {
        self.crossed.len()
    }

    /// Checks the route against the dual of `emb`.
    pub fn is_valid_for(&self, emb: &RotationEmbedding) -> bool {
        let (a, b) = self.edge.ends();
        let (Some(&first), Some(&last)) = (self.face_sequence.first(), self.face_sequence.last())
        else {
            return false;
        };
        if self.crossed.len() + 1 != self.face_sequence.len()
            || !emb.faces()[first].contains(&a)
            || !emb.faces()[last].contains(&b)
        {
            return false;
        }
        self.crossed.iter().enumerate().all(|(i, c)| {
            let (f, g) = (self.face_sequence[i], self.face_sequence[i + 1]);
            let sides = (emb.face_of((c.lo(), c.hi())), emb.face_of((c.hi(), c.lo())));
            !c.contains(a)
                && !c.contains(b)
                && (sides == (Some(f), Some(g)) || sides == (Some(g), Some(f)))
        })
    }
}

/// Shortest route for `e` in the dual of `emb`.
///
/// Sources are the faces at `e.lo()`, targets the faces at `e.hi()`; a face
/// holding both endpoints gives a route without crossings. With
/// `triangulate_first` the search runs in a triangulation of `emb` where
/// crossing a fill edge is free, and the path is projected back.
pub fn insert_edge(
    emb: &RotationEmbedding,
    e: Edge,
    triangulate_first: bool,
) -> Result<EdgeRoute, RouteError> {
    route_with_free_edges(emb, e, triangulate_first, &EdgeSet::new())
}

fn route_with_free_edges(
    emb: &RotationEmbedding,
    e: Edge,
    triangulate_first: bool,
    free: &EdgeSet,
) -> Result<EdgeRoute, RouteError> {
    let g = emb.graph();
    for v in [e.lo(), e.hi()] {
        if !g.contains_vertex(v) {
            return Err(RouteError::MissingVertex(v));
        }
    }
    if g.contains_edge(e) {
        return Err(RouteError::EdgePresent(e));
    }
    if !triangulate_first || g.vertex_count() < 3 {
        let (faces, crossed) = dual_path(emb, e, free);
        return Ok(EdgeRoute {
            edge: e,
            face_sequence: faces,
            crossed,
        });
    }
    let tri = triangulate_tracked(emb);
    let mut free_tri = free.clone();
    free_tri.extend(tri.fill.iter().copied());
    let (tri_faces, tri_crossed) = dual_path(&tri.embedding, e, &free_tri);
    let project = |f: usize| {
        let walk = &tri.embedding.faces()[f];
        tri.origin[&(walk[0], walk[1])]
    };
    let mut face_sequence = Vec::from([project(tri_faces[0])]);
    let mut crossed = Vec::new();
    for (i, c) in tri_crossed.into_iter().enumerate() {
        if tri.fill.contains(&c) {
            continue;
        }
        face_sequence.push(project(tri_faces[i + 1]));
        crossed.push(c);
    }
    Ok(EdgeRoute {
        edge: e,
        face_sequence,
        crossed,
    })
}

/// 0-1 breadth-first search over faces; crossing an edge of `free` costs
/// nothing. Returns the face path and the edges crossed.
fn dual_path(emb: &RotationEmbedding, e: Edge, free: &EdgeSet) -> (Vec<usize>, Vec<Edge>) {
    let mut adj: Vec<Vec<(usize, Edge)>> = alloc::vec![Vec::new(); emb.face_count()];
    for arc in emb.dual().arcs {
        if arc.left != arc.right {
            adj[arc.left].push((arc.right, arc.primal));
            adj[arc.right].push((arc.left, arc.primal));
        }
    }
    let sources = emb.faces_at(e.lo());
    let targets: BTreeSet<usize> = emb.faces_at(e.hi()).into_iter().collect();
    let mut dist = alloc::vec![usize::MAX; emb.face_count()];
    let mut parent: Vec<Option<(usize, Edge)>> = alloc::vec![None; emb.face_count()];
    let mut queue = VecDeque::new();
    for &s in &sources {
        dist[s] = 0;
        queue.push_back(s);
    }
    while let Some(f) = queue.pop_front() {
        for &(g, c) in &adj[f] {
            let w = usize::from(!free.contains(&c));
            if dist[f] + w < dist[g] {
                dist[g] = dist[f] + w;
                parent[g] = Some((f, c));
                if w == 0 {
                    queue.push_front(g);
                } else {
                    queue.push_back(g);
                }
            }
        }
    }
    let target = *targets
        .iter()
        .min_by_key(|&&t| (dist[t], t))
        .expect("every vertex of a connected embedding lies on a face");
    let mut faces = Vec::from([target]);
    let mut crossed = Vec::new();
    let mut f = target;
    while let Some((p, c)) = parent[f] {
        faces.push(p);
        crossed.push(c);
        f = p;
    }
    faces.reverse();
    crossed.reverse();
    // stop at the first face that already reaches the target endpoint
    let cut = faces.iter().position(|f| targets.contains(f)).unwrap();
    faces.truncate(cut + 1);
    crossed.truncate(cut);
    (faces, crossed)
}

/// Result of adding a route to an embedding.
#[derive(Clone, Debug)]
pub struct Planarized {
    pub embedding: RotationEmbedding,
    /// New degree-4 vertices, in the order of `route.crossed`.
    pub dummies: Vec<Vertex>,
}

/// Adds the routed edge, replacing each crossing by a fresh vertex above the
/// current id range that splits both the crossed edge and the new edge.
pub fn planarize_route(emb: &RotationEmbedding, route: &EdgeRoute) -> Result<Planarized, RouteError> {
    if !route.is_valid_for(emb) {
        return Err(RouteError::InvalidRoute);
    }
    let (a, b) = route.edge.ends();
    let mut graph = emb.graph().clone();
    let mut rotation: Rotation = emb.rotation().clone();
    let first_id = graph.max_vertex().map_or(0, |v| v + 1);
    let dummies: Vec<Vertex> = (0..route.crossed.len() as Vertex).map(|i| first_id + i).collect();
    let mut chain = Vec::from([a]);
    chain.extend(&dummies);
    chain.push(b);

    let corner = |v: Vertex, face: usize| {
        emb.rotation_at(v)
            .iter()
            .copied()
            .find(|&u| emb.face_of((u, v)) == Some(face))
            .expect("the face passes through v")
    };
    let after_a = corner(a, route.face_sequence[0]);
    let after_b = corner(b, *route.face_sequence.last().unwrap());

    for (i, &c) in route.crossed.iter().enumerate() {
        let p = dummies[i];
        let (x, y) = c.ends();
        let (prev, next) = (chain[i], chain[i + 2]);
        for (v, old) in [(x, y), (y, x)] {
            let slot = rotation.get_mut(&v).unwrap();
            let j = slot.iter().position(|&w| w == old).unwrap();
            slot[j] = p;
        }
        let order = if emb.face_of((x, y)) == Some(route.face_sequence[i]) {
            Vec::from([x, prev, y, next])
        } else {
            Vec::from([x, next, y, prev])
        };
        rotation.insert(p, order);
        graph.remove(c);
        graph.add_vertex(p);
        graph.insert(Edge::new(x, p));
        graph.insert(Edge::new(p, y));
    }
    insert_after(&mut rotation, a, after_a, chain[1]);
    insert_after(&mut rotation, b, after_b, chain[chain.len() - 2]);
    for w in chain.windows(2) {
        graph.insert(Edge::new(w[0], w[1]));
    }
    let embedding = RotationEmbedding::from_rotation(graph, rotation)?;
    Ok(Planarized { embedding, dummies })
}

/// One crossing in a drawing.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Crossing {
    /// The inserted edge.
    pub edge: Edge,
    /// The input edge it crosses.
    pub with: Edge,
    /// Position along `edge`, counted from its lower endpoint.
    pub order_on_edge: usize,
}

/// A drawing of a graph: a planar embedding of the graph minus a removal
/// set, with the removed edges routed in one at a time.
///
/// When the planar part is disconnected, connector edges join its
/// components so that faces are well defined; they are not part of the
/// graph, crossing them costs nothing and their crossings are not counted.
#[derive(Clone, Debug)]
pub struct PlanarizationDrawing {
    pub n: usize,
    pub base_graph: Graph,
    /// Embedding of `base_graph` plus the connectors; `None` when there are
    /// no edges at all.
    pub base: Option<RotationEmbedding>,
    pub connectors: EdgeSet,
    /// Routes in insertion order, each in the planarization current at the
    /// time.
    pub routes: Vec<EdgeRoute>,
    pub crossings: Vec<Crossing>,
    pub crossing_count: usize,
    /// Real crossing vertex → (inserted edge, crossed input edge).
    pub dummy_map: BTreeMap<Vertex, (Edge, Edge)>,
    pub planarization: Option<RotationEmbedding>,
    /// Input edge (or connector) each planarization edge belongs to.
    pub segment_origin: BTreeMap<Edge, Edge>,
    pub bound_thm32: Rational,
    pub bound_met: bool,
}

impl PlanarizationDrawing {
    /// The planarization without connector edges.
    pub fn planarized_graph(&self) -> Graph {
        match &self.planarization {
            None => self.base_graph.clone(),
            Some(p) => {
                let mut g = p.graph().clone();
                for (seg, origin) in &self.segment_origin {
                    if self.connectors.contains(origin) {
                        g.remove(*seg);
                    }
                }
                g
            }
        }
    }

    /// Removes every routed edge and merges the split edges back, returning
    /// the resulting rotation system (base plus connectors).
    pub fn strip_routes(&self) -> Option<Rotation> {
        let p = self.planarization.as_ref()?;
        let base = self.base.as_ref()?;
        let inserted: EdgeSet = self.routes.iter().map(|r| r.edge).collect();
        let mut rotation = p.rotation().clone();
        let mut unresolved: BTreeSet<Vertex> = rotation.keys().copied().filter(|v| !base.graph().contains_vertex(*v)).collect();
        for (seg, origin) in &self.segment_origin {
            if inserted.contains(origin) {
                for (v, w) in [(seg.lo(), seg.hi()), (seg.hi(), seg.lo())] {
                    if let Some(order) = rotation.get_mut(&v) {
                        order.retain(|&x| x != w);
                    }
                }
            }
        }
        while let Some(p) = unresolved.pop_first() {
            let order = rotation.remove(&p).unwrap();
            match order[..] {
                [] => {}
                [x, y] => {
                    for (v, other) in [(x, y), (y, x)] {
                        let slot = rotation.get_mut(&v).unwrap();
                        let j = slot.iter().position(|&w| w == p).unwrap();
                        slot[j] = other;
                    }
                }
                _ => return None,
            }
        }
        Some(rotation)
    }
}

/// Embeds `g ∖ cert.removed` and inserts the removed edges in ascending
/// order, planarizing after each, with `triangulate_first` routing.
pub fn build_drawing(g: &Graph, cert: &SkewnessCertificate) -> Result<PlanarizationDrawing, RouteError> {
    let base_graph = g.delete_edges(&cert.removed).map_err(|_| RouteError::InvalidRoute)?;
    let n = g.vertex_count();
    let bound = bound_thm32(n, cert.removed.len());
    let mut drawing = PlanarizationDrawing {
        n,
        base_graph: base_graph.clone(),
        base: None,
        connectors: EdgeSet::new(),
        routes: Vec::new(),
        crossings: Vec::new(),
        crossing_count: 0,
        dummy_map: BTreeMap::new(),
        planarization: None,
        segment_origin: BTreeMap::new(),
        bound_thm32: bound,
        bound_met: true,
    };
    if !crate::planar::is_planar(&base_graph) {
        return Err(RouteError::BaseNotPlanar);
    }
    let mut working = base_graph.clone();
    let comps = base_graph.components();
    if let Some((first, rest)) = comps.split_first() {
        let hub = *first.first().unwrap();
        for comp in rest {
            let c = Edge::new(hub, *comp.first().unwrap());
            working.insert(c);
            drawing.connectors.insert(c);
        }
    }
    if working.edge_count() == 0 {
        return Ok(drawing);
    }
    let rotation = crate::planar::planar_rotation(&working).ok_or(RouteError::BaseNotPlanar)?;
    let mut emb = RotationEmbedding::from_rotation(working.clone(), rotation)?;
    drawing.base = Some(emb.clone());
    drawing.segment_origin = working.edges().map(|e| (e, e)).collect();

    for &e in &cert.removed {
        if drawing.connectors.remove(&e) {
            // the connector already sits where the edge goes
            let face = emb.face_of((e.lo(), e.hi())).unwrap();
            drawing.routes.push(EdgeRoute {
                edge: e,
                face_sequence: Vec::from([face]),
                crossed: Vec::new(),
            });
            continue;
        }
        let free: EdgeSet = drawing
            .segment_origin
            .iter()
            .filter(|(_, o)| drawing.connectors.contains(o))
            .map(|(s, _)| *s)
            .collect();
        let route = route_with_free_edges(&emb, e, true, &free)?;
        let planarized = planarize_route(&emb, &route)?;
        let mut order = 0;
        for (&c, &p) in route.crossed.iter().zip(&planarized.dummies) {
            let origin = drawing.segment_origin.remove(&c).unwrap();
            drawing.segment_origin.insert(Edge::new(c.lo(), p), origin);
            drawing.segment_origin.insert(Edge::new(p, c.hi()), origin);
            if !drawing.connectors.contains(&origin) {
                drawing.dummy_map.insert(p, (e, origin));
                drawing.crossings.push(Crossing {
                    edge: e,
                    with: origin,
                    order_on_edge: order,
                });
                order += 1;
            }
        }
        let mut chain = Vec::from([e.lo()]);
        chain.extend(&planarized.dummies);
        chain.push(e.hi());
        for w in chain.windows(2) {
            drawing.segment_origin.insert(Edge::new(w[0], w[1]), e);
        }
        drawing.routes.push(route);
        emb = planarized.embedding;
    }
    drawing.crossing_count = drawing.dummy_map.len();
    drawing.bound_met = Rational::from_integer(drawing.crossing_count as i128) <= bound;
    drawing.planarization = Some(emb);
    Ok(drawing)
}
