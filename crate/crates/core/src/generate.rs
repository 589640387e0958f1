//! Graph families: complete graphs, named polyhedra, random triangulations.

use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::graph::{Edge, EdgeSet, Graph, Vertex};

pub fn complete(n: usize) -> Graph {
    let n = n as Vertex;
    Graph::from_edges(n as usize, (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))))
        .expect("complete graph is simple")
}

/// K_{a,b}: sides `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let (a, b) = (a as Vertex, b as Vertex);
    Graph::from_edges(
        (a + b) as usize,
        (0..a).flat_map(|x| (a..a + b).map(move |y| (x, y))),
    )
    .expect("complete bipartite graph is simple")
}

pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3);
    let n = n as Vertex;
    Graph::from_edges(n as usize, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle is simple")
}

pub fn path(n: usize) -> Graph {
    let n = n as Vertex;
    Graph::from_edges(n as usize, (1..n).map(|i| (i - 1, i))).expect("path is simple")
}

/// Generalised Petersen graph GP(n, k): outer cycle `0..n`, inner vertices
/// `n..2n` joined `i ~ i+k`.
pub fn generalized_petersen(n: usize, k: usize) -> Graph {
    let (n, k) = (n as Vertex, k as Vertex);
    let outer = (0..n).map(move |i| (i, (i + 1) % n));
    let spokes = (0..n).map(move |i| (i, n + i));
    let inner = (0..n).map(move |i| (n + i, n + (i + k) % n));
    Graph::from_edges(2 * n as usize, outer.chain(spokes).chain(inner))
        .expect("generalized Petersen graph is simple")
}

pub fn petersen() -> Graph {
    generalized_petersen(5, 2)
}

pub fn dodecahedron() -> Graph {
    generalized_petersen(10, 2)
}

pub fn cube() -> Graph {
    let edges = (0..8u32)
        .flat_map(|a| (0..3).map(move |bit| (a, a ^ (1 << bit))))
        .filter(|&(a, b)| a < b);
    Graph::from_edges(8, edges).expect("cube is simple")
}

/// Top vertex 0, upper ring 1..=5, lower ring 6..=10, bottom 11.
pub fn icosahedron() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5u32 {
        let up = 1 + i;
        let up_next = 1 + (i + 1) % 5;
        let low = 6 + i;
        let low_next = 6 + (i + 1) % 5;
        edges.extend([
            (0, up),
            (up, up_next),
            (low, low_next),
            (11, low),
            (up, low),
            (up, low_next),
        ]);
    }
    Graph::from_edges(12, edges).expect("icosahedron is simple")
}

/// Named graphs accepted by [`named`].
pub const NAMED: &[&str] = &["petersen", "dodecahedron", "icosahedron", "cube"];

pub fn named(name: &str) -> Option<Graph> {
    match name {
        "petersen" => Some(petersen()),
        "dodecahedron" => Some(dodecahedron()),
        "icosahedron" => Some(icosahedron()),
        "cube" => Some(cube()),
        _ => None,
    }
}

/// Random maximal planar graph on `0..n` (n ≥ 3): vertex stacking into random
/// faces followed by random diagonal flips.
pub fn random_maximal_planar<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Graph {
    assert!(n >= 3, "maximal planar graphs need at least 3 vertices");
    // faces as consistently oriented triangles
    let mut faces: Vec<[Vertex; 3]> = Vec::from([[0, 1, 2], [0, 2, 1]]);
    let mut g = cycle(3);
    for x in 3..n as Vertex {
        g.add_vertex(x);
        let i = rng.gen_range(0..faces.len());
        let [a, b, c] = faces.swap_remove(i);
        faces.extend([[a, b, x], [b, c, x], [c, a, x]]);
        for v in [a, b, c] {
            g.insert(Edge::new(v, x));
        }
    }
    for _ in 0..2 * n {
        let i = rng.gen_range(0..faces.len());
        let k = rng.gen_range(0..3);
        let [a, b, c] = rotate(faces[i], k);
        let Some(j) = faces.iter().position(|f| {
            let f = *f;
            (0..3).any(|r| {
                let [p, q, _] = rotate(f, r);
                p == b && q == a
            })
        }) else {
            continue;
        };
        let d = faces[j].iter().copied().find(|&v| v != a && v != b).unwrap();
        if g.has_edge(c, d) || g.degree(a) <= 3 || g.degree(b) <= 3 {
            continue;
        }
        g.remove(Edge::new(a, b));
        g.insert(Edge::new(c, d));
        faces[i] = [a, d, c];
        faces[j] = [d, b, c];
    }
    debug_assert_eq!(g.edge_count(), 3 * n - 6);
    g
}

fn rotate(f: [Vertex; 3], k: usize) -> [Vertex; 3] {
    [f[k % 3], f[(k + 1) % 3], f[(k + 2) % 3]]
}

/// Random planar graph with δ ≥ 3: a random triangulation thinned by deleting
/// edges whose endpoints both keep degree at least 3.
pub fn random_planar_min_degree3<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Graph {
    assert!(n >= 4);
    let mut g = random_maximal_planar(n, rng);
    let mut edges: Vec<Edge> = g.edges().collect();
    edges.shuffle(rng);
    for e in edges {
        if g.degree(e.lo()) > 3 && g.degree(e.hi()) > 3 && rng.gen_bool(0.5) {
            g.remove(e);
        }
    }
    g
}

/// Adds `t` distinct random non-edges. Returns the new graph and the added
/// edges. Panics if fewer than `t` non-edges exist.
pub fn add_random_non_edges<R: Rng + ?Sized>(g: &Graph, t: usize, rng: &mut R) -> (Graph, EdgeSet) {
    let vs: Vec<Vertex> = g.vertices().collect();
    let mut non_edges: Vec<Edge> = vs
        .iter()
        .enumerate()
        .flat_map(|(i, &a)| vs[i + 1..].iter().map(move |&b| Edge::new(a, b)))
        .filter(|e| !g.contains_edge(*e))
        .collect();
    assert!(non_edges.len() >= t, "not enough non-edges");
    non_edges.shuffle(rng);
    let added: EdgeSet = non_edges.into_iter().take(t).collect();
    let mut h = g.clone();
    for &e in &added {
        h.insert(e);
    }
    (h, added)
}

/// Random maximal planar graph on `n` vertices plus `t` random extra edges.
pub fn planar_plus<R: Rng + ?Sized>(n: usize, t: usize, rng: &mut R) -> (Graph, EdgeSet) {
    let base = random_maximal_planar(n, rng);
    add_random_non_edges(&base, t, rng)
}
