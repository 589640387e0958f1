//! Path-addition planarity test with embedding (Demoucron, Malgrange and
//! Pertuiset), run per biconnected block. Blocks are glued at cut vertices
//! by concatenating their rotations.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{Edge, Graph, Vertex};

/// Cyclic neighbour order per vertex.
pub type Rotation = BTreeMap<Vertex, Vec<Vertex>>;

/// A planar rotation system for `g`, or `None` if `g` is not planar.
/// Works on disconnected graphs; isolated vertices get an empty rotation.
pub fn planar_rotation(g: &Graph) -> Option<Rotation> {
    let (n, m) = (g.vertex_count(), g.edge_count());
    if n >= 3 && m > 3 * n - 6 {
        return None;
    }
    let mut rotation: Rotation = g.vertices().map(|v| (v, Vec::new())).collect();
    for block in biconnected_blocks(g) {
        if block.len() == 1 {
            let e = block[0];
            rotation.get_mut(&e.lo()).unwrap().push(e.hi());
            rotation.get_mut(&e.hi()).unwrap().push(e.lo());
            continue;
        }
        let vs: BTreeSet<Vertex> = block.iter().flat_map(|e| [e.lo(), e.hi()]).collect();
        let bg = Graph::with_vertices(vs.iter().copied(), block.iter().map(|e| e.ends()))
            .expect("block edges are simple");
        let faces = embed_biconnected(&bg)?;
        for (v, order) in rotation_from_faces(&faces) {
            rotation.get_mut(&v).unwrap().extend(order);
        }
    }
    Some(rotation)
}

pub fn is_planar(g: &Graph) -> bool {
    planar_rotation(g).is_some()
}

/// Derives the rotation of a block from its consistently oriented faces:
/// consecutive walk vertices `u, v, w` mean `w` follows `u` around `v`.
fn rotation_from_faces(faces: &[Vec<Vertex>]) -> Rotation {
    let mut succ: BTreeMap<Vertex, BTreeMap<Vertex, Vertex>> = BTreeMap::new();
    for f in faces {
        let l = f.len();
        for i in 0..l {
            let (u, v, w) = (f[(i + l - 1) % l], f[i], f[(i + 1) % l]);
            succ.entry(v).or_default().insert(u, w);
        }
    }
    succ.into_iter()
        .map(|(v, next)| {
            let start = *next.keys().next().unwrap();
            let mut order = vec![start];
            let mut cur = next[&start];
            while cur != start {
                order.push(cur);
                cur = next[&cur];
            }
            debug_assert_eq!(order.len(), next.len());
            (v, order)
        })
        .collect()
}

/// Edge sets of the biconnected blocks (bridges are single-edge blocks).
pub fn biconnected_blocks(g: &Graph) -> Vec<Vec<Edge>> {
    struct State<'a> {
        g: &'a Graph,
        disc: BTreeMap<Vertex, usize>,
        low: BTreeMap<Vertex, usize>,
        time: usize,
        stack: Vec<Edge>,
        blocks: Vec<Vec<Edge>>,
    }
    fn visit(s: &mut State<'_>, v: Vertex, parent: Option<Vertex>) {
        s.time += 1;
        s.disc.insert(v, s.time);
        s.low.insert(v, s.time);
        let nbrs: Vec<Vertex> = s.g.neighbors(v).collect();
        for w in nbrs {
            if Some(w) == parent {
                continue;
            }
            match s.disc.get(&w).copied() {
                None => {
                    s.stack.push(Edge::new(v, w));
                    visit(s, w, Some(v));
                    let lw = s.low[&w];
                    if lw < s.low[&v] {
                        s.low.insert(v, lw);
                    }
                    if lw >= s.disc[&v] {
                        let mut block = Vec::new();
                        let top = Edge::new(v, w);
                        while let Some(e) = s.stack.pop() {
                            block.push(e);
                            if e == top {
                                break;
                            }
                        }
                        block.sort();
                        s.blocks.push(block);
                    }
                }
                Some(dw) if dw < s.disc[&v] => {
                    s.stack.push(Edge::new(v, w));
                    if dw < s.low[&v] {
                        s.low.insert(v, dw);
                    }
                }
                Some(_) => {}
            }
        }
    }
    let mut s = State {
        g,
        disc: BTreeMap::new(),
        low: BTreeMap::new(),
        time: 0,
        stack: Vec::new(),
        blocks: Vec::new(),
    };
    for v in g.vertices() {
        if !s.disc.contains_key(&v) {
            visit(&mut s, v, None);
        }
    }
    s.blocks
}

/// Some cycle of a graph that has one.
fn find_cycle(g: &Graph) -> Option<Vec<Vertex>> {
    let mut parent: BTreeMap<Vertex, Vertex> = BTreeMap::new();
    let mut depth: BTreeMap<Vertex, usize> = BTreeMap::new();
    for root in g.vertices() {
        if depth.contains_key(&root) {
            continue;
        }
        depth.insert(root, 0);
        let mut stack = vec![(root, g.neighbors(root).collect::<Vec<_>>(), 0usize)];
        while let Some((v, nbrs, idx)) = stack.last_mut() {
            let v = *v;
            if *idx == nbrs.len() {
                stack.pop();
                continue;
            }
            let w = nbrs[*idx];
            *idx += 1;
            if parent.get(&v) == Some(&w) {
                continue;
            }
            if let Some(&dw) = depth.get(&w) {
                if dw < depth[&v] {
                    // back edge v -> ancestor w
                    let mut cyc = vec![v];
                    let mut x = v;
                    while x != w {
                        x = parent[&x];
                        cyc.push(x);
                    }
                    cyc.reverse();
                    return Some(cyc);
                }
                continue;
            }
            parent.insert(w, v);
            depth.insert(w, depth[&v] + 1);
            stack.push((w, g.neighbors(w).collect(), 0));
        }
    }
    None
}

struct Fragment {
    attachments: BTreeSet<Vertex>,
    /// Vertices not yet embedded; empty for a chord.
    inner: BTreeSet<Vertex>,
    chord: Option<Edge>,
}

/// Oriented faces of a planar embedding of a biconnected graph with at
/// least three vertices, or `None` if it is not planar.
fn embed_biconnected(g: &Graph) -> Option<Vec<Vec<Vertex>>> {
    let cycle = find_cycle(g)?;
    let mut in_h: BTreeSet<Vertex> = cycle.iter().copied().collect();
    let mut h_edges: BTreeSet<Edge> = (0..cycle.len())
        .map(|i| Edge::new(cycle[i], cycle[(i + 1) % cycle.len()]))
        .collect();
    let mut rev = cycle.clone();
    rev.reverse();
    let mut faces = vec![cycle, rev];

    while h_edges.len() < g.edge_count() {
        let fragments = fragments(g, &in_h, &h_edges);
        let face_sets: Vec<BTreeSet<Vertex>> =
            faces.iter().map(|f| f.iter().copied().collect()).collect();
        let mut choice: Option<(usize, usize)> = None;
        for (fi, frag) in fragments.iter().enumerate() {
            let admissible: Vec<usize> = face_sets
                .iter()
                .enumerate()
                .filter(|(_, fs)| frag.attachments.is_subset(fs))
                .map(|(i, _)| i)
                .collect();
            match admissible.len() {
                0 => return None,
                1 => {
                    choice = Some((fi, admissible[0]));
                    break;
                }
                _ => {
                    if choice.is_none() {
                        choice = Some((fi, admissible[0]));
                    }
                }
            }
        }
        let (fi, face_idx) = choice.expect("unembedded edges leave a fragment");
        let path = fragment_path(g, &fragments[fi]);

        for w in path.windows(2) {
            h_edges.insert(Edge::new(w[0], w[1]));
        }
        in_h.extend(path.iter().copied());

        let face = faces.swap_remove(face_idx);
        let (a, b) = (path[0], *path.last().unwrap());
        let ia = face.iter().position(|&x| x == a).unwrap();
        let rotated: Vec<Vertex> = face[ia..].iter().chain(&face[..ia]).copied().collect();
        let jb = rotated.iter().position(|&x| x == b).unwrap();
        let interior = &path[1..path.len() - 1];

        let mut first: Vec<Vertex> = rotated[..=jb].to_vec();
        first.extend(interior.iter().rev());
        let mut second: Vec<Vertex> = path[..path.len() - 1].to_vec();
        second.extend(&rotated[jb..]);
        faces.push(first);
        faces.push(second);
    }
    Some(faces)
}

fn fragments(g: &Graph, in_h: &BTreeSet<Vertex>, h_edges: &BTreeSet<Edge>) -> Vec<Fragment> {
    let mut out = Vec::new();
    for e in g.edges() {
        if in_h.contains(&e.lo()) && in_h.contains(&e.hi()) && !h_edges.contains(&e) {
            out.push(Fragment {
                attachments: BTreeSet::from([e.lo(), e.hi()]),
                inner: BTreeSet::new(),
                chord: Some(e),
            });
        }
    }
    let mut seen: BTreeSet<Vertex> = BTreeSet::new();
    for start in g.vertices() {
        if in_h.contains(&start) || !seen.insert(start) {
            continue;
        }
        let mut inner = BTreeSet::from([start]);
        let mut attachments = BTreeSet::new();
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for w in g.neighbors(v) {
                if in_h.contains(&w) {
                    attachments.insert(w);
                } else if seen.insert(w) {
                    inner.insert(w);
                    stack.push(w);
                }
            }
        }
        out.push(Fragment {
            attachments,
            inner,
            chord: None,
        });
    }
    out
}

/// A path through the fragment between two distinct attachments.
fn fragment_path(g: &Graph, frag: &Fragment) -> Vec<Vertex> {
    if let Some(e) = frag.chord {
        return vec![e.lo(), e.hi()];
    }
    let a = *frag.attachments.iter().next().unwrap();
    let mut prev: BTreeMap<Vertex, Vertex> = BTreeMap::new();
    let mut queue = VecDeque::new();
    for s in g.neighbors(a).filter(|s| frag.inner.contains(s)) {
        prev.insert(s, a);
        queue.push_back(s);
    }
    while let Some(v) = queue.pop_front() {
        if let Some(b) = g
            .neighbors(v)
            .find(|w| *w != a && frag.attachments.contains(w))
        {
            let mut path = vec![b, v];
            let mut x = v;
            while let Some(&p) = prev.get(&x) {
                path.push(p);
                if p == a {
                    break;
                }
                x = p;
            }
            path.reverse();
            return path;
        }
        for w in g.neighbors(v) {
            if frag.inner.contains(&w) && !prev.contains_key(&w) {
                prev.insert(w, v);
                queue.push_back(w);
            }
        }
    }
    unreachable!("fragment of a biconnected graph has two attachments")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;

    #[test]
    fn blocks_of_two_triangles_sharing_a_vertex() {
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]).unwrap();
        let blocks = biconnected_blocks(&g);
        assert_eq!(blocks.len(), 2);
        assert!(blocks.iter().all(|b| b.len() == 3));
    }

    #[test]
    fn blocks_with_bridge() {
        let g = Graph::from_edges(4, [(0, 1), (1, 2), (2, 0), (2, 3)]).unwrap();
        let mut sizes: Vec<usize> = biconnected_blocks(&g).iter().map(Vec::len).collect();
        sizes.sort();
        assert_eq!(sizes, [1, 3]);
    }

    #[test]
    fn planarity_of_small_families() {
        assert!(is_planar(&generate::complete(4)));
        assert!(!is_planar(&generate::complete(5)));
        assert!(!is_planar(&generate::complete_bipartite(3, 3)));
        assert!(!is_planar(&generate::petersen()));
        assert!(is_planar(&generate::cube()));
        assert!(is_planar(&generate::dodecahedron()));
        assert!(is_planar(&generate::icosahedron()));
        assert!(is_planar(&generate::complete_bipartite(2, 7)));
        assert!(is_planar(&Graph::default()));
    }
}
