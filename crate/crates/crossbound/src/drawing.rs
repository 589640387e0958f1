//! Drawing certificates as JSON, and pictures as SVG.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use crossbound_core::router::PlanarizationDrawing;
use crossbound_core::{Edge, Vertex};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossingJson {
    pub with: [Vertex; 2],
    pub order_on_edge: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InsertedJson {
    pub edge: [Vertex; 2],
    pub faces: Vec<usize>,
    pub crossings: Vec<CrossingJson>,
}

/// The canonical drawing certificate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DrawingJson {
    pub n: usize,
    pub base_edges: Vec<[Vertex; 2]>,
    pub inserted: Vec<InsertedJson>,
    pub crossing_count: usize,
    pub bound_thm32: String,
    pub bound_met: bool,
}

fn pair(e: Edge) -> [Vertex; 2] {
    [e.lo(), e.hi()]
}

impl DrawingJson {
    pub fn from_drawing(d: &PlanarizationDrawing) -> Self {
        let inserted = d
            .routes
            .iter()
            .map(|r| InsertedJson {
                edge: pair(r.edge),
                faces: r.face_sequence.clone(),
                crossings: d
                    .crossings
                    .iter()
                    .filter(|c| c.edge == r.edge)
                    .map(|c| CrossingJson {
                        with: pair(c.with),
                        order_on_edge: c.order_on_edge,
                    })
                    .collect(),
            })
            .collect();
        DrawingJson {
            n: d.n,
            base_edges: d.base_graph.edges().map(pair).collect(),
            inserted,
            crossing_count: d.crossing_count,
            bound_thm32: d.bound_thm32.to_string(),
            bound_met: d.bound_met,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("plain data serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }
}

type Point = (f64, f64);

const SIZE: f64 = 400.0;
const MARGIN: f64 = 30.0;

/// Barycentric coordinates: the outer face is pinned to a circle and every
/// other vertex sits at the mean of its neighbours. An outer face with fewer
/// than three distinct vertices is replaced by a temporary triangle joined
/// to all of its vertices.
fn layout(d: &PlanarizationDrawing) -> BTreeMap<Vertex, Point> {
    let Some(p) = &d.planarization else {
        let vs: Vec<Vertex> = d.base_graph.vertices().collect();
        return circle(&vs);
    };
    let g = p.graph();
    let mut adj: BTreeMap<Vertex, Vec<Vertex>> = g.vertices().map(|v| (v, g.neighbors(v).collect())).collect();
    let outer_face = (0..p.face_count())
        .max_by_key(|&f| (p.faces()[f].len(), std::cmp::Reverse(f)))
        .unwrap();
    let mut outer: Vec<Vertex> = Vec::new();
    for &v in &p.faces()[outer_face] {
        if !outer.contains(&v) {
            outer.push(v);
        }
    }
    if outer.len() < 3 {
        let base = g.max_vertex().unwrap() + 1;
        let triangle = [base, base + 1, base + 2];
        for (i, &t) in triangle.iter().enumerate() {
            let mut nbrs = Vec::from([triangle[(i + 1) % 3], triangle[(i + 2) % 3]]);
            nbrs.extend(&outer);
            for &v in &outer {
                adj.get_mut(&v).unwrap().push(t);
            }
            adj.insert(t, nbrs);
        }
        outer = triangle.to_vec();
    }
    let mut pos = circle(&outer);
    let pinned: BTreeSet<Vertex> = outer.iter().copied().collect();
    for &v in adj.keys() {
        pos.entry(v).or_insert((SIZE / 2.0, SIZE / 2.0));
    }
    for _ in 0..2000 {
        let mut delta = 0.0f64;
        for (&v, nbrs) in &adj {
            if pinned.contains(&v) || nbrs.is_empty() {
                continue;
            }
            let k = nbrs.len() as f64;
            let (sx, sy) = nbrs.iter().fold((0.0, 0.0), |(x, y), w| (x + pos[w].0, y + pos[w].1));
            let next = (sx / k, sy / k);
            let old = pos.insert(v, next).unwrap();
            delta = delta.max((old.0 - next.0).abs() + (old.1 - next.1).abs());
        }
        if delta < 1e-6 {
            break;
        }
    }
    pos
}

fn circle(vs: &[Vertex]) -> BTreeMap<Vertex, Point> {
    let r = SIZE / 2.0 - MARGIN;
    let k = vs.len().max(1) as f64;
    vs.iter()
        .enumerate()
        .map(|(i, &v)| {
            let a = std::f64::consts::TAU * i as f64 / k - std::f64::consts::FRAC_PI_2;
            (v, (SIZE / 2.0 + r * a.cos(), SIZE / 2.0 + r * a.sin()))
        })
        .collect()
}

/// SVG picture of the planarization: input vertices as circles, base edges
/// and routed edges as lines, crossings as x-marks with class `crossing`.
pub fn render_svg(d: &PlanarizationDrawing) -> String {
    let pos = layout(d);
    let inserted: BTreeSet<Edge> = d.routes.iter().map(|r| r.edge).collect();
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    );
    let _ = writeln!(s, r#"<rect width="100%" height="100%" fill="white"/>"#);
    let segments: Vec<(Edge, Edge)> = match &d.planarization {
        Some(_) => d.segment_origin.iter().map(|(s, o)| (*s, *o)).collect(),
        None => d.base_graph.edges().map(|e| (e, e)).collect(),
    };
    for (seg, origin) in segments {
        if d.connectors.contains(&origin) {
            continue;
        }
        let (a, b) = (pos[&seg.lo()], pos[&seg.hi()]);
        let (class, colour) = if inserted.contains(&origin) {
            ("route", "#c0392b")
        } else {
            ("edge", "#333333")
        };
        let _ = writeln!(
            s,
            r#"<line class="{class}" x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="{colour}" stroke-width="1.5"/>"#,
            a.0, a.1, b.0, b.1
        );
    }
    for &p in d.dummy_map.keys() {
        let (x, y) = pos[&p];
        let r = 4.0;
        let _ = writeln!(
            s,
            r##"<path class="crossing" d="M {:.2} {:.2} L {:.2} {:.2} M {:.2} {:.2} L {:.2} {:.2}" stroke="#2471a3" stroke-width="2"/>"##,
            x - r,
            y - r,
            x + r,
            y + r,
            x - r,
            y + r,
            x + r,
            y - r
        );
    }
    for v in d.base_graph.vertices() {
        let (x, y) = pos[&v];
        let _ = writeln!(
            s,
            r#"<circle class="vertex" cx="{x:.2}" cy="{y:.2}" r="7" fill="white" stroke="black"/>"#
        );
        let _ = writeln!(
            s,
            r#"<text x="{x:.2}" y="{:.2}" font-size="8" text-anchor="middle">{v}</text>"#,
            y + 3.0
        );
    }
    s.push_str("</svg>\n");
    s
}
