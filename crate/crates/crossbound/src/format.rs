//! graph6 and plain edge-list text formats.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crossbound_core::{Edge, Graph, Vertex};

/// Largest vertex count accepted from text input.
pub const MAX_VERTICES: usize = 1 << 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Graph6,
    EdgeList,
}

impl Format {
    /// Guesses from a file extension: `.g6` and `.graph6` are graph6,
    /// everything else is an edge list.
    pub fn from_path(path: &str) -> Format {
        let lower = path.to_ascii_lowercase();
        if lower.ends_with(".g6") || lower.ends_with(".graph6") {
            Format::Graph6
        } else {
            Format::EdgeList
        }
    }
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "graph6" | "g6" => Ok(Format::Graph6),
            "edgelist" | "edge-list" => Ok(Format::EdgeList),
            other => Err(format!("unknown format `{other}` (expected graph6 or edgelist)")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FormatError {
    Empty,
    NotUtf8,
    BadHeader,
    BadCharacter { position: usize, byte: u8 },
    BadLength { expected: usize, found: usize },
    NonzeroPadding,
    BadToken { line: usize, token: String },
    TooManyFields { line: usize },
    VertexOutOfRange { line: usize, vertex: u64 },
    SelfLoop { line: usize, vertex: Vertex },
    DuplicateEdge { line: usize, edge: Edge },
}

impl fmt::Display for FormatError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FormatError::Empty => f.write_str("input is empty"),
            FormatError::NotUtf8 => f.write_str("input is not valid UTF-8"),
            FormatError::BadHeader => f.write_str("malformed graph6 size header"),
            FormatError::BadCharacter { position, byte } => {
                write!(f, "byte {byte:#04x} at position {position} is outside the graph6 range 63..=126")
            }
            FormatError::BadLength { expected, found } => {
                write!(f, "graph6 body has {found} bytes, expected {expected}")
            }
            FormatError::NonzeroPadding => f.write_str("graph6 padding bits are not zero"),
            FormatError::BadToken { line, token } => write!(f, "line {line}: `{token}` is not a vertex id"),
            FormatError::TooManyFields { line } => write!(f, "line {line}: expected one edge `u v`"),
            FormatError::VertexOutOfRange { line, vertex } => {
                write!(f, "line {line}: vertex {vertex} exceeds the limit of {MAX_VERTICES} vertices")
            }
            FormatError::SelfLoop { line, vertex } => write!(f, "line {line}: self-loop at vertex {vertex}"),
            FormatError::DuplicateEdge { line, edge } => write!(f, "line {line}: duplicate edge {edge}"),
        }
    }
}

impl std::error::Error for FormatError {}

pub fn parse_graph(text: &[u8], format: Format) -> Result<Graph, FormatError> {
    match format {
        Format::Graph6 => parse_graph6(text),
        Format::EdgeList => parse_edge_list(text),
    }
}

pub fn serialize_graph(g: &Graph, format: Format) -> String {
    match format {
        Format::Graph6 => to_graph6(g),
        Format::EdgeList => to_edge_list(g),
    }
}

fn trim_ascii(text: &[u8]) -> &[u8] {
    let start = text.iter().position(|b| !b.is_ascii_whitespace()).unwrap_or(text.len());
    let end = text.iter().rposition(|b| !b.is_ascii_whitespace()).map_or(start, |i| i + 1);
    &text[start..end]
}

/// Parses one graph6 line, with or without the `>>graph6<<` header.
pub fn parse_graph6(text: &[u8]) -> Result<Graph, FormatError> {
    let mut s = trim_ascii(text);
    s = s.strip_prefix(b">>graph6<<").unwrap_or(s);
    if s.is_empty() {
        return Err(FormatError::Empty);
    }
    if let Some(position) = s.iter().position(|&b| !(63..=126).contains(&b)) {
        return Err(FormatError::BadCharacter { position, byte: s[position] });
    }
    let (n, body) = match s {
        [126, 126, rest @ ..] => {
            if rest.len() < 6 {
                return Err(FormatError::BadHeader);
            }
            (decode_size(&rest[..6]), &rest[6..])
        }
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(FormatError::BadHeader);
            }
            (decode_size(&rest[..3]), &rest[3..])
        }
        [b, rest @ ..] => ((*b - 63) as usize, rest),
        [] => unreachable!(),
    };
    if n > MAX_VERTICES {
        return Err(FormatError::VertexOutOfRange { line: 1, vertex: n as u64 });
    }
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() != expected {
        return Err(FormatError::BadLength { expected, found: body.len() });
    }
    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    if (bits..expected * 6).any(bit) {
        return Err(FormatError::NonzeroPadding);
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i as Vertex, j as Vertex));
            }
            k += 1;
        }
    }
    Ok(Graph::from_edges(n, edges).expect("graph6 encodes a simple graph"))
}

fn decode_size(bytes: &[u8]) -> usize {
    bytes.iter().fold(0, |acc, &b| (acc << 6) | (b - 63) as usize)
}

/// graph6 encoding of `g` after relabelling its vertices `0..n` in order.
pub fn to_graph6(g: &Graph) -> String {
    let (h, _) = g.compacted();
    let n = h.vertex_count();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        out.extend((0..3).rev().map(|i| ((n >> (6 * i)) & 63) as u8 + 63));
    } else {
        out.extend([126, 126]);
        out.extend((0..6).rev().map(|i| ((n >> (6 * i)) & 63) as u8 + 63));
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | h.has_edge(i as Vertex, j as Vertex) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 is printable ASCII")
}

/// Parses an edge list: one `u v` pair per line, `#` starts a comment, and a
/// line holding a single id declares a vertex. Vertices are `0..=max id`.
pub fn parse_edge_list(text: &[u8]) -> Result<Graph, FormatError> {
    let text = std::str::from_utf8(text).map_err(|_| FormatError::NotUtf8)?;
    let mut edges = Vec::new();
    let mut seen = BTreeSet::new();
    let mut n = 0usize;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("");
        let ids = content
            .split_whitespace()
            .map(|tok| {
                let v: u64 = tok.parse().map_err(|_| FormatError::BadToken {
                    line,
                    token: tok.to_string(),
                })?;
                if v >= MAX_VERTICES as u64 {
                    return Err(FormatError::VertexOutOfRange { line, vertex: v });
                }
                Ok(v as Vertex)
            })
            .collect::<Result<Vec<_>, _>>()?;
        match ids[..] {
            [] => {}
            [v] => n = n.max(v as usize + 1),
            [a, b] => {
                let edge = Edge::try_new(a, b).ok_or(FormatError::SelfLoop { line, vertex: a })?;
                if !seen.insert(edge) {
                    return Err(FormatError::DuplicateEdge { line, edge });
                }
                n = n.max(edge.hi() as usize + 1);
                edges.push((a, b));
            }
            _ => return Err(FormatError::TooManyFields { line }),
        }
    }
    if n == 0 {
        return Err(FormatError::Empty);
    }
    Ok(Graph::from_edges(n, edges).expect("edges are checked above"))
}

/// Edge list of `g` relabelled to `0..n`; isolated vertices get a line of
/// their own.
pub fn to_edge_list(g: &Graph) -> String {
    let (h, _) = g.compacted();
    let mut out = String::new();
    for v in h.vertices() {
        if h.degree(v) == 0 {
            out.push_str(&format!("{v}\n"));
        }
    }
    for e in h.edges() {
        out.push_str(&format!("{} {}\n", e.lo(), e.hi()));
    }
    out
}
