//! Crossing numbers and skewness of small graphs.
//!
//! The crate covers four connected tasks:
//!
//! * finding cycles of small μ (the sum of `d(u) - 2` over a cycle minus its
//!   heaviest vertex), both in planar graphs through face weights and in
//!   general graphs through a delete/contract/lift recursion over a set of
//!   edges whose removal leaves the graph planar;
//! * exact skewness by bounded search, plus a greedy planar-subgraph bound;
//! * drawing near-planar graphs by routing each removed edge along a
//!   shortest path in the dual of a planar embedding;
//! * exact crossing numbers of small graphs and closed-form upper bounds for
//!   crossing-critical graphs, evaluated in exact rational arithmetic.
//!
//! Everything here is `no_std` with `alloc`; file formats, rendering and the
//! command line live in the `crossbound` crate.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod bounds;
pub mod critical;
pub mod generate;
pub mod graph;
pub mod light_cycle;
pub mod oracle;
pub mod planar;
pub mod router;
pub mod skewness;

pub use graph::{Contraction, Edge, EdgeSet, Graph, GraphError, Vertex};

/// Exact rational numbers used for face weights and bound values.
pub type Rational = num_rational::Ratio<i128>;
