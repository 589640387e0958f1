//! Planarity testing, embeddings, faces, duals and Kuratowski witnesses.

mod dmp;
mod embedding;
mod kuratowski;

pub use dmp::{biconnected_blocks, is_planar, planar_rotation, Rotation};
pub use embedding::{
    faces_and_weights, triangulate, triangulate_tracked, Dart, DualArc, DualGraph, EmbedError,
    FaceRecord, RotationEmbedding, Triangulation,
};
pub(crate) use embedding::insert_after;
pub use kuratowski::{kuratowski_subgraph, KuratowskiKind, KuratowskiWitness};
