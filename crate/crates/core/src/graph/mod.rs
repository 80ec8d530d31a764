//! Multigraphs, their 2-subdivision, path pools, symmetries and exact
//! shortest paths.

mod automorphism;
pub mod io;
mod multigraph;
mod paths;
mod shortest;
mod standard;
mod subdivision;
mod weighting;

pub use automorphism::{automorphisms, automorphisms_with_limit, lift_automorphism, Automorphism};
pub use multigraph::{EdgeId, Multigraph, VertexId};
pub use paths::{
    enumerate_paths_between, enumerate_simple_paths, PathId, PathPool, PathSeq, DEFAULT_POOL_CAP,
};
pub use shortest::{distances_from, path_length, shortest_path_length};
pub use standard::{build_standard, STANDARD_GRAPHS};
pub use subdivision::{two_subdivision, SegmentId, SubdividedGraph};
pub use weighting::Weighting;

/// Default vertex guard for the automorphism search.
pub const AUTOMORPHISM_VERTEX_LIMIT: usize = 16;
