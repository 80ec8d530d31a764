//! Candidate geodesic covers of a 2-subdivision: enumeration, retractedness
//! and deduplication under graph symmetry and rerouting.

mod bits;
pub mod io;
pub use io::{read_cover, write_cover, CoverFile, PathEntry};
mod reroute;
mod search;
mod symmetry;
mod types;

pub use bits::Bits;
pub use reroute::{is_minimal_in_reroutings, reroutings, DEFAULT_REROUTE_BUDGET};
pub use search::{find_covers, pair_compatible, CoverSearch, SearchOptions, DEFAULT_NODE_BUDGET};
pub use symmetry::{apply_symmetry, is_minimal_in_symmetries, orbit, SymmetryTable};
pub use types::{covers_all_segments, is_retracted, paths_retracted, Cover};

pub use crate::graph::PathId;
