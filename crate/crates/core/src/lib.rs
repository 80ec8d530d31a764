//! Exact computation of metric geodesic cover numbers of finite multigraphs.
//!
//! The pipeline works on the 2-subdivision of the input graph: it enumerates
//! simple paths, searches retracted candidate covers, and decides for each
//! candidate whether some positive edge weighting turns every path into a
//! shortest path. Feasibility is decided by an exact rational simplex.

pub mod cover;
pub mod driver;
pub mod error;
pub mod graph;
pub mod lp;
pub mod rational;
pub mod triple;

pub use cover::Cover;
pub use driver::{cover_number, distinct_optimal_covers, CoverNumberReport, DriverOptions, Mode};
pub use error::{Error, Result};
pub use graph::{Automorphism, Multigraph, PathId, PathPool, PathSeq, SubdividedGraph, Weighting};
pub use lp::{FeasibilityResult, LpProgram};
pub use rational::Rational;
