use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unknown standard graph `{0}`")]
    UnknownGraph(String),

    #[error("invalid parameter for `{graph}`: {reason} (got {value})")]
    InvalidParameter {
        graph: String,
        value: String,
        reason: String,
    },

    #[error("edge {edge} references undeclared vertex {vertex}")]
    UndeclaredVertex { edge: usize, vertex: String },

    #[error("duplicate vertex name `{0}`")]
    DuplicateVertex(String),

    #[error("vertex name `{0}` is reserved or contains a reserved character")]
    ReservedName(String),

    #[error("path pool exceeds the cap of {cap} paths")]
    PoolLimit { cap: usize },

    #[error("automorphism search supports at most {limit} vertices (graph has {actual})")]
    AutomorphismLimit { limit: usize, actual: usize },

    #[error("search budget of {budget} nodes exhausted")]
    SearchBudget { budget: u64 },

    #[error("rerouting exploration exceeded {budget} covers")]
    RerouteBudget { budget: usize },

    #[error("simplex exceeded {budget} pivots")]
    PivotBudget { budget: usize },

    #[error("cover number not determined within budget; it lies in [{lower}, {upper}]")]
    Undetermined { lower: usize, upper: usize },

    #[error("no cover of at most {upper} paths survives the endpoint filter")]
    FilterTooStrict { upper: usize },

    #[error("the census of optimal covers needs a connected graph")]
    Disconnected,

    #[error("invalid path: {0}")]
    InvalidPath(String),

    #[error("cover does not cover segment `{0}`")]
    Uncovered(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("inconsistent configuration: {0}")]
    InconsistentConfig(String),
}
