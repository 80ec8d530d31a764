use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] geocover::Error),
    #[error("cannot access `{}`: {source}", path.display())]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    /// 3 when a budget ran out or a heuristic gave up, 2 for anything wrong
    /// with the input.
    pub fn exit_code(&self) -> u8 {
        use geocover::Error::*;
        match self {
            Self::Core(
                SearchBudget { .. }
                | Undetermined { .. }
                | PivotBudget { .. }
                | RerouteBudget { .. }
                | PoolLimit { .. }
                | AutomorphismLimit { .. }
                | FilterTooStrict { .. },
            ) => 3,
            _ => 2,
        }
    }
}
