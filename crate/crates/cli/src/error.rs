use std::path::PathBuf;

use confed_elo::scenario::SweepError;
use confed_elo::DataError;

use crate::ingest::IngestError;

#[derive(Debug, thiserror::Error)]
pub enum AppError {
    #[error("dataset not found: {}", .0.display())]
    DatasetNotFound(PathBuf),
    #[error("{}: {source}", path.display())]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Ingest(#[from] IngestError),
    #[error(transparent)]
    Data(#[from] DataError),
    #[error(transparent)]
    Sweep(#[from] SweepError),
}

impl AppError {
    /// 1 for bad data or violated invariants, 2 for usage and I/O problems.
    pub fn exit_code(&self) -> i32 {
        match self {
            AppError::Ingest(_) | AppError::Data(_) | AppError::Sweep(_) => 1,
            AppError::DatasetNotFound(_) | AppError::Io { .. } | AppError::Usage(_) => 2,
        }
    }
}
