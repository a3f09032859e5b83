//! Dataset, file formats and command line for `confed-elo`.

pub mod app;
pub mod config;
pub mod error;
pub mod export;
pub mod ingest;
pub mod parallel;
pub mod reference;
pub mod report;

pub use error::AppError;
