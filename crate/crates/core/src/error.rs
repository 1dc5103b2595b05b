//! Error types shared across the crate.

use std::path::PathBuf;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("i/o error on {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },

    #[error("parse error at {location} line {line}: {message}")]
    Parse {
        location: String,
        line: usize,
        message: String,
    },

    #[error("data error: {0}")]
    Data(String),

    #[error("unknown language: {0}")]
    UnknownLanguage(String),

    #[error("unknown error type code: {0}")]
    UnknownErrorType(String),

    #[error("configuration error: {0}")]
    Config(String),

    #[error("empty sample: {0}")]
    EmptySample(String),

    #[error("insufficient data: {0}")]
    InsufficientData(String),

    #[error("undefined similarity: {0}")]
    UndefinedSimilarity(String),

    #[error("degenerate prediction: {0}")]
    DegeneratePrediction(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("optimization failed: {0}")]
    Optimization(String),
}

impl Error {
    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    pub fn parse(location: impl Into<String>, line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            location: location.into(),
            line,
            message: message.into(),
        }
    }

    /// Process exit code for the CLI: 2 for input/data problems, 1 for
    /// internal failures.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Optimization(_) | Error::DegeneratePrediction(_) => 1,
            _ => 2,
        }
    }
}
