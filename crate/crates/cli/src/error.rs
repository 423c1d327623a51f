use biderlab_core::liealg::JacobiViolation;
use thiserror::Error;

/// Everything that makes an invocation exit with status 2.
#[derive(Debug, Error)]
pub enum InputError {
    #[error("parse error ({location}): {message}")]
    Parse { location: String, message: String },
    #[error("index error: {0}")]
    Index(String),
    #[error("{0}")]
    Jacobi(JacobiViolation),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimMismatch { expected: usize, found: usize },
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{0}")]
    Catalog(String),
}
