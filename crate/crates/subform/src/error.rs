use std::path::Path;

use thiserror::Error;

/// Errors raised by file handling, named constructions and the runner.
#[derive(Debug, Error)]
pub enum Error {
    #[error("{line}:{column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("declared order {expected} but generators produce a group of order {found}")]
    OrderMismatch { expected: usize, found: usize },
    #[error("{path}: {message}")]
    Io { path: String, message: String },
    #[error("{path}: {source}")]
    InFile { path: String, source: Box<Error> },
    #[error("invalid group name `{name}`: {message}")]
    Name { name: String, message: String },
    #[error("unknown formation `{0}`")]
    UnknownFormation(String),
    #[error("cache format: {0}")]
    CacheFormat(String),
    #[error("cache version {found} is not supported (expected {expected})")]
    CacheVersion { expected: u32, found: u32 },
    #[error("cache checksum does not match the group (stale cache)")]
    StaleChecksum,
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Group(#[from] subform_core::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn in_file(self, path: &Path) -> Error {
        Error::InFile { path: path.display().to_string(), source: Box::new(self) }
    }

    /// Strips file context.
    pub fn root(&self) -> &Error {
        match self {
            Error::InFile { source, .. } => source.root(),
            e => e,
        }
    }

    /// Process exit code for this error.
    pub fn exit_code(&self) -> i32 {
        match self.root() {
            Error::Group(subform_core::Error::Hypothesis(_)) => 3,
            Error::Group(
                subform_core::Error::LatticeBudgetExceeded { .. }
                | subform_core::Error::OrderLimitExceeded { .. }
                | subform_core::Error::Cancelled,
            ) => 4,
            Error::Group(subform_core::Error::FormationViolation(_)) => 1,
            _ => 2,
        }
    }
}
