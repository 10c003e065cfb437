use chebdyn_core::Error as CoreError;
use thiserror::Error;

use crate::matrix_file::ParseError;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("cannot read {path}: {reason}")]
    Io { path: String, reason: String },
    #[error("parse error in {path}: {source}")]
    Parse { path: String, source: ParseError },
    #[error("{0}")]
    Hypothesis(CoreError),
}

impl CliError {
    /// 0 ok, 2 usage, 3 parse, 4 hypothesis or model violation.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Io { .. } | CliError::Parse { .. } => 3,
            CliError::Hypothesis(_) => 4,
        }
    }
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        match e {
            CoreError::FamilyBounds { .. } | CoreError::InvalidIndex { .. } => CliError::Usage(e.to_string()),
            other => CliError::Hypothesis(other),
        }
    }
}
