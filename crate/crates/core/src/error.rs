use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at token `{token}`: {reason}")]
    Parse { token: String, reason: String },

    #[error("operation requires a partition with at least one block")]
    EmptyPartition,

    #[error("index {index} out of range for sequence of length {len}")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("invalid path: {0}")]
    InvalidPath(String),

    #[error("invalid Charlier diagram: {0}")]
    InvalidDiagram(String),

    #[error("infeasible parameters: {0}")]
    Infeasible(String),

    #[error("series has no invertible constant term")]
    NotInvertible,

    #[error("independent computations disagree: {0}")]
    RouteMismatch(String),
}

impl Error {
    pub(crate) fn parse(token: impl Into<String>, reason: impl Into<String>) -> Self {
        Error::Parse {
            token: token.into(),
            reason: reason.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
