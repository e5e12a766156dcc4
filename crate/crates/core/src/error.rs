use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("arity {arity} exceeds the maximum arity {max_arity}")]
    ArityExceeded { arity: usize, max_arity: usize },

    #[error("generator index {index} does not belong to a space of dimension {dim}")]
    ForeignGenerator { index: usize, dim: usize },

    #[error("coefficient of order {needed} requested but the series is only known through order {known}")]
    Truncated { needed: usize, known: i64 },

    #[error("degree rule violated: {0}")]
    DegreeRule(String),

    #[error("bracket output is not linear in the generators: {0}")]
    NotLinear(String),

    #[error("malformed document: {0}")]
    Document(String),
}

impl Error {
    pub(crate) fn arg(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }
}
