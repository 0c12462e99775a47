use thiserror::Error;

/// Errors raised by the library. Each variant maps onto one CLI exit code.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("precision error: {0}")]
    Precision(String),

    #[error("invalid spec: {0}")]
    InvalidSpec(String),

    #[error("unknown formula name: {0}")]
    UnknownName(String),

    #[error("invalid target: {0}")]
    InvalidTarget(String),

    #[error("no sign change: {0}")]
    NoSignChange(String),

    #[error("unsupported query: {0}")]
    UnsupportedQuery(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// True for failures of the numerics rather than of the caller's input.
    pub fn is_numeric(&self) -> bool {
        matches!(self, Error::Precision(_))
    }
}
