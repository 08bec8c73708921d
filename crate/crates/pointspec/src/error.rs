use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Error)]
pub enum Error {
    /// The argument lies outside the mathematical domain of the operation.
    #[error("{op}: {msg}")]
    Domain { op: &'static str, msg: String },

    /// A validated input failed its structural precondition.
    #[error("{op}: {msg}")]
    Precondition { op: &'static str, msg: String },

    /// A linear system could not be solved.
    #[error("{op}: matrix is numerically singular")]
    Singular { op: &'static str },

    /// The operation is defined only for the other ambient dimension.
    #[error("{op}: unsupported for dimension {dim}")]
    UnsupportedDimension { op: &'static str, dim: u32 },

    /// Catalog lookup with an unknown function name.
    #[error("unknown catalog function `{0}`")]
    UnknownCatalog(String),

    /// An internal consistency check failed; indicates a bug, not bad input.
    #[error("{op}: internal invariant violated: {msg}")]
    Internal { op: &'static str, msg: String },
}

impl Error {
    pub(crate) fn domain(op: &'static str, msg: impl Into<String>) -> Self {
        Error::Domain { op, msg: msg.into() }
    }

    pub(crate) fn precondition(op: &'static str, msg: impl Into<String>) -> Self {
        Error::Precondition { op, msg: msg.into() }
    }

    pub(crate) fn internal(op: &'static str, msg: impl Into<String>) -> Self {
        Error::Internal { op, msg: msg.into() }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
