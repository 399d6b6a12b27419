use thiserror::Error;

/// Errors shared across the library.
///
/// `Domain` covers violated mathematical preconditions (isolated vertices
/// where a carrier forbids them, incompatible truncations, edges not present
/// in a graph). `Resource` guards the enumeration caps. `Unsupported` is the
/// verdict for product/coproduct configurations that provably do not form a
/// Hopf algebra.
#[derive(Debug, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("resource limit exceeded: {0}")]
    Resource(String),

    #[error("unsupported configuration: {0}")]
    Unsupported(String),

    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub fn resource(msg: impl Into<String>) -> Self {
        Error::Resource(msg.into())
    }

    pub fn unsupported(msg: impl Into<String>) -> Self {
        Error::Unsupported(msg.into())
    }

    pub fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }
}
