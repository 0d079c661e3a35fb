use thiserror::Error;

/// Errors raised anywhere in the core library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("bound exceeded: {what} has size {size}, limit is {limit}")]
    BoundExceeded { what: String, size: u128, limit: u128 },

    #[error("type mismatch: {0}")]
    TypeMismatch(String),

    #[error("not representable as a monadic lens: {0}")]
    NotRepresentable(String),

    #[error("diagram is not optic-shaped: {0}")]
    NotOpticShaped(String),

    #[error("{line}:{col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },

    #[error("{line}:{col}: unknown identifier `{name}`")]
    UnknownIdentifier { line: usize, col: usize, name: String },

    #[error("type error at slice {slice}, offset {offset}: {msg}")]
    Type { slice: usize, offset: usize, msg: String },

    #[error("rule `{rule}` does not match at ({slice}, {offset})")]
    NoMatch { rule: String, slice: usize, offset: usize },

    #[error("abstract cell `{0}` has no finite semantics")]
    Abstract(String),

    #[error("search budget exhausted: {0}")]
    Budget(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn mismatch(msg: impl Into<String>) -> Error {
    Error::TypeMismatch(msg.into())
}
