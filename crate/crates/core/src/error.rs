use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed input that is not tied to a source location.
    #[error("input error: {0}")]
    Input(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("division by zero")]
    DivisionByZero,

    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(String, String),

    /// A size guard refused to materialise an object.
    #[error("resource limit: {what} has dimension {dim}, limit is {limit}")]
    Resource { what: String, dim: usize, limit: usize },

    /// An exhaustive structural check found a counterexample.
    #[error("verification failed: {0}")]
    Verification(String),

    #[error("line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
}
