use thiserror::Error;

/// Errors raised by the toolkit.
///
/// Mathematical "no" answers (a subalgebra that is not an ideal, a failed
/// theorem hypothesis) are never errors; they are carried by return values.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("matrix is not symmetric")]
    NotSymmetric,

    #[error("subspace is not closed under the bracket")]
    NotSubalgebra,

    #[error("subalgebra is not an ideal")]
    NotIdeal,

    #[error("subalgebras belong to different parent algebras")]
    ParentMismatch,

    #[error("antisymmetry violated at ({i},{j},{k})")]
    Antisymmetry { i: usize, j: usize, k: usize },

    #[error("Jacobi identity violated on basis triple ({i},{j},{k})")]
    Jacobi { i: usize, j: usize, k: usize },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("invalid field `{field}`: {message}")]
    Field { field: String, message: String },

    #[error("unknown catalog entry `{0}`")]
    UnknownName(String),

    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
