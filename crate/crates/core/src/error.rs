use thiserror::Error;

/// Errors surfaced by the library.
///
/// Axiom violations are *data* (see [`crate::report::AxiomReport`]), not
/// errors; `Error` covers malformed input, precondition failures and guard
/// failures inside constructions.
#[derive(Debug, Error)]
pub enum Error {
    #[error("ambient dimension mismatch: {0} vs {1}")]
    AmbientMismatch(usize, usize),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimMismatch { expected: usize, got: usize },

    #[error("index {index} out of range for dimension {dim} at {path}")]
    IndexRange {
        path: String,
        index: usize,
        dim: usize,
    },

    #[error("invalid rational literal {0:?}")]
    BadRational(String),

    #[error("invalid {kind}: {detail}")]
    InvalidInput { kind: &'static str, detail: String },

    #[error("{guard} guard failed: {detail}")]
    Guard { guard: &'static str, detail: String },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("syntax error at line {line}, column {column}: {msg}")]
    Syntax {
        line: usize,
        column: usize,
        msg: String,
    },

    #[error("semantic error at {path}: {msg}")]
    Semantic { path: String, msg: String },

    #[error("operation {op:?} is not applicable to a document of kind {kind:?}")]
    InapplicableOp { op: String, kind: String },

    #[error("unknown family {0:?}")]
    UnknownFamily(String),

    #[error("dimension {0} exceeds the configured cap {1}")]
    DimensionCap(usize, usize),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    pub fn invalid(kind: &'static str, detail: impl Into<String>) -> Self {
        Error::InvalidInput {
            kind,
            detail: detail.into(),
        }
    }

    pub fn guard(guard: &'static str, detail: impl Into<String>) -> Self {
        Error::Guard {
            guard,
            detail: detail.into(),
        }
    }
}
