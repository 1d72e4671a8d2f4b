use thiserror::Error;

/// Errors surfaced by the library.
///
/// `Internal` and `TheoremViolation` indicate bugs or counterexamples, never
/// bad input; the CLI maps them to distinct exit codes.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid type: {0}")]
    InvalidType(String),

    #[error("not a root: {0}")]
    NotARoot(String),

    #[error("bad subset: {0}")]
    BadSubset(String),

    #[error("usage: {0}")]
    Usage(String),

    #[error("internal consistency failure: {0}")]
    Internal(String),

    #[error("theorem counterexample: {0}")]
    TheoremViolation(String),

    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),

    #[error("serialization: {0}")]
    Json(#[from] serde_json::Error),
}
