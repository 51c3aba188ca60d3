//! Error type shared across the crate.

use thiserror::Error;

/// Failure modes surfaced by the library.
///
/// `Parse` covers malformed input files and malformed rational or polynomial
/// literals. `Validation` covers inputs that parse but violate a structural
/// precondition (bad complex, wrong tuple length, non-minimal exponents).
/// `Geometry` covers degenerate embeddings discovered mid-computation.
/// `NotStabilized` is returned by window-based fits when the window is too
/// short for the tail behaviour to be visible.
#[derive(Debug, Error)]
pub enum SplineError {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("validation failed: {0}")]
    Validation(String),

    #[error("degenerate geometry: {0}")]
    Geometry(String),

    #[error("not stabilized: {0}")]
    NotStabilized(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("limit exceeded: {0}")]
    Limit(String),
}

pub type Result<T> = std::result::Result<T, SplineError>;

impl SplineError {
    /// Process exit code used by the command line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            SplineError::Parse(_) => 2,
            SplineError::Validation(_) | SplineError::Geometry(_) => 3,
            SplineError::NotStabilized(_)
            | SplineError::Unsupported(_)
            | SplineError::Limit(_) => 4,
        }
    }
}

/// Wraps a JSON syntax error with the byte offset of the failure inside
/// `text`, since serde only reports line and column.
pub(crate) fn json_parse_error(context: &str, text: &str, e: &serde_json::Error) -> SplineError {
    let offset: usize = text
        .split_inclusive('\n')
        .take(e.line().saturating_sub(1))
        .map(str::len)
        .sum::<usize>()
        + e.column().saturating_sub(1);
    SplineError::Parse(format!("{context}: {e} (byte {offset})"))
}
