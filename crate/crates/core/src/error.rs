use thiserror::Error;

/// Errors raised by the skein computations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SkeinError {
    /// Malformed textual input. `pos` is a 0-based character offset into `input`.
    #[error("parse error at position {pos} in {input:?}: {msg}")]
    Parse { input: String, pos: usize, msg: String },

    /// Malformed sequence file.
    #[error("line {line}: {msg}")]
    SequenceFile { line: usize, msg: String },

    #[error("sequence `{0}` is not normalized: {1}")]
    NotNormalized(String, String),

    #[error("sequence `{name}` has no entry of degree {degree}")]
    OutOfRange { name: String, degree: usize },

    #[error("basis mismatch: expected {expected}, found {found}")]
    BasisMismatch { expected: String, found: String },

    /// Multiplication on the punctured surfaces is only defined for the
    /// product families with a known closed form.
    #[error("no product rule for {0}")]
    NoProductRule(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("malformed JSON: {0}")]
    Json(String),
}

pub type Result<T, E = SkeinError> = std::result::Result<T, E>;
