use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Malformed or out-of-range input.
    #[error("input error: {0}")]
    Input(String),
    /// Parse failure with a 1-based line number.
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    /// A size guardrail or search budget was exceeded.
    #[error("guardrail: {0}")]
    Guardrail(String),
    /// A precondition of the operation does not hold for this input.
    #[error("precondition failed: {0}")]
    Precondition(String),
    /// An externally supplied oracle misbehaved.
    #[error("oracle call {call} returned an invalid separator: {msg}")]
    Oracle { call: usize, msg: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
