use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed edge-list or graph6 input. `line` is 1-based.
    #[error("parse error (line {line}): {message}")]
    Parse { line: usize, message: String },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("length mismatch: {left} vs {right} qubits")]
    LengthMismatch { left: usize, right: usize },

    #[error("graph is disconnected")]
    Disconnected,

    #[error("graph has {n} vertices, at least {min} required")]
    TooSmall { n: usize, min: usize },

    #[error("{what} is capped at n = {cap}, got n = {n}")]
    CapExceeded { what: &'static str, n: usize, cap: usize },

    #[error("unsupported size n = {n} (maximum {max})")]
    UnsupportedSize { n: usize, max: usize },

    /// Two independent computations disagree. Always an implementation bug.
    #[error("internal consistency failure: {0}")]
    Consistency(String),
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse { line, message: message.into() }
    }
}
