use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("graph order {order} exceeds the cap of {cap} vertices")]
    OrderTooLarge { order: usize, cap: usize },
    #[error("vertex {vertex} out of range for a graph on {order} vertices")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("pattern has {pattern} vertices but host has only {host}")]
    PatternTooLarge { pattern: usize, host: usize },
    #[error("graph has no edges")]
    Edgeless,
    #[error("value out of range: {0}")]
    OutOfRange(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("flag types differ")]
    TypeMismatch,
    #[error("invalid flag: {0}")]
    InvalidFlag(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("arithmetic error: {0}")]
    Arithmetic(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("verification failed: {0}")]
    Verification(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    /// Size-cap violations are reported separately by the command-line tool.
    pub fn is_size_cap(&self) -> bool {
        matches!(
            self,
            Error::OrderTooLarge { .. } | Error::PatternTooLarge { .. } | Error::OutOfRange(_)
        )
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}
