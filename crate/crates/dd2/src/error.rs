use thiserror::Error;

/// Errors produced by parsing, graph edits, and the exact solvers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("vertex {0} out of range")]
    VertexOutOfRange(usize),
    #[error("loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0} {1}")]
    DuplicateEdge(usize, usize),
    #[error("{0} {1} is not an edge")]
    NotAnEdge(usize, usize),
    #[error("edge {0} {1} already present")]
    EdgeExists(usize, usize),
    #[error("graph has an isolated vertex ({0})")]
    IsolatedVertex(usize),
    #[error("guard exceeded: {0}")]
    GuardExceeded(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("invalid instance: {0}")]
    InvalidInstance(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
