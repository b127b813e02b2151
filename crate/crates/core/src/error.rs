use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("self-loop on node '{label}'")]
    SelfLoop { label: String },

    #[error("duplicate edge '{a}' -- '{b}'")]
    DuplicateEdge { a: String, b: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("graph is disconnected: '{a}' cannot reach '{b}'")]
    Disconnected { a: String, b: String },

    #[error("node '{to}' is unreachable from '{from}'")]
    Unreachable { from: String, to: String },

    #[error("partition covers {partition} nodes but graph has {graph}")]
    PartitionMismatch { partition: usize, graph: usize },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("degenerate fit: {0}")]
    DegenerateFit(String),
}

impl Error {
    pub(crate) fn arg(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }
}
