use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("self-loop on vertex {0} rejected")]
    SelfLoop(usize),

    #[error("operation requires a nonempty graph")]
    EmptyGraph,

    #[error("operation requires at least one input graph")]
    EmptyInput,

    #[error("{what} limit of {limit} exceeded")]
    ResourceLimit { what: &'static str, limit: u64 },

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("malformed clique cover: {0}")]
    MalformedCover(String),

    #[error("invalid generator parameters: {0}")]
    InvalidParams(String),

    #[error("precondition not met: {0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, GraphError>;
