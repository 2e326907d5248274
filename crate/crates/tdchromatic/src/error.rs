use thiserror::Error;

/// Errors produced by graph construction, solving, and I/O.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("vertex {vertex} out of range for graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("edge {0}-{1} is not present")]
    MissingEdge(usize, usize),

    #[error("vertex {0} is isolated; total domination is undefined")]
    IsolatedVertex(usize),

    /// An operation exceeded its documented size cap. Callers that want to go
    /// further must use the `*_capped` entry points.
    #[error("order {order} exceeds the {what} cap of {cap}")]
    ResourceGuard {
        what: &'static str,
        order: usize,
        cap: usize,
    },

    #[error("coloring does not match graph: {0}")]
    ColoringMismatch(String),

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("certificate rejected: {0}")]
    Certificate(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
