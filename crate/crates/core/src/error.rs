use thiserror::Error;

/// Errors raised by graph construction and the exact solvers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for graph with {n} vertices (pair ({u}, {v}))")]
    VertexOutOfRange {
        u: usize,
        v: usize,
        vertex: usize,
        n: usize,
    },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("edge ({0}, {1}) does not exist")]
    NoSuchEdge(usize, usize),
    #[error("vertex {0} does not exist")]
    NoSuchVertex(usize),
    #[error("graph is disconnected; {0} is undefined")]
    Disconnected(&'static str),
    #[error("graph has no vertices")]
    Empty,
    #[error("graph has {n} vertices; at most {max} supported by {what}")]
    TooLarge {
        n: usize,
        max: usize,
        what: &'static str,
    },
    #[error("coloring has {got} entries but the graph has {expected} vertices")]
    ColoringLength { expected: usize, got: usize },
    #[error("vertex {0} has colour 0; colours start at 1")]
    ZeroColor(usize),
    #[error("precondition violated: {0}")]
    Precondition(String),
}

pub type Result<T, E = GraphError> = std::result::Result<T, E>;
