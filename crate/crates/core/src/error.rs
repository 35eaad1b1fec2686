use thiserror::Error;

use crate::graph::MAX_VERTICES;

#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("graph has {0} vertices; at most {MAX_VERTICES} are supported")]
    TooLarge(usize),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("clique number is undefined for the empty graph")]
    UndefinedOmega,

    #[error("clique enumeration exceeded the cap of {0} cliques")]
    CliqueCapExceeded(usize),

    #[error("precondition violated: {0}")]
    Precondition(String),

    /// A structural conclusion that must hold on valid input failed. Reaching
    /// this indicates a bug.
    #[error("internal contradiction: {0}")]
    InternalContradiction(String),

    #[error("exhaustive search refused: {n} vertices exceeds the cap of {cap}")]
    SizeCapExceeded { n: usize, cap: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
