use thiserror::Error;

use crate::digraph::Vertex;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("line {line}: loop arc on `{vertex}`")]
    LoopArc { line: usize, vertex: String },

    #[error("line {line}: duplicate arc ({from}, {to})")]
    DuplicateArc {
        line: usize,
        from: String,
        to: String,
    },

    #[error("vertex {vertex} out of range for a digraph of order {n}")]
    VertexOutOfRange { vertex: Vertex, n: usize },

    #[error("invalid json: {0}")]
    Json(#[from] serde_json::Error),

    #[error("digraph is not strong")]
    NotStrong,

    #[error("digraph is not asymmetrical: digon on {0} and {1}")]
    NotAsymmetric(Vertex, Vertex),

    #[error("cycle ear rejected: ear starting and ending at {0}")]
    CycleEar(Vertex),

    #[error("precondition violated: {0}")]
    Precondition(String),

    /// A constructed certificate failed its independent check.
    #[error("verification failed: {0}")]
    Verification(String),

    #[error("{what}: order {n} exceeds cap {cap}")]
    CapExceeded {
        what: &'static str,
        n: usize,
        cap: usize,
    },

    #[error("search budget of {budget} nodes exhausted")]
    BudgetExhausted { budget: u64 },
}

impl Error {
    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    pub(crate) fn verification(msg: impl Into<String>) -> Self {
        Error::Verification(msg.into())
    }
}
