//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("graph too large: {requested} vertices exceeds the cap of {cap}")]
    TooLarge { requested: usize, cap: usize },

    #[error("vertex {v} out of range for a graph on {n} vertices")]
    VertexRange { v: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("label vector has length {got}, expected {expected}")]
    LabelLength { got: usize, expected: usize },

    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },

    #[error("operation undefined on the empty graph")]
    EmptyGraph,

    #[error("time budget exceeded in {stage}")]
    Budget { stage: String },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("construction failed: {0}")]
    ConstructionFailed(String),
}

impl Error {
    pub fn graph6(offset: usize, reason: impl Into<String>) -> Self {
        Error::Graph6 {
            offset,
            reason: reason.into(),
        }
    }

    pub fn is_budget(&self) -> bool {
        matches!(self, Error::Budget { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
