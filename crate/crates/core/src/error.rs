use thiserror::Error;

use crate::coloring::SwapOpportunity;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    /// Malformed or out-of-range arguments.
    #[error("invalid input: {0}")]
    Input(String),

    /// A named precondition of an operation does not hold.
    #[error("{operation}: precondition failed: {clause}")]
    Precondition {
        operation: &'static str,
        clause: String,
    },

    /// The instance is outside the feasibility envelope of an exhaustive routine.
    #[error("resource limit: {0}")]
    Resource(String),

    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    /// The input coloring is not maximal with respect to colors on `W`; the
    /// attached swap produces a coloring with one more color there.
    #[error("color swap available: {0}")]
    SwapOpportunity(Box<SwapOpportunity>),

    /// An internal step produced an object that fails its own validator.
    #[error("internal consistency violated: {0}")]
    Inconsistent(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub(crate) fn precondition(operation: &'static str, clause: impl Into<String>) -> Self {
        Error::Precondition {
            operation,
            clause: clause.into(),
        }
    }
}
