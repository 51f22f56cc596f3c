use thiserror::Error;

use crate::pool::Pool;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("relations are not admissible: {0}")]
    NonAdmissible(String),

    #[error("invalid algebra data: {0}")]
    InvalidAlgebra(String),

    #[error("invalid module data: {0}")]
    InvalidModule(String),

    #[error("modules live over different algebras")]
    AlgebraMismatch,

    #[error("vertex {0} out of range")]
    VertexOutOfRange(usize),

    #[error("unknown module `{0}`")]
    UnknownModule(String),

    #[error("enumeration cap exceeded after {} modules", .partial.len())]
    CapExceeded { partial: Box<Pool> },

    #[error("module lies outside the enumerated pool: {0}")]
    IncompletePool(String),

    #[error("precondition failed: {0}")]
    PreconditionFailed(String),

    #[error("hypothesis failed: {0}")]
    HypothesisFailed(String),

    #[error("subset enumeration over {0} pool members exceeds the cutoff of {1}")]
    TooLarge(usize, usize),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
