use thiserror::Error;

use crate::lattice::RootVector;

/// Errors produced by the root-system operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid system parameters a={a}, b={b}: need a >= b >= 1 and ab >= 4")]
    InvalidParams { a: i64, b: i64 },

    #[error("mirror {0} is not a real root vector (norm must be a or b)")]
    NotRealMirror(RootVector),

    #[error("index {index} out of range for {name}")]
    InvalidIndex { name: &'static str, index: i64 },

    #[error("generator set is empty")]
    EmptyGenerators,

    #[error("sum of the two roots is zero")]
    DegenerateSum,

    #[error("precondition failed: {0}")]
    PreconditionFailed(String),

    #[error("{0} is not a real root of this system")]
    NotReal(String),

    #[error("cannot parse root literal {0:?}")]
    BadLiteral(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
