use thiserror::Error;

/// Errors raised by the glider engine.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("multiplication table is not associative at ({0}, {1}, {2})")]
    NotAssociative(usize, usize, usize),
    #[error("invalid group table: {0}")]
    InvalidTable(String),
    #[error("action is not by automorphisms: {0}")]
    NotAnAction(String),
    #[error("cocycle condition violated at ({0}, {1}, {2})")]
    NotACocycle(usize, usize, usize),
    #[error("group order {order} exceeds the subgroup bound {bound}")]
    BoundExceeded { order: usize, bound: usize },
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("subgroup containment violated: {0}")]
    NotContained(String),
    #[error("inversion of zero")]
    DivisionByZero,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("unsupported group: {0}")]
    UnsupportedGroup(String),
    #[error("glider key is not idempotent")]
    NotIdempotent,
    #[error("glider key has empty A-part")]
    EmptyAPart,
    #[error("orbit unresolved after {0} iterations")]
    Unresolved(usize),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unknown catalog group `{0}`")]
    UnknownGroup(String),
}

pub type Result<T> = std::result::Result<T, Error>;
