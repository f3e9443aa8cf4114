//! Error types shared across the engine.

use thiserror::Error;

#[derive(Error, Debug, Clone)]
pub enum EngineError {
    #[error("degree overflow: {what}")]
    DegreeOverflow { what: String },

    #[error("invalid construction: {0}")]
    Invalid(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("inconclusive at degree bound {bound}: {what}; raise the degree bound")]
    Inconclusive { bound: usize, what: String },

    #[error("mismatched algebras: {0}")]
    MismatchedAlgebras(String),

    #[error("config error: {0}")]
    Config(String),

    #[error("cache error: {0}")]
    Cache(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, EngineError>;
