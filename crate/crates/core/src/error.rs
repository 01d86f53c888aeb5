use thiserror::Error;

use crate::partition::StripRelation;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition {0:?}: parts must be positive and weakly decreasing")]
    InvalidPartition(Vec<i64>),

    #[error("invalid word {word:?}: {reason}")]
    InvalidWord { word: String, reason: String },

    /// `step` is the index `i` of the relation linking positions `i-1` and `i`.
    #[error("relation {relation} fails at step {step} (between positions {} and {step})", .step - 1)]
    Interlacing { relation: StripRelation, step: usize },

    #[error("wrong number of partitions: expected {expected}, got {got}")]
    Length { expected: usize, got: usize },

    #[error("window half-width {given} too small, need at least {needed}")]
    WindowTooSmall { given: i64, needed: i64 },

    #[error("malformed tiling: {0}")]
    MalformedTiling(String),

    #[error("malformed matching: {0}")]
    MalformedMatching(String),

    #[error("invalid flip: {0}")]
    InvalidFlip(String),

    #[error("incompatible series: {0}")]
    Incompatible(String),

    #[error("not invertible: {0}")]
    NotInvertible(String),

    #[error("unsupported request: {0}")]
    Unsupported(String),

    #[error("invalid overpartition: {0}")]
    InvalidOverpartition(String),

    #[error("invalid plane partition: {0}")]
    InvalidPlanePartition(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
