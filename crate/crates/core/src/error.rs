use thiserror::Error;

use crate::carrier::Carrier;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("carrier mismatch: expected {expected}, found {found}")]
    CarrierMismatch { expected: Carrier, found: Carrier },

    #[error("basis key {key} does not belong to carrier {carrier}")]
    KeyOutOfCarrier { key: String, carrier: Carrier },

    #[error("variable has {found} coordinates but the carrier has rank {rank}")]
    RankMismatch { rank: usize, found: usize },

    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("rule {rule} is not applicable at path {path:?}")]
    RuleNotApplicable { rule: String, path: Vec<usize> },

    #[error("the self-map is disabled on this carrier (symmetric-algebra mode)")]
    SelfMapDisabled,

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("no image given for basis generator {0}")]
    MissingImage(String),

    #[error("arity mismatch: expected {expected} factors, found {found}")]
    ArityMismatch { expected: usize, found: usize },

    #[error("invalid permutation {0:?}")]
    InvalidPermutation(Vec<usize>),

    #[error("malformed structured input: {0}")]
    Structured(String),
}

pub type Result<T> = std::result::Result<T, Error>;
