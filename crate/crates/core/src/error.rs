use thiserror::Error;

use crate::group::Kind;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed window: {0}")]
    Parse(String),
    #[error("window has {found} entries, expected {expected}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("value {0} appears more than once (up to sign)")]
    Duplicate(i64),
    #[error("value {value} out of range for rank {n}")]
    OutOfRange { value: i64, n: usize },
    #[error("zero entry in a signed permutation window")]
    ZeroEntry,
    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),
    #[error("generator index {index} invalid for type {kind} rank {n}")]
    InvalidIndex { kind: Kind, n: usize, index: i64 },
    #[error("index set kind {found} does not match group kind {expected}")]
    KindMismatch { expected: Kind, found: Kind },
    #[error("parts {parts:?} do not sum to {n}")]
    PartsSum { n: u64, parts: Vec<i64> },
    #[error("negative part {0}")]
    NegativePart(i64),
    #[error("shift precondition violated: {0}")]
    ShiftPrecondition(String),
    #[error("rank must be even, got {0}")]
    OddRank(usize),
    #[error("rank must be positive")]
    ZeroRank,
    #[error("character is undefined on non-chessboard elements")]
    NotChessboard,
    #[error("chi weighting requires a chessboard restriction")]
    ChiWithoutChessboard,
    #[error("invalid position filter: {0}")]
    InvalidFilter(String),
    #[error("rank {n} exceeds the configured limit {limit} for type {kind}")]
    ResourceLimit { kind: Kind, n: usize, limit: usize },
    #[error("polynomial division is not exact")]
    InexactDivision,
    #[error("alternating sum has odd doubled value {0}")]
    ParityViolation(String),
    #[error("unknown identity {0}")]
    UnknownIdentity(String),
}

pub type Result<T> = std::result::Result<T, Error>;
