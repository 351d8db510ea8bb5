use thiserror::Error;

use crate::rootdata::{Family, Root};

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("rank {rank} is not valid for family {family:?}")]
    InvalidRank { family: Family, rank: usize },

    #[error("unknown family {0:?}")]
    UnknownFamily(String),

    #[error("unknown isogeny {0:?}")]
    UnknownIsogeny(String),

    #[error("isogeny {isogeny} cannot be paired with {ty}")]
    InvalidIsogeny { ty: String, isogeny: String },

    #[error("{0:?} is not a root")]
    NotARoot(Root),

    #[error("root chain through {beta:?} along {alpha:?} is undefined (beta = ±alpha)")]
    ChainPrecondition { alpha: Root, beta: Root },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("invalid specification for {ty}: {reason}")]
    InvalidSpec { ty: String, reason: String },

    #[error("root index {index} out of range building {what} for {ty}")]
    RankGuard {
        ty: String,
        what: String,
        index: i64,
    },

    #[error("{0} requires type B or D")]
    WrongFamily(String),

    #[error("element must be non-zero")]
    ZeroElement,

    #[error("recognition precondition [e,[e,f]] = e fails")]
    RecognitionPrecondition,

    #[error("span of e, h, f is not closed: [h,f] + f is not a multiple of e")]
    NotClosed,

    #[error("internal error: {kind} witness failed verification")]
    WitnessVerification { kind: String },

    #[error("orbit out of scope: {0}")]
    OutOfScope(String),

    #[error("orbit data: {0}")]
    OrbitData(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
