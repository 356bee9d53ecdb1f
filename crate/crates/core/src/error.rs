use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("digit {0} is outside the alphabet {{0,1,2,3}}")]
    BadDigit(u8),

    #[error("digit string has no periodic part")]
    MissingPeriod,

    #[error("no rewrite rule {rule} applies at position {position}")]
    InvalidRewriteSite { position: usize, rule: String },

    #[error("cylinder overlap needs a right neighbour; digit {0} has none")]
    NoRightNeighbour(u8),

    #[error("value {0} lies outside [0, 3/2]")]
    OutOfRange(String),

    #[error("representation count did not stabilize up to depth {0}")]
    NotStabilized(usize),

    #[error("input has a continuum of representations; enumeration refused")]
    ContinuumEnumeration,

    #[error("invalid probability vector: {0}")]
    InvalidProbVector(String),

    #[error("condition not satisfied: {0}")]
    ConditionFailed(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("cdf enclosure [{lo}, {hi}] still wider than tolerance at depth cap {depth}")]
    CdfNotConverged { lo: f64, hi: f64, depth: usize },

    #[error("level {level} is too large for exhaustive enumeration (limit {limit})")]
    LevelTooLarge { level: usize, limit: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
