use thiserror::Error;

/// Errors raised by word arithmetic, parsing and cocycle evaluation.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },
    #[error("generator index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("strand mismatch: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },
    #[error("braid generator s{index} does not exist on {strands} strands")]
    BraidIndexOutOfRange { index: usize, strands: usize },
    #[error("invalid pure generator a({i},{j}) on {n} strands")]
    InvalidPureGenerator { i: usize, j: usize, n: usize },
    #[error("at least {min} strands required, got {got}")]
    TooFewStrands { min: usize, got: usize },
    #[error("braid is not pure")]
    NotPure,
    #[error("cannot embed {from} strands into {to}")]
    EmbedDown { from: usize, to: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("shape violation: {0}")]
    Shape(String),
    #[error("test element {index} does not commute with the probed element")]
    NonCommuting { index: usize },
    #[error("missing 2-cocycle value omega({0})")]
    MissingOmega(String),
}

pub type Result<T> = std::result::Result<T, Error>;
