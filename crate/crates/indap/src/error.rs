//! Error type shared across the crate.

use thiserror::Error;

/// Errors produced by table construction, parsing, and the query surface.
#[derive(Debug, Error)]
pub enum Error {
    #[error("sieve limit {limit} is below the minimum of 2")]
    LimitTooSmall { limit: usize },

    #[error("sieve limit {limit} exceeds the memory guard of {guard} entries")]
    LimitExceedsGuard { limit: usize, guard: usize },

    #[error("{what} = {value} is out of range [{min}, {max}]")]
    OutOfRange {
        what: &'static str,
        value: usize,
        min: usize,
        max: usize,
    },

    #[error("k = {k} is too small here (minimum {min})")]
    KTooSmall { k: usize, min: usize },

    #[error("pair endpoints must differ, got u = v = {v}")]
    DegeneratePair { v: usize },

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("invalid permutation: {msg}")]
    InvalidPermutation { msg: String },

    #[error("invalid coloring: {msg}")]
    InvalidColoring { msg: String },

    #[error("invalid progression: {msg}")]
    InvalidProgression { msg: String },

    #[error("scanned up to n = {horizon} without certifying a bound")]
    HorizonExhausted { horizon: usize },

    #[error("invalid configuration: {msg}")]
    InvalidConfig { msg: String },

    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
