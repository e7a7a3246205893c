use std::path::PathBuf;

use thiserror::Error;

/// Errors produced anywhere in the crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("degree sequences cannot contain negative entries (got {0})")]
    NegativeEntry(i64),

    #[error("could not parse degree sequence {input:?}: {reason}")]
    ParseSequence { input: String, reason: String },

    #[error("sequence {0} is not graphical")]
    NotGraphical(String),

    #[error("invalid edge ({0}, {1}) for a graph of order {2}")]
    InvalidEdge(usize, usize, usize),

    #[error("edge ({0}, {1}) appears more than once")]
    DuplicateEdge(usize, usize),

    #[error("cannot remove edge ({0}, {1}): not present")]
    MissingEdge(usize, usize),

    #[error("malformed graph6 string: {0}")]
    MalformedGraph6(String),

    #[error("K_{0} has no Hamiltonian decomposition")]
    TooSmall(usize),

    #[error("invalid witness spec: {0}")]
    InvalidSpec(String),

    #[error("witness construction failed: {0}")]
    Construction(String),

    #[error("sequence has {len} terms but the target needs {needed}")]
    TooShort { len: usize, needed: usize },

    #[error("n = {n} exceeds the exhaustion limit {limit}")]
    TooLarge { n: usize, limit: usize },

    #[error("target has {order} vertices but n = {n}")]
    TargetTooBig { order: usize, n: usize },

    #[error("cache {path:?} is corrupt at line {line}: {reason}")]
    CorruptCache {
        path: PathBuf,
        line: usize,
        reason: String,
    },

    #[error("i/o error on {path:?}: {reason}")]
    Io { path: PathBuf, reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;
