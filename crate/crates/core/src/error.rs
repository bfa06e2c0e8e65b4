use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("genome is not a permutation of 0..{len}: {reason}")]
    NotAPermutation { len: usize, reason: String },

    #[error("genome must contain at least one gene")]
    EmptyGenome,

    #[error("length mismatch: expected {expected}, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },

    /// Gate was asked about an individual worse than the population's worst,
    /// which means its cached fitness is out of date.
    #[error("stale fitness cache: fitness {fitness} exceeds worst fitness {tau}")]
    StaleFitness { fitness: f64, tau: f64 },

    #[error("objective returned {0}; fitness must be finite and non-negative")]
    InvalidFitness(f64),

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("{what} of size {n} exceeds the exhaustive-search cap of {cap}")]
    TooLarge {
        what: &'static str,
        n: usize,
        cap: usize,
    },

    #[error("{}:{line}: {message}", path.display())]
    Parse {
        path: PathBuf,
        line: usize,
        message: String,
    },

    #[error("point set needs at least 2 points, got {0}")]
    TooFewPoints(usize),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
