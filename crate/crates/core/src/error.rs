use std::io;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("invalid problem: {0}")]
    InvalidProblem(String),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("not a Pareto optimum: {0}")]
    NotParetoOptimal(String),

    #[error("n = {n} is too large for exhaustive enumeration (limit {limit})")]
    TooLarge { n: usize, limit: usize },

    #[error("cannot select {keep} survivors from {available} members")]
    NotEnoughMembers { keep: usize, available: usize },

    #[error("tournament selection needs a ranking of the parent population")]
    MissingRanking,

    #[error("malformed record file: {0}")]
    MalformedRecords(String),

    #[error(transparent)]
    Io(#[from] io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl Error {
    /// Whether the error stems from user input rather than the run itself.
    pub fn is_config_error(&self) -> bool {
        matches!(self, Error::InvalidProblem(_) | Error::InvalidConfig(_))
    }
}
