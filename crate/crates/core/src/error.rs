use thiserror::Error;

use crate::chaos::SystemId;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("{} trajectory diverged at iteration {iteration}", system.name())]
    Divergence { system: SystemId, iteration: u64 },

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("length mismatch: expected {expected}, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },

    #[error("non-finite value at position {0}")]
    NonFinite(usize),

    #[error("index out of range: {0}")]
    OutOfRange(String),

    #[error("image too large: {0} pixels")]
    TooLarge(u64),

    #[error("malformed container: {0}")]
    MalformedContainer(String),

    #[error("unsupported container version {0}")]
    UnsupportedVersion(u8),

    #[error("malformed PPM: {0}")]
    Ppm(String),

    #[error("key file line {line}: {msg}")]
    KeyFile { line: usize, msg: String },

    #[error("invalid key: {0}")]
    InvalidKey(String),

    #[error("correlation undefined: zero variance")]
    DegenerateCorrelation,

    #[error("sequence too short for {test}: need {needed} bits, have {have}")]
    TooShort { test: &'static str, needed: usize, have: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
