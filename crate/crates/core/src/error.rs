use thiserror::Error;

/// Errors raised anywhere in the crate.
///
/// The CLI maps the variants onto its exit codes: parse problems exit with 1,
/// violated preconditions with 2 and exhausted resource caps with 3.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("illegal move at letter {index}: {reason}")]
    IllegalMove { index: usize, reason: IllegalReason },

    #[error("terminus/base mismatch: {0}")]
    Mismatch(String),

    #[error("diagram is not spherical")]
    NonSpherical,

    #[error("resource limit exceeded: {what} needs {needed}, cap is {cap}")]
    ResourceLimit { what: &'static str, needed: u128, cap: u128 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IllegalReason {
    OriginUnoccupied,
    TargetOccupied,
}

impl std::fmt::Display for IllegalReason {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            IllegalReason::OriginUnoccupied => write!(f, "origin unoccupied"),
            IllegalReason::TargetOccupied => write!(f, "target occupied"),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse { line, message: msg.into() }
    }
}
