//! Error type shared by all modules.
//!
//! The three variants map onto the CLI exit statuses: parse errors (2),
//! precondition violations (3) and numerical-consistency failures (4).

use std::fmt;

#[derive(Debug, Clone)]
pub enum Error {
    /// Input could not be parsed (bad JSON, bad schema, bad flag value).
    Parse(String),
    /// An operation was invoked outside its documented preconditions.
    Precondition(String),
    /// Two routes that must agree disagreed, or a validated invariant failed.
    Consistency(String),
}

impl Error {
    /// Process exit status for the CLI.
    pub fn exit_status(&self) -> i32 {
        match self {
            Error::Parse(_) => 2,
            Error::Precondition(_) => 3,
            Error::Consistency(_) => 4,
        }
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
            Error::Precondition(msg) => write!(f, "precondition violated: {msg}"),
            Error::Consistency(msg) => write!(f, "consistency failure: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
