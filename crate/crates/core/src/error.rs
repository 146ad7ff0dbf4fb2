use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// A computation that must be exact left a remainder or otherwise
    /// contradicted an algebraic identity.
    #[error("internal consistency error: {0}")]
    Consistency(String),
    /// A floating-point quantity is infinite or undefined at the requested point.
    #[error("range error: {0}")]
    Range(String),
    /// Text input could not be parsed.
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

macro_rules! domain {
    ($($arg:tt)*) => { $crate::error::Error::Domain(format!($($arg)*)) };
}
pub(crate) use domain;
