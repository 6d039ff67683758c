use thiserror::Error;

/// Errors returned by the library.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    /// The input violates a documented precondition (bad index, wrong shape, ...).
    #[error("invalid input: {0}")]
    Input(String),
    /// An exhaustive routine was asked to run above its configured size limit.
    #[error("capacity exceeded: {what} is {got}, limit is {limit}")]
    Capacity {
        what: &'static str,
        got: usize,
        limit: usize,
    },
    /// A file or stream could not be parsed.
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    /// A group table failed one of the group axioms.
    #[error("invalid group table: {0}")]
    Validation(String),
    /// The given elements generate a proper subgroup.
    #[error("elements generate a subgroup of order {subgroup}, not the whole group of order {order}")]
    NotGenerating { subgroup: usize, order: usize },
    /// A construction produced a matrix that failed its own verification.
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }
}
