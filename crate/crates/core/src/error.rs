use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("group closure exceeds the order cap of {cap}")]
    SizeLimit { cap: usize },

    #[error("invalid argument: {0}")]
    Argument(String),

    #[error("contract violation: {0}")]
    Contract(String),

    #[error("value is not rational")]
    NotRational,

    #[error("internal consistency failure: {0}")]
    Internal(String),

    #[error("unsupported group: {0}")]
    Unsupported(String),

    #[error("{0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
