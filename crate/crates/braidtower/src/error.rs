use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error at token `{token}`: {msg}")]
    Parse { token: String, msg: String },
    #[error("degree mismatch: {0} vs {1}")]
    Degree(usize, usize),
    #[error("enumeration cap {cap} exceeded (at least {partial} elements)")]
    Overflow { cap: usize, partial: usize },
    #[error("budget exceeded: estimated {estimate} > {budget}")]
    Budget { estimate: u128, budget: u128 },
    #[error("certification failed: {0}")]
    Certify(String),
    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn parse_err(token: impl Into<String>, msg: impl Into<String>) -> Error {
    Error::Parse { token: token.into(), msg: msg.into() }
}
