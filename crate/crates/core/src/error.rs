use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: {0} vs {1} variables")]
    Dimension(usize, usize),
    #[error("index {index} out of range for n = {n}")]
    Index { index: usize, n: usize },
    #[error("substitution is not Laurent: x_{0} occurs with a negative exponent but is sent to a constant")]
    NonLaurent(usize),
    #[error("not divisible: {0}")]
    Divisibility(String),
    #[error("pole: {0}")]
    Pole(String),
    #[error("parity: {0}")]
    Parity(String),
    #[error("invalid argument: {0}")]
    Argument(String),
    #[error("{0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
