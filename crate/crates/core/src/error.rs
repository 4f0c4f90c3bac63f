use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Text that could not be read as a tuple, set, partition or tableau.
    #[error("parse error: {0}")]
    Parse(String),

    /// Well-formed input that violates a precondition (wrong R, not an
    /// R-permutation, non-gapless tuple, ...).
    #[error("invalid input: {0}")]
    Input(String),

    /// Shape and column data disagree.
    #[error("structural error: {0}")]
    Structure(String),

    /// An exhaustive computation would exceed its configured budget.
    #[error("resource guard exceeded: {0}")]
    Guard(String),
}

pub type Result<T> = std::result::Result<T, Error>;

macro_rules! input_err {
    ($($arg:tt)*) => { $crate::error::Error::Input(format!($($arg)*)) };
}
pub(crate) use input_err;
