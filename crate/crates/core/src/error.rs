use thiserror::Error;

/// Errors raised by the graphcalc operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("index {index} out of range (limit {limit})")]
    IndexOutOfRange { index: usize, limit: usize },

    #[error("edge {0} is a loop and cannot be contracted")]
    LoopContraction(usize),

    #[error("graph contains a loop")]
    LoopPresent,

    #[error("graph is not simple")]
    NotSimple,

    #[error("graph is disconnected")]
    Disconnected,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("guard exceeded: {guard} is {actual}, limit {limit}")]
    GuardExceeded {
        guard: &'static str,
        actual: usize,
        limit: usize,
    },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("sequence horizons differ ({0} vs {1})")]
    HorizonMismatch(usize, usize),

    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },

    #[error("oracle has no witness: {0}")]
    NoWitness(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn guard(name: &'static str, actual: usize, limit: usize) -> Result<()> {
    if actual > limit {
        Err(Error::GuardExceeded {
            guard: name,
            actual,
            limit,
        })
    } else {
        Ok(())
    }
}
