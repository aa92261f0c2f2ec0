use thiserror::Error;

/// Errors raised by the library.
///
/// `ConditionA` and `ConditionB` are mathematical refusals rather than bugs:
/// the requested computation is not defined (or not supported) for the given
/// data, and the error carries the reason.
#[derive(Debug, Error)]
pub enum Error {
    #[error("variable lists differ: {0} vs {1}")]
    VariableMismatch(String, String),
    #[error("denominator vanishes at the given assignment; offending factor: {factor}")]
    Pole { factor: String },
    #[error("weights belong to different root systems: {0} vs {1}")]
    CrossSystem(String, String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("weight is not dominant integral where required: {0}")]
    NonDominant(String),
    #[error("Condition A fails: 0 lies in the full nilradical cone but not in the quotient cone")]
    ConditionA,
    #[error("strong Condition B fails: {inequality} evaluates to zero")]
    ConditionB { inequality: String },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("usage error: {0}")]
    Usage(String),
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
