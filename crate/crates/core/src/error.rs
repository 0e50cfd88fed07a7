use thiserror::Error;

use crate::expander::ExpansionTrace;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// A cofactor larger than `budget^2` survived trial division.
    #[error("factorization incomplete: cofactor of {cofactor_bits} bits exceeds budget {budget}^2")]
    FactorizationBudgetExceeded { budget: u64, cofactor_bits: u64 },

    #[error("membership of {n} in {sequence} is undecidable within the factorization budget")]
    MembershipUndecidable { sequence: &'static str, n: String },

    #[error("multiplier search for {n} in {sequence} exceeded budget {budget}")]
    SearchBudgetExceeded { sequence: &'static str, n: String, budget: u64 },

    #[error("prefix selection consumed more than {budget} members of {sequence}")]
    PrefixBudgetExceeded { sequence: &'static str, budget: u64 },

    #[error("{what} needs {bits} bits, above the limit of {limit}")]
    DenominatorBudgetExceeded { what: &'static str, bits: u64, limit: u64 },

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("internal assertion failed: {message}")]
    InternalAssertionFailed { message: String, trace: Option<Box<ExpansionTrace>> },

    #[error("oracle limit {limit} exceeds the maximum of {max}")]
    LimitTooLarge { limit: u64, max: u64 },

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid rational: {0}")]
    InvalidRational(String),

    #[error("unknown sequence name: {0}")]
    UnknownSequence(String),
}

impl Error {
    /// True for errors that mean "raise a limit and retry" rather than a
    /// malformed request or a bug.
    pub fn is_budget(&self) -> bool {
        matches!(
            self,
            Error::FactorizationBudgetExceeded { .. }
                | Error::MembershipUndecidable { .. }
                | Error::SearchBudgetExceeded { .. }
                | Error::PrefixBudgetExceeded { .. }
                | Error::DenominatorBudgetExceeded { .. }
        )
    }
}
