use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A series whose constant coefficient is not the ring identity was used
    /// where a unit series is required.
    #[error("constant coefficient is not 1: {0}")]
    NonUnitConstant(String),

    /// Exact division by a positive integer failed while solving for the
    /// coefficient of `t^degree`.
    #[error("not divisible by {divisor} at degree {degree} (residue {residue})")]
    Integrality {
        degree: usize,
        divisor: u64,
        residue: String,
    },

    #[error("insufficient precision: {what} requires {required}, have {available}")]
    Precision {
        what: String,
        required: usize,
        available: usize,
    },

    #[error("enumeration of {required} points exceeds the budget of {budget}")]
    Budget { required: u128, budget: u128 },

    #[error("invalid variety spec: {0}")]
    InvalidSpec(String),

    /// Point counts that cannot come from a variety at the given precision.
    #[error("not a zeta function of a variety at degree {degree}: {reason}")]
    InconsistentCounts { degree: usize, reason: String },

    #[error("no rational function with degrees <= {dmax} matches the series")]
    NoRationalSolution { dmax: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl Error {
    pub(crate) fn precision(what: impl Into<String>, required: usize, available: usize) -> Self {
        Error::Precision {
            what: what.into(),
            required,
            available,
        }
    }
}
