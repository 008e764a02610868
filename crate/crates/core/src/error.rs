use thiserror::Error;

/// Errors produced by the algebraic kernels.
///
/// `Structural` covers malformed inputs (variable mismatches, bad dimensions,
/// unparsable data); the remaining variants are mathematical verdicts that a
/// caller may want to inspect programmatically.
#[derive(Debug, Error)]
pub enum Error {
    #[error("structural error: {0}")]
    Structural(String),

    #[error("variable lists differ: [{0}] vs [{1}]")]
    VarMismatch(String, String),

    #[error("polynomial is not homogeneous: {0}")]
    NotHomogeneous(String),

    #[error("Jordan identity fails: witness component {component} of (x^2(xy) - x(x^2 y)) is {witness}")]
    NotJordan { component: usize, witness: String },

    #[error("algebra has rank {found}, expected {expected}")]
    WrongRank { found: usize, expected: usize },

    #[error("map is not an involution: component {component} of f(f(x)) is not a common multiple of x")]
    NotInvolution { component: usize },

    #[error("maps do not compose to a multiple of the identity (component {component})")]
    NotInverse { component: usize },

    #[error("element is not an idempotent: u^2 != u")]
    NotIdempotent,

    #[error("saturation did not stabilize within {0} quotient rounds")]
    SaturationDiverged(usize),

    #[error("genericity failure: {0} trial batches disagree on the multidegree")]
    TrialsDisagree(usize),

    #[error("degenerate random section in multidegree trial (residual dimension {found}, expected {expected})")]
    DegenerateSection { found: i64, expected: i64 },

    #[error("unknown catalog id: {0}")]
    UnknownEntry(String),

    #[error("catalog verification failed for {id}: {reason}")]
    EntryFailed { id: String, reason: String },

    #[error("{0}")]
    Math(String),
}

impl Error {
    pub fn structural(msg: impl Into<String>) -> Self {
        Error::Structural(msg.into())
    }

    pub fn math(msg: impl Into<String>) -> Self {
        Error::Math(msg.into())
    }

    /// True when the error signals bad input rather than a mathematical verdict.
    pub fn is_structural(&self) -> bool {
        matches!(
            self,
            Error::Structural(_) | Error::VarMismatch(_, _) | Error::UnknownEntry(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
