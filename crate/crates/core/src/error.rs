//! Error type shared across the crate.

use crate::ypoly::YPoly;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// `(1+y)^k` does not divide the numerator, so the value is not an
    /// honest polynomial in `y`. Surfacing this is a feature: the class
    /// formulas promise polynomiality, and a residual denominator means a
    /// computation (or its input) is wrong.
    #[error("not a polynomial in y: ({num}) is not divisible by (1+y)^{denom_pow}")]
    NotPolynomial { num: YPoly, denom_pow: u32 },

    /// A series or class constant term that must be invertible is not.
    #[error("constant term is not a unit: {0}")]
    NonUnit(String),

    /// `log` of a series whose constant term is not 1, or `exp` of a series
    /// with a nonzero constant term.
    #[error("series precondition violated: {0}")]
    SeriesDomain(String),

    #[error("ambient ring needs at least one projective factor")]
    EmptyFactorList,

    #[error("invalid dimension data: {0}")]
    InvalidDimension(String),

    /// Weight vector that cannot come from a weighted-homogeneous isolated
    /// singularity (the spectrum product fails to be a polynomial).
    #[error("invalid weights: {0}")]
    InvalidWeights(String),

    #[error("invalid spectrum: {0}")]
    InvalidSpectrum(String),

    /// Inclusion-exclusion table without the |J| = 0 compactification entry.
    #[error("missing compactification entry (|J| = 0) in stratum table")]
    MissingCompactification,

    #[error("missing stratum data: {0}")]
    MissingStratumData(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
