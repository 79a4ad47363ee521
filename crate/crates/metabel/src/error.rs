//! Error type shared by every module in the crate.

use thiserror::Error;

/// Crate-wide error enum.
///
/// Operations that merely *report* a negative verdict (an invalid datum in a
/// census, a failed isomorphism search) return that verdict in their result
/// type; `Error` is reserved for violated preconditions, exceeded budgets,
/// malformed input, and internal consistency failures.
#[derive(Debug, Error)]
pub enum Error {
    /// Incompatible dimensions between operands.
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    /// Modulus is not a prime in [2, 251].
    #[error("invalid field modulus {0}: must be a prime in [2, 251]")]
    InvalidModulus(u32),

    /// A quotient was requested over a non-contained pair of spaces.
    #[error("not a subspace: {0}")]
    NotASubspace(String),

    /// An enumeration would visit more candidates than the configured budget.
    #[error("budget exceeded: {candidates} candidates over budget {budget}")]
    BudgetExceeded { candidates: u128, budget: u64 },

    /// An operation that requires associativity was given a non-associative algebra.
    #[error("algebra is not associative")]
    NotAssociative,

    /// An operation that requires a metabelian algebra was given something else.
    #[error("algebra is not metabelian")]
    NotMetabelian,

    /// Action matrices violate the discrete bimodule identities.
    #[error("invalid bimodule: {0}")]
    InvalidBimodule(String),

    /// A cocycle table violates the compatibility condition over its bimodule.
    #[error("invalid datum: {0}")]
    InvalidDatum(String),

    /// A theorem-checker hypothesis does not hold for the given input.
    #[error("hypothesis failed: {0}")]
    HypothesisFailed(String),

    /// Two cocycles were compared over different bimodules.
    #[error("bimodule mismatch: the cocycles live over different bimodules")]
    BimoduleMismatch,

    /// Catalog family id not recognised.
    #[error("unknown catalog family: {0}")]
    UnknownFamily(String),

    /// Parameters outside the accepted range for the operation.
    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    /// Malformed serialized input.
    #[error("parse error: {0}")]
    ParseError(String),

    /// Well-formed input that violates a domain invariant.
    #[error("invariant violation: {0}")]
    InvariantViolation(String),

    /// A mathematically guaranteed identity failed; indicates a bug, never user error.
    #[error("internal consistency error: {0}")]
    InternalError(String),
}

pub type Result<T> = std::result::Result<T, Error>;
