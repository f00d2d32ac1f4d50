use num_bigint::BigUint;
use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    /// A denominator in a residue ring was nonzero but not invertible.
    /// Carries the nontrivial factor of the modulus that was discovered.
    #[error("bad reduction: denominator shares factor {factor} with the modulus")]
    BadReduction { factor: BigUint },

    /// The reduced Newton Jacobian lost full column rank mod p.
    #[error("singular Jacobian at column {column} during Newton lifting")]
    SingularJacobian { column: usize },

    /// Rational reconstruction of a lifted coefficient failed.
    #[error("rational reconstruction failed for {what}")]
    ReconstructionFailed { what: String },

    /// No permutation triple with the requested cycle data exists in the
    /// searched group.
    #[error("no monodromy triple found for q = {q}")]
    NoTriple { q: u64 },

    /// An identity the pipeline relies on failed to hold.
    #[error("inconsistency: {0}")]
    Inconsistent(String),

    /// The two pole divisors in a fixed-locus computation intersect.
    #[error("common pole: the involution image shares zeros with the pole divisor")]
    CommonPole,

    /// A curve that must be nonsingular has vanishing discriminant.
    #[error("singular curve: discriminant is zero")]
    SingularCurve,

    /// Point counting requested at a prime of bad reduction.
    #[error("prime {p} divides the minimal discriminant")]
    BadPrime { p: u64 },

    /// A signature or profile that is not hyperbolic / not consistent.
    #[error("invalid input: {0}")]
    Invalid(String),

    /// Unsupported conductor for the cyclic cubic area computation.
    #[error("unsupported conductor {0} (supported: 7, 9, 13)")]
    UnsupportedConductor(u64),
}

pub type Result<T> = std::result::Result<T, Error>;
