//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An input or intermediate exceeds the width the operation supports.
    #[error("value out of range for {what}: {detail}")]
    Overflow { what: &'static str, detail: String },

    /// `crt_combine` received moduli that share a factor.
    #[error("moduli {a} and {b} are not coprime (gcd {g})")]
    NonCoprimeModuli { a: u128, b: u128, g: u128 },

    /// Modular inverse of a non-unit was requested.
    #[error("{value} is not invertible modulo {modulus}")]
    NotInvertible { value: u128, modulus: u128 },

    /// `multiplicative_order` requires gcd(m, q) = 1 and q prime.
    #[error("multiplicative order undefined: {reason}")]
    OrderUndefined { reason: String },

    /// A progression with gcd(first, difference) > 1 contains at most one prime.
    #[error("progression {first} mod {difference} has gcd {g} > 1")]
    DegenerateProgression { first: u128, difference: u128, g: u128 },

    /// Sieve limit above the configured memory guard.
    #[error("sieve limit {limit} exceeds guard {guard}")]
    SieveLimit { limit: u64, guard: u64 },

    /// No prime of multiplicative order 2^n exists for this base.
    #[error("no prime of order 2^{n} for base {base} (exceptional case)")]
    NoOrderPrime { base: u128, n: u32 },

    /// A covering-system chain fails its order or divisibility conditions.
    #[error("invalid covering chain: {reason}")]
    InvalidChain { reason: String },

    /// A covering system failed re-verification.
    #[error("covering verification failed at t={t}: divisor indices {indices:?}")]
    CoveringFailure { t: u64, indices: Vec<usize> },

    /// Search parameters do not match a supported theorem mode.
    #[error("unsupported search mode: {reason}")]
    ModeMismatch { reason: String },

    /// The preimage oracle contradicted a constructed witness. This is a bug.
    #[error("oracle contradiction: {context}")]
    OracleContradiction { context: String },

    /// An argument violates a documented precondition.
    #[error("invalid argument: {reason}")]
    InvalidArgument { reason: String },

    /// A certificate file failed structural validation.
    #[error("malformed certificate: {reason}")]
    MalformedCertificate { reason: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn overflow(what: &'static str, detail: impl Into<String>) -> Self {
        Error::Overflow {
            what,
            detail: detail.into(),
        }
    }

    pub(crate) fn invalid(reason: impl Into<String>) -> Self {
        Error::InvalidArgument {
            reason: reason.into(),
        }
    }
}
