//! Schemmel totient functions and their nontotient numbers.
//!
//! For an order `r >= 1`, the Schemmel totient `S_r` is the multiplicative
//! function with `S_r(p^a) = 0` when `p <= r` and `p^(a-1) * (p - r)` when
//! `p > r`; `S_1` is Euler's phi. A positive integer outside the range of
//! `S_r` is a *nontotient of order r*, and `G_r` denotes the set of them.
//!
//! The crate provides:
//!
//! * exact evaluation, range sieves, and a complete inverse-image search
//!   (`S_r(x) = n` solved exactly), which serves as the ground-truth oracle
//!   for everything else ([`schemmel`]);
//! * covering-congruence systems built from primes with power-of-two
//!   multiplicative orders, plus searches that emit finite, re-checkable
//!   certificates for statements of the form "`base^a * p` is a nontotient
//!   for every `a >= 0`" ([`covering`]);
//! * fast classifiers with explicit witnesses for several structured
//!   families, cross-validated against the oracle ([`classify`]);
//! * canonical JSON serialization for every certificate so third parties
//!   can re-verify them from disk ([`certs`]).

pub mod arith;
pub mod certs;
pub mod classify;
pub mod covering;
pub mod error;
pub mod schemmel;

pub use arith::{ArithmeticProgression, Congruence, Factorization, Primality};
pub use classify::{ClassificationOutcome, SplitCheckOutcome, Verdict, XcheckReport};
pub use covering::{CoveringSystem, PersistenceCertificate, Thm11Witness};
pub use error::Error;
pub use schemmel::{NontotientDecision, PreimageResult, SchemmelOrder};

/// Tool version stamped into output envelopes.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
