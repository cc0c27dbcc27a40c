//! Exact p-adic analysis of Stirling numbers.
//!
//! Everything here is integer or rational arithmetic with arbitrary
//! precision; floating point never enters a computation. The main
//! capabilities:
//!
//! - [`padic`]: base-p digit vectors, p-adic valuations and unit parts,
//!   and the classical factorial/binomial congruences (Legendre, Kummer,
//!   Lucas, Anton) that drive everything else.
//! - [`series`]: truncated power series / polynomials with exact rational
//!   coefficients.
//! - [`stirling`]: memoized triangles of Stirling numbers of both kinds,
//!   plus streaming (optionally modular) row iterators for large sweeps.
//! - [`bernoulli`]: higher-order Bernoulli numbers and polynomials from
//!   their generating function, and the connection formulas tying them to
//!   Stirling numbers.
//! - [`minzero`]: classification of "minimum zero" Stirling numbers and
//!   "maximum pole" Bernoulli numbers, with exact predicted valuations and
//!   unit residues, and the shift/scaling/invariance laws they obey.
//! - [`oracle`]: a brute-force sweep engine that re-verifies every claim
//!   implemented by [`minzero`] over configurable ranges and reports any
//!   counterexample.
//!
//! The `examples/` directory contains one runnable walkthrough per
//! capability; the `stirling-padic` binary exposes the same functionality
//! as `compute` / `classify` / `verify` / `table` subcommands.

// divisibility tests read better as explicit remainders here
#![allow(clippy::manual_is_multiple_of)]

pub mod bernoulli;
pub mod minzero;
pub mod oracle;
pub mod output;
pub mod padic;
pub mod series;
pub mod stirling;

pub use padic::{DigitVector, Prime, ValUnit, Valuation};
pub use series::SeriesPoly;
pub use stirling::StirlingKind;

/// Errors shared across the crate.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    /// The p-adic valuation of zero is +infinity; it has no finite value
    /// and zero has no unit part.
    #[error("valuation/unit part of zero is undefined")]
    ZeroValuation,
    /// An argument violated an operation's documented domain.
    #[error("domain error: {0}")]
    Domain(String),
    /// Two independent routes to the same quantity disagreed. This always
    /// indicates a bug and is never expected at runtime.
    #[error("internal consistency failure: {0}")]
    Inconsistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;
