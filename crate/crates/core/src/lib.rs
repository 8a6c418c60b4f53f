//! Reduced words for the longest element of the symmetric group.
//!
//! The crate computes the expected number of commutation positions,
//! consecutive noncommuting pairs and long braid moves in a uniformly random
//! reduced word of `w0 = n(n-1)...21`, three ways:
//!
//! * exhaustively, by enumerating every reduced word ([`word::enumerate_words`]);
//! * by dynamic programming over the weak order ([`word::CountingSession`]);
//! * in closed form through hook-length ratios ([`expectations`]).
//!
//! A seeded, exactly uniform sampler ([`sampler`]) gives the Monte Carlo
//! counterpart, and [`verify`] ties all of them together into a self-check.

pub mod error;
pub mod expectations;
pub mod perm;
pub mod sampler;
pub mod table;
pub mod tableaux;
pub mod verify;
pub mod word;

pub use error::{Error, Result};
pub use expectations::{ExpectationReport, Method};
pub use perm::{Letter, Permutation};
pub use sampler::SampleSummary;
pub use tableaux::{HookGrid, Shape};
pub use word::{CountingSession, ReducedWord, WordStats};

/// Exact rational used for every expectation.
pub type ExactRational = num_rational::BigRational;

/// Exact number of reduced words (or standard Young tableaux).
pub type WordCount = num_bigint::BigUint;

/// `C(n, 2)`, the length of the longest element of `S_n`.
pub fn longest_length(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}
