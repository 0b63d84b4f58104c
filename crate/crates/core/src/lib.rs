//! Deciders for k-binomial equivalence of words.
//!
//! Two words are k-binomially equivalent when every nonempty word of length
//! at most k occurs as a scattered factor (subsequence) equally often in
//! both. This crate provides three deciders for that relation plus a factor
//! matcher built on top of them:
//!
//! - [`oracle_equivalent`]: exhaustive comparison of full coefficient
//!   tables. Exponential in k; the ground truth for small inputs.
//! - [`path_equivalent`]: deterministic decision via counting automata whose
//!   accepting paths enumerate scattered factors. Produces a witness factor
//!   on inequivalence.
//! - [`mc_equivalent`]: Monte-Carlo fingerprint that compresses the whole
//!   coefficient table into one polynomial evaluation over a random prime
//!   field. Runs in O(nk² + k⁴) time with one-sided error at most 1/n:
//!   inequivalent words may be declared equivalent, never the reverse.
//! - [`find_equivalent_factors`]: all factors of a text that are k-binomially
//!   equivalent to a pattern.

pub mod error;
pub mod matcher;
pub mod mc;
pub mod nfa;
pub mod oracle;
pub mod word;

pub use error::{Error, Result};
pub use matcher::{find_equivalent_factors, MatchResult, Method};
pub use mc::{evaluate_q, exponent_code, mc_equivalent, random_prime, McConfig, McOutcome};
pub use nfa::{path_equivalent, LayeredNfa, Verdict};
pub use oracle::{
    binomial_coefficient, binomial_table, oracle_equivalent, BigCount, BinomialTable,
};
pub use word::{joint_alphabet, random_word, Alphabet, Word};
