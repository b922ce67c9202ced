//! Twin bent functions on the real monomial representation of Clifford
//! algebras, the graphs they generate, and the checks built on top of them.
//!
//! The crate works at desk scale: every claim it makes is verified by
//! explicit computation on matrices of order up to 2^m for small m, with
//! independent routes cross-checked against each other wherever the
//! structure offers two ways to compute the same thing.
//!
//! Module map:
//! - [`monomial`]: signed permutation matrices, the representation's carrier.
//! - [`clifford`]: the gamma basis indexed by base-4 digit strings.
//! - [`bent`]: the twin functions sigma and tau, Walsh spectra, strong
//!   regularity parameters.
//! - [`graphs`]: Cayley graphs, the edge-colored pair graph, strong
//!   regularity checking, isomorphism search with certificates.
//! - [`cliques`]: exact max-clique search, the Hurwitz-Radon bound, the
//!   non-isomorphism certificate.
//! - [`hadamard`]: amicability conditions, block constructions, Hadamard
//!   matrix assembly and recognition.
//! - [`transversal`]: coset transversals and the complementary-coloring
//!   conjectures.

pub mod bent;
mod bits;
pub mod clifford;
pub mod cliques;
pub mod error;
pub mod graphs;
pub mod hadamard;
pub mod monomial;
pub mod transversal;

#[cfg(test)]
mod test_oracle;

pub use error::Error;
