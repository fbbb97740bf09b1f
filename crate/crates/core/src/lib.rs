//! Products of selection functions and an executable, finitary form of
//! Ramsey's theorem for pairs.
//!
//! The crate is organised in layers:
//!
//! - [`selection`]: selection functions, their binary and finite products, and
//!   the explicitly controlled unbounded product ([`selection::Eps`]).
//! - [`games`]: sequential games built from a selection family, an outcome
//!   function and a control function, with optimal plays and a checker for
//!   the equilibrium equations those plays satisfy.
//! - [`ramsey`]: the Erdős–Rado tree of a 2-colouring, the decidable tree
//!   predicates built on it, and the realizers (weak König's lemma,
//!   Π⁰₁ countable choice, the pigeonhole principle) combined into
//!   [`ramsey::ramsey_pipeline`].
//! - [`oracles`]: brute-force checkers that are deliberately independent of
//!   the realizers they verify.
//! - [`cli`]: the command-line front end and its report formats.
//!
//! Infinite sequences are always represented by finite prefixes. Reading past
//! the end of a prefix yields the move type's default value, so `s` stands for
//! the infinite sequence `s * 0 * 0 * ...`.

pub mod cli;
pub mod error;
pub mod games;
pub mod oracles;
pub mod ramsey;
pub mod selection;

pub use error::{Budget, Error, Result};
