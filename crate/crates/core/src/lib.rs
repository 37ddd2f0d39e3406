//! # readopt-core
//!
//! Engine for optimizing the readability of English text by evolving synonym
//! substitutions.
//!
//! The pipeline:
//!
//! 1. [`textmodel`] tokenizes a text, computes the counting statistics the
//!    readability formulas consume, and identifies which word positions are
//!    eligible for substitution.
//! 2. [`synonyms`] fills each candidate position with alternatives from a
//!    thesaurus table, embedding nearest neighbors, or an HTTP endpoint.
//! 3. [`ga`] runs a single-objective genetic algorithm over integer genomes
//!    (gene 0 keeps the original word, gene k picks the k-th synonym).
//! 4. [`moo`] runs NSGA-II to trade readability off against the number of
//!    replaced words and, optionally, the semantic drift of the result.
//! 5. [`wmd`] measures that semantic drift as the Word Mover's Distance
//!    between the original and the rewritten text.
//! 6. [`postprocess`] applies rule-based surface fixes to the winning text.
//!
//! Everything is deterministic for a fixed seed: random state lives in a
//! seeded ChaCha generator that is consumed only inside the sequential
//! evolutionary loops.

pub mod error;
pub mod ga;
pub mod metrics;
pub mod moo;
pub mod postprocess;
pub mod synonyms;
pub mod textmodel;
pub mod wmd;

pub use error::{Error, Result};
