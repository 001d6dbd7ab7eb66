//! pcmlab: pairwise comparison matrices, inconsistency indices, and
//! empirical axiom checking.
//!
//! The crate has five layers:
//!
//! - [`pcm`]: the reciprocal matrix data model, generators, the dominant
//!   eigenpair, and consistency predicates;
//! - [`indices`]: the registry of inconsistency indices (functions from a
//!   PCM to a real number) plus the generic triad-aggregation builder;
//! - [`axioms`]: executable checkers for the published axiom systems, with
//!   seeded randomized falsification search. A check can falsify an axiom
//!   with a replayable witness; it can never prove satisfaction, only report
//!   "no counterexample in N trials";
//! - [`compliance`]: the full index-by-axiom grid compared against the
//!   satisfaction results reported in the literature;
//! - [`similarity`]: Jaccard similarity between the four axiom systems.

pub mod axioms;
pub mod compliance;
pub mod document;
pub mod error;
pub mod indices;
pub mod pcm;
pub mod similarity;

pub use document::MatrixDocument;
pub use error::{IndexError, PcmError};
pub use pcm::Pcm;
