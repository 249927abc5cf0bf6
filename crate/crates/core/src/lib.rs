//! Irreversible k-threshold conversion on corona `C_n ⊙ K_p` and double
//! corona `C_n ⊙⊙ K_p` graphs.
//!
//! * [`graph`] builds the families with a fixed vertex numbering.
//! * [`dynamics`] runs the threshold process.
//! * [`closed_form`] evaluates conversion numbers and their recurrences.
//! * [`constructions`] produces minimum conversion sets and block patterns.
//! * [`search`] finds minimum conversion sets exhaustively.
//! * [`probability`] gives exact and sampled success probabilities.
//! * [`cli`] backs the `thresholdlab` binary.

pub mod cli;
pub mod closed_form;
pub mod constructions;
pub mod dynamics;
pub mod error;
pub mod graph;
pub mod probability;
pub mod search;

pub use closed_form::ConversionNumber;
pub use dynamics::{ProcessTrace, SeedSet};
pub use error::{Error, Result};
pub use graph::{FamilySpec, Graph, VertexRole};
pub use probability::ExactProbability;
