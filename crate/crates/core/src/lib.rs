//! Exact computation in Röver's groupoid of Cantor-set homeomorphisms generated by
//! Thompson's splits, permutations and the Grigorchuk automaton, together with the
//! poset of expansions built on it, descending links of the rank Morse function and
//! a homological checker for the grounded-flag-complex connectivity criterion.
//!
//! Index conventions: every Rust API is 0-based. The JSON schemas and the textual
//! generator grammar use the 1-based component numbering of the mathematical notation.

pub mod cantor;
pub mod error;
pub mod expr;
pub mod grigorchuk;
pub mod groupoid;
pub mod json;
pub mod limits;
pub mod link;
pub mod poset;
pub mod registry;
pub mod sampling;
pub mod topology;

pub use cantor::{common_refinement, permutation_pushdown, Address, Forest, Permutation, Tree};
pub use error::{Error, Result};
pub use grigorchuk::{GrigWord, KleinLabel, Letter, NucleusForm, NucleusState};
pub use groupoid::GroupoidElement;
pub use limits::Limits;

pub use link::{descending_link, ContractionKind, ContractionRecord, DescendingLink};
pub use poset::{vertex_equals, Vertex};
