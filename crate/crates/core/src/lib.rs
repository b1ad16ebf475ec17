//! Exact query learning for finite concept classes.
//!
//! A class is a set of 0/1 labelings of a universe of at most 64 points.
//! The crate computes Littlestone, VC and consistency dimensions, runs
//! equivalence and membership query learners against honest and
//! adversarial teachers, solves the learning game exactly, and covers
//! randomized counterexamples, sample compression and DFA languages.
//! See `examples/` for one program per capability.

pub mod automata;
pub mod class;
pub mod cli;
pub mod compression;
pub mod concept;
pub mod consistency;
pub mod dimensions;
pub mod distribution;
pub mod error;
pub mod fixtures;
pub mod format;
pub mod gametree;
pub mod hypothesis;
pub mod learners;
pub mod rng;
pub mod teachers;
pub mod thicket;

pub use class::ConceptClass;
pub use concept::{Concept, ConceptSet, PartialConcept, Universe};
pub use error::{Error, Result};
pub use hypothesis::LazyHypothesisClass;
