//! Cyclic permutations of `[n]`, the arc diagrams they draw, the Motzkin and
//! Dyck words that encode them, and acyclic b-diagrams obtained by deleting
//! arcs from such a diagram.
//!
//! The crate is organised bottom-up:
//!
//! * [`perm`]: cyclic permutations, their arc sets and ramphoid/keratoid typing.
//! * [`words`]: letter encodings, Motzkin/Dyck predicates, step paths, inflation.
//! * [`inversion`]: recovering every permutation that encodes a given word.
//! * [`bdiagram`]: blocks, six-class typing, z-word realization, cut sets,
//!   complements, crossings and edit operations.
//! * [`generation`]: the cyclic permutations that generate a b-diagram.
//! * [`census`]: exhaustive verification of the word counts.
//!
//! Vertices are 1-based throughout, matching the usual notation for
//! permutations.

pub mod bdiagram;
pub mod census;
pub mod error;
pub mod generation;
pub mod inversion;
pub mod perm;
pub mod words;

pub use bdiagram::{BClassification, BDiagram, CutSet, InvalidReason, Validity};
pub use error::{Error, Result};
pub use generation::{CommonGenerators, GeneratorSet};
pub use inversion::GammaMap;
pub use perm::{Arc, Classification, CyclicPerm, SigmaDiagram};
pub use words::{Dialect, Letter, SigmaWord, Step, StepPath, Word, WordShape};
