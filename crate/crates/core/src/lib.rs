//! Two-neighbor bootstrap percolation on rectangular grids, the
//! nonsymmetric operad of permutations, and the combinatorial models
//! connecting them.
//!
//! The crate has four layers:
//!
//! * [`grid`] — grid configurations, the percolation dynamics, structural
//!   analysis of final configurations, substitution and fine-graining, and
//!   the minimal-percolating-set census.
//! * [`perm`] and [`decompose`] — permutations as operad elements: partial
//!   composition, pattern order, separability, simplicity, and the
//!   substitution decomposition into linear and simple skeletons.
//! * [`filtration`] and [`series`] — the filtration of the permutation
//!   operad as a bimodule over its separable suboperad, generator
//!   extraction, generalized Schröder tables, and simple-permutation counts
//!   via power-series functional inversion.
//! * [`models`] — chord diagrams / Hamiltonian cycles, bicolored trees, and
//!   plane series-parallel networks, with the structure-preserving maps
//!   between them and permutations.
//!
//! [`verify`] bundles the cross-checks between all of these into a single
//! runnable suite.

pub mod decompose;
pub mod filtration;
pub mod grid;
pub mod models;
pub mod perm;
pub mod series;
pub mod verify;

pub use decompose::DecompositionTree;
pub use grid::{CellSet, GridConfig, Rect};
pub use perm::Permutation;
