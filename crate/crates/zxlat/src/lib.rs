//! Exact computation with Z[x] lattices and binomial difference ideals.
//!
//! The crate computes Gröbner bases of Z[x] lattices in generalized Hermite
//! normal form, kernels and orthogonal complements, the x-/Z-/Z[x]-/P-
//! saturations, classification of Laurent binomial difference ideals
//! (proper, prime, reflexive, perfect, toric), reflexive and perfect
//! closures, decomposition into reflexive prime components, and toric
//! difference variety implicitization and parametrization with an order
//! bound. Everything is exact integer/rational arithmetic; nothing is
//! approximated.

pub mod error;
pub mod exactring;
pub mod coeffgroup;
pub mod lattice;
pub mod saturation;

pub use error::{Error, Result};
