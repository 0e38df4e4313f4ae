//! Dense complex matrices, permanents and permutations.

mod matrix;
mod permanent;
mod permutation;

pub use matrix::{matrix_product_trace, ComplexMatrix};
pub use permanent::{permanent, permanent_naive};
pub use permutation::{CycleDecomposition, Permutation, Permutations};

pub use num_complex::Complex64 as C64;

/// Absolute tolerance used for equality of exact identities.
pub const DEFAULT_TOL: f64 = 1e-10;
