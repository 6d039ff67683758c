//! Dense complex and integer matrices, permutation matrices, and the
//! explicit unitary constructions built from them.

mod complex;
mod integer;
mod permutation;
mod polar;

pub use complex::{block_double, circulant_spectrum, dft, ComplexMatrix};
pub use integer::{hypercube_weighing, IntMatrix, MAX_WEIGHING_ORDER};
pub use permutation::{complementary, pairwise_complementary, PermutationMatrix};
pub use polar::nearest_unitary;

/// Entries with modulus above this count as nonzero.
pub const DEFAULT_SUPPORT_TOL: f64 = 1e-9;
/// Unitarity residual at or below this passes.
pub const DEFAULT_UNITARY_TOL: f64 = 1e-8;
