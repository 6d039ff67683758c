pub mod digraph;
pub mod error;
pub mod groups;
pub mod linedigraph;
pub mod matrix;
pub mod membership;
pub mod report;

pub use digraph::{Digraph, Direction, VertexSet};
pub use error::{Error, Result};
pub use matrix::{ComplexMatrix, IntMatrix, PermutationMatrix};
pub use num_complex::Complex64;
