//! Bit-packed linear algebra over F2 for dimensions up to 64.

mod echelon;
mod matrix;
mod order;
mod vector;

pub use echelon::{Subspace, XorBasis};
pub use matrix::{enumerate_unipotent_lower, BitMatrix, TriangularPair, UnipotentLower, MAX_ENUM_DIM};
pub use vector::{rank, BitVector, MAX_DIM};

pub(crate) use matrix::leading_minors_nonsingular_rows;
pub(crate) use vector::{check_dim, low_mask, reverse_low};
