//! Exact t-values of digital nets over F2 and the structure of matrices B
//! for which (I, B, B²) generates a (0, m, 3)-net.
//!
//! - [`gf2`]: bit-packed vectors and square matrices, LU, order, subspaces.
//! - [`net`]: point generation and t-values by rank and by cell counting.
//! - [`characterization`]: decompositions B = L·P·J·L⁻¹, orbit enumeration,
//!   exhaustive search and subspace probes.
//! - [`cud`]: linear recurrences, overlapping tuples and the Faure nets.

pub mod characterization;
pub mod cud;
pub mod error;
pub mod gf2;
pub mod net;

pub use error::{Error, Result};
pub use gf2::{BitMatrix, BitVector};
pub use net::{NetSpec, PointSet, TValueResult};
