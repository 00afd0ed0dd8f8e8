//! Structure of matrices B with t(I, B, B²) = 0.
//!
//! Such B are exactly the conjugates L·P·J·L⁻¹ of P·J by unit-diagonal lower
//! triangular L, and all of them satisfy B³ = I. This module builds those
//! decompositions constructively, enumerates the conjugacy orbit, checks the
//! statement exhaustively for small m, and exposes the subspace computations
//! behind the transport of third generating matrices.

mod decompose;
mod probe;
mod search;

pub use decompose::{
    characterize_2d, conjugacy_orbit, decompose_t0_triple, lower_transform, pj_identities_check,
    Characterization2D, ConjugacyWitness,
};
pub use probe::{c_transport_probe, subspace_dimension_probe, DimensionProbe, TransportProbe, MAX_PROBE_DIM};
pub use search::{exhaustive_search_t0, SearchReport, MAX_SEARCH_DIM};

use crate::gf2::BitMatrix;

/// P·J for dimension m.
pub(crate) fn pj(m: usize) -> crate::Result<BitMatrix> {
    Ok(&BitMatrix::pascal_p(m)? * &BitMatrix::antidiag_j(m)?)
}
