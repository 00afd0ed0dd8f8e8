//! Subspace computations for nets with t(A, B, C) = 0.
//!
//! For i + j ≤ m − 1 let V(i, j) be the span of the first i rows of A, the
//! first m − i − j − 1 rows of B and the first j rows of C. Zero t-value
//! forces every V(i, j) to be a hyperplane, any k of them with a common j to
//! meet in dimension m − k, and the vectors outside all V(i, j) (fixed j) to
//! form a coset of size 2^j. That coset is determined by A and B together
//! with the first j rows of C, which is what makes C recoverable from A, B up
//! to a unit lower triangular factor.

use serde::Serialize;

use super::lower_transform;
use crate::error::{Error, Result};
use crate::gf2::{BitMatrix, Subspace};
use crate::net::{t_value_rank, NetSpec};

/// Probes enumerate all of F2^m, so m is kept small.
pub const MAX_PROBE_DIM: usize = 12;

fn v_space(a: &BitMatrix, b: &BitMatrix, c: &BitMatrix, i: usize, j: usize) -> Subspace {
    let m = a.dim();
    let rows = a.rows()[..i]
        .iter()
        .chain(&b.rows()[..m - i - j - 1])
        .chain(&c.rows()[..j])
        .copied();
    Subspace::span(m, rows)
}

fn require_t0(mats: [&BitMatrix; 3]) -> Result<()> {
    let m = mats[0].dim();
    if m > MAX_PROBE_DIM {
        return Err(Error::DimensionOutOfRange {
            m,
            max: MAX_PROBE_DIM,
        });
    }
    let r = t_value_rank(&NetSpec::new(mats.iter().map(|&x| x.clone()).collect())?);
    if r.t != 0 {
        return Err(Error::NotT0(r));
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DimensionProbe {
    pub m: usize,
    pub j: usize,
    pub indices: Vec<usize>,
    /// dim V(i, j) for each selected i.
    pub subspace_dims: Vec<usize>,
    pub intersection_dim: usize,
    pub expected_intersection_dim: usize,
    /// Number of vectors lying in no V(i, j), 0 ≤ i ≤ m − j − 1.
    pub complement_count: u64,
    pub expected_complement_count: u64,
}

impl DimensionProbe {
    pub fn holds(&self) -> bool {
        self.subspace_dims.iter().all(|&d| d + 1 == self.m)
            && self.intersection_dim == self.expected_intersection_dim
            && self.complement_count == self.expected_complement_count
    }
}

/// Dimension of ∩ V(i, j) over the selected `indices` (via orthogonal
/// complements) and the size of the set of vectors outside every V(i, j)
/// for this `j` (by enumerating F2^m).
pub fn subspace_dimension_probe(
    a: &BitMatrix,
    b: &BitMatrix,
    c: &BitMatrix,
    j: usize,
    indices: &[usize],
) -> Result<DimensionProbe> {
    require_t0([a, b, c])?;
    let m = a.dim();
    if indices.is_empty() || indices.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidArgument("indices must be non-empty and strictly increasing".into()));
    }
    let max_i = *indices.last().expect("non-empty");
    if j + max_i > m - 1 {
        return Err(Error::InvalidArgument(format!(
            "j + max(indices) = {} exceeds m - 1 = {}",
            j + max_i,
            m - 1
        )));
    }
    let all: Vec<Subspace> = (0..m - j).map(|i| v_space(a, b, c, i, j)).collect();
    let selected: Vec<&Subspace> = indices.iter().map(|&i| &all[i]).collect();
    let meet = selected[1..]
        .iter()
        .fold(selected[0].clone(), |acc, s| acc.intersection(s));
    let complement_count = (0..(1u64 << m))
        .filter(|&v| all.iter().all(|s| !s.contains(v)))
        .count() as u64;
    Ok(DimensionProbe {
        m,
        j,
        indices: indices.to_vec(),
        subspace_dims: selected.iter().map(|s| s.dim()).collect(),
        intersection_dim: meet.dim(),
        expected_intersection_dim: m - indices.len(),
        complement_count,
        expected_complement_count: 1 << j,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TransportProbe {
    /// j (1-based) where c′_j ∉ c_j + ⟨c_1, …, c_{j−1}⟩.
    pub coset_failures: Vec<usize>,
    /// j where ⟨c_1, …, c_j⟩ ≠ ⟨c′_1, …, c′_j⟩.
    pub span_failures: Vec<usize>,
    /// (i, j) where V(i, j) ≠ W(i, j).
    pub subspace_failures: Vec<(usize, usize)>,
    /// Unit lower triangular L with L·C = C′.
    pub transporter: BitMatrix,
}

impl TransportProbe {
    pub fn holds(&self) -> bool {
        self.coset_failures.is_empty() && self.span_failures.is_empty() && self.subspace_failures.is_empty()
    }
}

/// Check, for two nets (A, B, C) and (A, B, C′) with t = 0, that C′ differs
/// from C row by row only by earlier rows of C, and return the transporting L.
pub fn c_transport_probe(
    a: &BitMatrix,
    b: &BitMatrix,
    c: &BitMatrix,
    c_prime: &BitMatrix,
) -> Result<TransportProbe> {
    require_t0([a, b, c])?;
    require_t0([a, b, c_prime])?;
    let m = a.dim();

    let mut coset_failures = Vec::new();
    let mut span_failures = Vec::new();
    for j in 1..=m {
        let earlier = Subspace::span(m, c.rows()[..j - 1].iter().copied());
        if !earlier.contains(c_prime.row(j - 1) ^ c.row(j - 1)) {
            coset_failures.push(j);
        }
        let lhs = Subspace::span(m, c.rows()[..j].iter().copied());
        let rhs = Subspace::span(m, c_prime.rows()[..j].iter().copied());
        if lhs != rhs {
            span_failures.push(j);
        }
    }
    let mut subspace_failures = Vec::new();
    for j in 0..m {
        for i in 0..(m - j) {
            if v_space(a, b, c, i, j) != v_space(a, b, c_prime, i, j) {
                subspace_failures.push((i, j));
            }
        }
    }
    let transporter = lower_transform(c, c_prime).map_err(|e| {
        Error::TheoremViolation(format!(
            "t(A,B,C) = t(A,B,C') = 0 but {e}; A = {}, B = {}, C = {}, C' = {}",
            a.to_compact(),
            b.to_compact(),
            c.to_compact(),
            c_prime.to_compact()
        ))
    })?;
    Ok(TransportProbe {
        coset_failures,
        span_failures,
        subspace_failures,
        transporter,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::characterization::pj;
    use crate::gf2::enumerate_unipotent_lower;

    fn ipj(m: usize) -> (BitMatrix, BitMatrix, BitMatrix) {
        (
            BitMatrix::identity(m).unwrap(),
            BitMatrix::pascal_p(m).unwrap(),
            BitMatrix::antidiag_j(m).unwrap(),
        )
    }

    /// log2 of the number of vectors common to all selected subspaces, by enumeration.
    fn brute_intersection_dim(a: &BitMatrix, b: &BitMatrix, c: &BitMatrix, j: usize, idx: &[usize]) -> usize {
        let m = a.dim();
        let spaces: Vec<Subspace> = idx.iter().map(|&i| v_space(a, b, c, i, j)).collect();
        let n = (0..(1u64 << m)).filter(|&v| spaces.iter().all(|s| s.contains(v))).count();
        assert!(n.is_power_of_two());
        n.trailing_zeros() as usize
    }

    #[test]
    fn jpi_full_selection() {
        let (i, p, j) = ipj(3);
        let r = subspace_dimension_probe(&j, &p, &i, 0, &[0, 1, 2]).unwrap();
        assert_eq!(r.intersection_dim, 0);
        assert_eq!(r.complement_count, 1);
        assert!(r.holds());
    }

    #[test]
    fn single_subspace_is_hyperplane() {
        let (i, p, j) = ipj(6);
        for jj in 0..6 {
            for ii in 0..(6 - jj) {
                let r = subspace_dimension_probe(&i, &p, &j, jj, &[ii]).unwrap();
                assert_eq!(r.intersection_dim, 5);
                assert!(r.holds());
            }
        }
    }

    #[test]
    fn pj_triple_complement() {
        let b = pj(4).unwrap();
        let b2 = &b * &b;
        let ident = BitMatrix::identity(4).unwrap();
        let r = subspace_dimension_probe(&ident, &b, &b2, 2, &[0, 1]).unwrap();
        assert_eq!(r.complement_count, 4);
        assert!(r.holds());
    }

    #[test]
    fn intersections_match_enumeration() {
        let (i, p, j) = ipj(5);
        for jj in 0..5 {
            let n = 5 - jj;
            for mask in 1u32..(1 << n) {
                let idx: Vec<usize> = (0..n).filter(|&k| (mask >> k) & 1 == 1).collect();
                let r = subspace_dimension_probe(&p, &j, &i, jj, &idx).unwrap();
                assert_eq!(r.intersection_dim, brute_intersection_dim(&p, &j, &i, jj, &idx));
                assert!(r.holds(), "{r:?}");
            }
        }
    }

    #[test]
    fn probe_rejects_bad_input() {
        let (i, p, j) = ipj(4);
        assert!(matches!(subspace_dimension_probe(&i, &i, &j, 0, &[0]), Err(Error::NotT0(_))));
        assert!(subspace_dimension_probe(&i, &p, &j, 2, &[2]).is_err());
        assert!(subspace_dimension_probe(&i, &p, &j, 0, &[1, 1]).is_err());
        assert!(subspace_dimension_probe(&i, &p, &j, 0, &[]).is_err());
        let (i13, p13, j13) = ipj(13);
        assert!(matches!(
            subspace_dimension_probe(&i13, &p13, &j13, 0, &[0]),
            Err(Error::DimensionOutOfRange { .. })
        ));
    }

    #[test]
    fn transport_identity() {
        let (i, p, j) = ipj(5);
        let r = c_transport_probe(&i, &p, &j, &j).unwrap();
        assert!(r.holds());
        assert!(r.transporter.is_identity());
    }

    #[test]
    fn transport_recovers_lower_factor() {
        let (i, p, j) = ipj(4);
        for l0 in enumerate_unipotent_lower(4).unwrap() {
            let r = c_transport_probe(&i, &j, &p, &(&l0 * &p)).unwrap();
            assert!(r.holds());
            assert_eq!(r.transporter, l0);
        }
        let b = pj(4).unwrap();
        let b2 = &b * &b;
        for l0 in enumerate_unipotent_lower(4).unwrap().step_by(3) {
            let r = c_transport_probe(&i, &b, &b2, &(&l0 * &b2)).unwrap();
            assert!(r.holds());
            assert_eq!(r.transporter, l0);
        }
    }

    #[test]
    fn transport_rejects_non_t0() {
        let (i, p, j) = ipj(3);
        assert!(matches!(c_transport_probe(&i, &p, &j, &i), Err(Error::NotT0(_))));
    }
}
