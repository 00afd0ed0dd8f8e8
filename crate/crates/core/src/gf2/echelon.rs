//! Echelon bases for subspaces of F2^m.
//!
//! [`XorBasis`] is the incremental workhorse behind every rank test: it keeps
//! at most one basis vector per pivot (highest set bit), so insertion is a
//! handful of XORs and removal of the most recent insertions is O(1), which
//! lets depth-first searches over row selections share prefixes.
//!
//! [`Subspace`] is the value-level view used by the subspace probes: spans,
//! sums, orthogonal complements and intersections.

use super::vector::{low_mask, BitVector};

#[derive(Clone)]
pub struct XorBasis {
    by_pivot: [u64; 64],
    len: usize,
}

impl Default for XorBasis {
    fn default() -> Self {
        Self::new()
    }
}

impl XorBasis {
    pub const fn new() -> Self {
        Self {
            by_pivot: [0; 64],
            len: 0,
        }
    }

    pub const fn len(&self) -> usize {
        self.len
    }

    pub const fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Reduce `v` against the basis; the result is zero iff `v` is in the span.
    #[inline]
    pub fn reduce(&self, mut v: u64) -> u64 {
        while v != 0 {
            let p = 63 - v.leading_zeros() as usize;
            let b = self.by_pivot[p];
            if b == 0 {
                return v;
            }
            v ^= b;
        }
        0
    }

    #[inline]
    pub fn contains(&self, v: u64) -> bool {
        self.reduce(v) == 0
    }

    /// Insert `v`. Returns the pivot slot it occupies, or `None` if `v` was
    /// already in the span (the basis is then unchanged).
    #[inline]
    pub fn insert(&mut self, v: u64) -> Option<usize> {
        let r = self.reduce(v);
        if r == 0 {
            return None;
        }
        let p = 63 - r.leading_zeros() as usize;
        self.by_pivot[p] = r;
        self.len += 1;
        Some(p)
    }

    /// Undo an insertion. Only valid for the most recent insertions in LIFO
    /// order, since later vectors may have been reduced against this one.
    #[inline]
    pub fn remove(&mut self, pivot: usize) {
        debug_assert!(self.by_pivot[pivot] != 0);
        self.by_pivot[pivot] = 0;
        self.len -= 1;
    }

    pub fn vectors(&self) -> impl Iterator<Item = u64> + '_ {
        self.by_pivot.iter().copied().filter(|&b| b != 0)
    }
}

/// A subspace of F2^m held as a reduced row echelon basis.
#[derive(Clone, PartialEq, Eq)]
pub struct Subspace {
    m: usize,
    /// Fully reduced: each pivot bit appears in exactly one basis vector.
    /// Sorted by pivot, descending.
    basis: Vec<u64>,
}

impl Subspace {
    pub fn span(m: usize, vectors: impl IntoIterator<Item = u64>) -> Self {
        let mut xb = XorBasis::new();
        for v in vectors {
            debug_assert_eq!(v & !low_mask(m), 0);
            xb.insert(v);
        }
        Self::from_xor_basis(m, &xb)
    }

    pub fn zero(m: usize) -> Self {
        Self { m, basis: Vec::new() }
    }

    pub fn full(m: usize) -> Self {
        Self::span(m, (0..m).map(|k| 1u64 << k))
    }

    fn from_xor_basis(m: usize, xb: &XorBasis) -> Self {
        let mut by_pivot = xb.by_pivot;
        // back-substitute so that each pivot column is cleared everywhere else
        for p in 0..64 {
            if by_pivot[p] == 0 {
                continue;
            }
            for q in (p + 1)..64 {
                if (by_pivot[q] >> p) & 1 == 1 {
                    by_pivot[q] ^= by_pivot[p];
                }
            }
        }
        let basis = (0..64).rev().map(|p| by_pivot[p]).filter(|&b| b != 0).collect();
        Self { m, basis }
    }

    pub const fn ambient_dim(&self) -> usize {
        self.m
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[u64] {
        &self.basis
    }

    pub fn contains(&self, v: u64) -> bool {
        let mut v = v;
        for &b in &self.basis {
            let p = 63 - b.leading_zeros();
            if (v >> p) & 1 == 1 {
                v ^= b;
            }
        }
        v == 0
    }

    pub fn contains_vector(&self, v: &BitVector) -> bool {
        self.contains(v.bits())
    }

    pub fn is_subspace_of(&self, other: &Self) -> bool {
        self.basis.iter().all(|&b| other.contains(b))
    }

    pub fn sum(&self, other: &Self) -> Self {
        assert_eq!(self.m, other.m, "dimension mismatch");
        Self::span(self.m, self.basis.iter().chain(&other.basis).copied())
    }

    /// The annihilator `{x : x·v = 0 for all v in self}`.
    pub fn orthogonal_complement(&self) -> Self {
        let pivots: Vec<usize> = self
            .basis
            .iter()
            .map(|&b| 63 - b.leading_zeros() as usize)
            .collect();
        let pivot_mask = pivots.iter().fold(0u64, |acc, &p| acc | (1 << p));
        // one null vector per free coordinate f: x_f = 1, x_{pivot(r)} = row_r[f]
        let null = (0..self.m).filter(|&f| (pivot_mask >> f) & 1 == 0).map(|f| {
            let mut x = 1u64 << f;
            for (&b, &p) in self.basis.iter().zip(&pivots) {
                if (b >> f) & 1 == 1 {
                    x |= 1 << p;
                }
            }
            x
        });
        Self::span(self.m, null)
    }

    pub fn intersection(&self, other: &Self) -> Self {
        self.orthogonal_complement()
            .sum(&other.orthogonal_complement())
            .orthogonal_complement()
    }
}

impl std::fmt::Debug for Subspace {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let rows: Vec<String> = self
            .basis
            .iter()
            .map(|&b| BitVector::from_raw(self.m, b).to_string())
            .collect();
        write!(f, "Subspace(m={}, [{}])", self.m, rows.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn members(s: &Subspace) -> Vec<u64> {
        (0..(1u64 << s.ambient_dim())).filter(|&v| s.contains(v)).collect()
    }

    #[test]
    fn insert_remove_lifo() {
        let mut b = XorBasis::new();
        let p1 = b.insert(0b011).unwrap();
        let p2 = b.insert(0b110).unwrap();
        assert_eq!(b.insert(0b101), None);
        assert_eq!(b.len(), 2);
        b.remove(p2);
        assert!(!b.contains(0b101));
        b.remove(p1);
        assert!(b.is_empty());
    }

    #[test]
    fn complement_of_line() {
        let s = Subspace::span(3, [0b011]);
        let perp = s.orthogonal_complement();
        assert_eq!(perp.dim(), 2);
        assert_eq!(members(&perp), vec![0b000, 0b011, 0b100, 0b111]);
        assert_eq!(Subspace::zero(3).orthogonal_complement(), Subspace::full(3));
    }

    proptest! {
        #[test]
        fn intersection_matches_enumeration(
            m in 1usize..=6,
            a in proptest::collection::vec(any::<u64>(), 0..6),
            b in proptest::collection::vec(any::<u64>(), 0..6),
        ) {
            let mask = low_mask(m);
            let u = Subspace::span(m, a.iter().map(|x| x & mask));
            let v = Subspace::span(m, b.iter().map(|x| x & mask));
            let meet = u.intersection(&v);
            let brute: Vec<u64> = (0..(1u64 << m)).filter(|&x| u.contains(x) && v.contains(x)).collect();
            prop_assert_eq!(members(&meet), brute.clone());
            prop_assert_eq!(1usize << meet.dim(), brute.len());
            prop_assert_eq!(u.orthogonal_complement().dim() + u.dim(), m);
            prop_assert!(meet.is_subspace_of(&u) && meet.is_subspace_of(&v));
        }
    }
}
