use std::fmt;

use crate::error::{Error, Result};

/// Largest supported dimension: one `u64` word per vector or matrix row.
pub const MAX_DIM: usize = 64;

pub(crate) fn check_dim(m: usize) -> Result<()> {
    if (1..=MAX_DIM).contains(&m) {
        Ok(())
    } else {
        Err(Error::DimensionOutOfRange { m, max: MAX_DIM })
    }
}

/// Mask of the low `n` bits, valid for `n` in `0..=64`.
#[inline]
pub(crate) const fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Reverse the low `m` bits of `word`.
#[inline]
pub(crate) const fn reverse_low(word: u64, m: usize) -> u64 {
    word.reverse_bits() >> (64 - m)
}

/// A vector in F2^m. Entry `k` (0-based) lives at bit position `k`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitVector {
    m: usize,
    bits: u64,
}

impl BitVector {
    /// Fails if `m` is out of range or `bits` has anything set at or above bit `m`.
    pub fn new(m: usize, bits: u64) -> Result<Self> {
        check_dim(m)?;
        if bits & !low_mask(m) != 0 {
            return Err(Error::InvalidArgument(format!(
                "bits {bits:#x} exceed dimension {m}"
            )));
        }
        Ok(Self { m, bits })
    }

    pub(crate) const fn from_raw(m: usize, bits: u64) -> Self {
        Self { m, bits }
    }

    pub fn zero(m: usize) -> Result<Self> {
        Self::new(m, 0)
    }

    /// Unit vector with a one at entry `k` (0-based).
    pub fn unit(m: usize, k: usize) -> Result<Self> {
        check_dim(m)?;
        if k >= m {
            return Err(Error::InvalidArgument(format!("entry {k} out of range for m = {m}")));
        }
        Ok(Self { m, bits: 1 << k })
    }

    pub fn from_entries(entries: &[bool]) -> Result<Self> {
        let m = entries.len();
        check_dim(m)?;
        let bits = entries
            .iter()
            .enumerate()
            .fold(0u64, |acc, (k, &e)| acc | (u64::from(e) << k));
        Ok(Self { m, bits })
    }

    pub const fn dim(&self) -> usize {
        self.m
    }

    pub const fn bits(&self) -> u64 {
        self.bits
    }

    pub const fn get(&self, k: usize) -> bool {
        (self.bits >> k) & 1 == 1
    }

    pub const fn is_zero(&self) -> bool {
        self.bits == 0
    }

    /// Dot product over F2. Panics on mismatched dimensions.
    pub fn dot(&self, other: &Self) -> bool {
        assert_eq!(self.m, other.m, "dimension mismatch");
        (self.bits & other.bits).count_ones() & 1 == 1
    }
}

impl std::ops::BitXor for BitVector {
    type Output = Self;

    fn bitxor(self, rhs: Self) -> Self {
        assert_eq!(self.m, rhs.m, "dimension mismatch");
        Self {
            m: self.m,
            bits: self.bits ^ rhs.bits,
        }
    }
}

impl fmt::Display for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for k in 0..self.m {
            f.write_str(if self.get(k) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitVector({self})")
    }
}

impl std::str::FromStr for BitVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let entries = s
            .chars()
            .enumerate()
            .map(|(k, c)| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(Error::Parse {
                    line: 1,
                    column: k + 1,
                    message: format!("expected '0' or '1', found {other:?}"),
                }),
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_entries(&entries)
    }
}

/// Rank over F2 of a list of vectors of a common dimension. The empty list has rank 0.
pub fn rank(vectors: &[BitVector]) -> usize {
    if let Some(first) = vectors.first() {
        debug_assert!(vectors.iter().all(|v| v.m == first.m));
    }
    rank_words(vectors.iter().map(|v| v.bits))
}

pub(crate) fn rank_words(words: impl IntoIterator<Item = u64>) -> usize {
    let mut basis = super::XorBasis::new();
    words.into_iter().filter(|&w| basis.insert(w).is_some()).count()
}
