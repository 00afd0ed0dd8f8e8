use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::vector::{check_dim, low_mask, reverse_low, BitVector, MAX_DIM};
use crate::error::{Error, Result};

/// Square m×m matrix over F2, one word per row.
///
/// Row `i` and column `j` are 0-based; row 0 is the top row. Column `j` of a
/// row lives at bit position `j`, so XOR of two row words is row addition.
/// Words beyond row `m` and bits beyond column `m` are always zero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitMatrix {
    m: usize,
    rows: [u64; MAX_DIM],
}

/// Unit-diagonal LU factors with `l * u` equal to the factored matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriangularPair {
    pub l: BitMatrix,
    pub u: BitMatrix,
}

impl BitMatrix {
    pub fn zero(m: usize) -> Result<Self> {
        check_dim(m)?;
        Ok(Self {
            m,
            rows: [0; MAX_DIM],
        })
    }

    /// Build from packed row words; bit `j` of `rows[i]` is entry (i, j).
    pub fn from_rows(m: usize, rows: &[u64]) -> Result<Self> {
        check_dim(m)?;
        if rows.len() != m {
            return Err(Error::DimensionMismatch {
                left: m,
                right: rows.len(),
            });
        }
        let mask = low_mask(m);
        if let Some(bad) = rows.iter().position(|&r| r & !mask != 0) {
            return Err(Error::InvalidArgument(format!(
                "row {bad} has bits beyond column {m}"
            )));
        }
        let mut out = Self::zero(m)?;
        out.rows[..m].copy_from_slice(rows);
        Ok(out)
    }

    pub fn from_row_vectors(rows: &[BitVector]) -> Result<Self> {
        let m = rows.len();
        if let Some(r) = rows.iter().find(|r| r.dim() != m) {
            return Err(Error::DimensionMismatch {
                left: m,
                right: r.dim(),
            });
        }
        let words: Vec<u64> = rows.iter().map(BitVector::bits).collect();
        Self::from_rows(m, &words)
    }

    /// Trusted constructor for hot paths; `rows` must already be masked.
    pub(crate) fn from_rows_unchecked(m: usize, rows: &[u64]) -> Self {
        debug_assert!((1..=MAX_DIM).contains(&m) && rows.len() == m);
        let mut out = Self {
            m,
            rows: [0; MAX_DIM],
        };
        out.rows[..m].copy_from_slice(rows);
        out
    }

    pub fn identity(m: usize) -> Result<Self> {
        check_dim(m)?;
        let rows: Vec<u64> = (0..m).map(|i| 1u64 << i).collect();
        Ok(Self::from_rows_unchecked(m, &rows))
    }

    /// The anti-diagonal matrix J: entry (i, j) is one iff i + j = m − 1.
    pub fn antidiag_j(m: usize) -> Result<Self> {
        check_dim(m)?;
        let rows: Vec<u64> = (0..m).map(|i| 1u64 << (m - 1 - i)).collect();
        Ok(Self::from_rows_unchecked(m, &rows))
    }

    /// Upper-triangular Pascal matrix mod 2: entry (i, j) = C(j, i) mod 2.
    ///
    /// Built column by column from Pascal's rule C(j, i) = C(j−1, i−1) + C(j−1, i),
    /// so column `j` is column `j−1` XOR (column `j−1` shifted down one row).
    pub fn pascal_p(m: usize) -> Result<Self> {
        check_dim(m)?;
        let mut rows = vec![0u64; m];
        // column as a word over row indices
        let mut col = 1u64;
        for j in 0..m {
            for (i, row) in rows.iter_mut().enumerate() {
                *row |= ((col >> i) & 1) << j;
            }
            col = (col ^ (col << 1)) & low_mask(m);
        }
        Ok(Self::from_rows_unchecked(m, &rows))
    }

    pub const fn dim(&self) -> usize {
        self.m
    }

    pub fn rows(&self) -> &[u64] {
        &self.rows[..self.m]
    }

    pub fn row(&self, i: usize) -> u64 {
        self.rows()[i]
    }

    pub fn row_vector(&self, i: usize) -> BitVector {
        BitVector::from_raw(self.m, self.row(i))
    }

    pub fn entry(&self, i: usize, j: usize) -> bool {
        assert!(j < self.m, "column {j} out of range");
        (self.row(i) >> j) & 1 == 1
    }

    /// Matrix-vector product on a packed column vector.
    #[inline]
    pub fn apply_word(&self, v: u64) -> u64 {
        self.rows()
            .iter()
            .enumerate()
            .fold(0u64, |acc, (i, &r)| acc | (u64::from((r & v).count_ones() & 1) << i))
    }

    pub fn apply(&self, v: &BitVector) -> Result<BitVector> {
        self.check_same_dim(v.dim())?;
        Ok(BitVector::from_raw(self.m, self.apply_word(v.bits())))
    }

    fn check_same_dim(&self, other: usize) -> Result<()> {
        if self.m == other {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                left: self.m,
                right: other,
            })
        }
    }

    /// Product over F2.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.check_same_dim(other.m)?;
        let mut out = Self {
            m: self.m,
            rows: [0; MAX_DIM],
        };
        for (dst, &a) in out.rows.iter_mut().zip(self.rows()) {
            let mut bits = a;
            let mut acc = 0;
            while bits != 0 {
                let k = bits.trailing_zeros() as usize;
                acc ^= other.rows[k];
                bits &= bits - 1;
            }
            *dst = acc;
        }
        Ok(out)
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self {
            m: self.m,
            rows: [0; MAX_DIM],
        };
        for (i, &r) in self.rows().iter().enumerate() {
            let mut bits = r;
            while bits != 0 {
                let j = bits.trailing_zeros() as usize;
                out.rows[j] |= 1 << i;
                bits &= bits - 1;
            }
        }
        out
    }

    /// `self * J`: reverses the column order.
    pub fn reverse_columns(&self) -> Self {
        let mut out = self.clone();
        for r in &mut out.rows[..self.m] {
            *r = reverse_low(*r, self.m);
        }
        out
    }

    /// `J * self`: reverses the row order.
    pub fn reverse_rows(&self) -> Self {
        let mut out = self.clone();
        out.rows[..self.m].reverse();
        out
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::identity(self.m).expect("dimension already validated");
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn is_identity(&self) -> bool {
        self.rows().iter().enumerate().all(|(i, &r)| r == 1 << i)
    }

    pub fn rank(&self) -> usize {
        super::vector::rank_words(self.rows().iter().copied())
    }

    pub fn is_invertible(&self) -> bool {
        self.rank() == self.m
    }

    /// Gauss-Jordan inversion; singular input is reported, not panicked on.
    pub fn inverse(&self) -> Result<Self> {
        let m = self.m;
        let mut a = self.rows;
        let mut inv = Self::identity(m)?.rows;
        for col in 0..m {
            let pivot = (col..m).find(|&r| (a[r] >> col) & 1 == 1).ok_or(Error::Singular)?;
            a.swap(col, pivot);
            inv.swap(col, pivot);
            for r in 0..m {
                if r != col && (a[r] >> col) & 1 == 1 {
                    a[r] ^= a[col];
                    inv[r] ^= inv[col];
                }
            }
        }
        Ok(Self { m, rows: inv })
    }

    /// Zero pattern only: entry (i, j) = 0 whenever j > i. The diagonal is unconstrained.
    pub fn is_lower_triangular(&self) -> bool {
        self.rows()
            .iter()
            .enumerate()
            .all(|(i, &r)| r & !low_mask(i + 1) == 0)
    }

    /// Zero pattern only: entry (i, j) = 0 whenever j < i.
    pub fn is_upper_triangular(&self) -> bool {
        self.rows().iter().enumerate().all(|(i, &r)| r & low_mask(i) == 0)
    }

    pub fn has_unit_diagonal(&self) -> bool {
        self.rows().iter().enumerate().all(|(i, &r)| (r >> i) & 1 == 1)
    }

    /// Lower triangular with unit diagonal: the invertible members of the lower-triangular set.
    pub fn is_unipotent_lower(&self) -> bool {
        self.is_lower_triangular() && self.has_unit_diagonal()
    }

    pub fn is_unipotent_upper(&self) -> bool {
        self.is_upper_triangular() && self.has_unit_diagonal()
    }

    /// True iff every top-left k×k block (k = 1..=m) is invertible.
    pub fn leading_minors_nonsingular(&self) -> bool {
        leading_minors_nonsingular_rows(self.rows())
    }

    /// Doolittle elimination without pivoting. Succeeds iff every leading
    /// principal minor is nonsingular, and the factors are then unique.
    pub fn lu_unit_diagonal(&self) -> Result<TriangularPair> {
        let m = self.m;
        let mut u = self.rows;
        let mut l = Self::identity(m)?.rows;
        for k in 0..m {
            if (u[k] >> k) & 1 == 0 {
                return Err(Error::NoFactorization { k: k + 1 });
            }
            for i in (k + 1)..m {
                if (u[i] >> k) & 1 == 1 {
                    u[i] ^= u[k];
                    l[i] |= 1 << k;
                }
            }
        }
        Ok(TriangularPair {
            l: Self { m, rows: l },
            u: Self { m, rows: u },
        })
    }

    /// Row-string value of row `i`: column 0 is the most significant bit.
    pub(crate) fn canonical_row(&self, i: usize) -> u64 {
        reverse_low(self.rows[i], self.m)
    }

    /// Rows joined by ',' on one line.
    pub fn to_compact(&self) -> String {
        self.row_strings().join(",")
    }

    pub fn row_strings(&self) -> Vec<String> {
        (0..self.m).map(|i| self.row_vector(i).to_string()).collect()
    }

    /// Parse the text format and require dimension `m`.
    pub fn parse_with_dim(s: &str, m: usize) -> Result<Self> {
        let a: Self = s.parse()?;
        if a.m != m {
            return Err(Error::Parse {
                line: 1,
                column: 1,
                message: format!("expected a {m}x{m} matrix, found {}x{}", a.m, a.m),
            });
        }
        Ok(a)
    }
}

pub(crate) fn leading_minors_nonsingular_rows(rows: &[u64]) -> bool {
    let m = rows.len();
    let mut u = [0u64; MAX_DIM];
    u[..m].copy_from_slice(rows);
    for k in 0..m {
        if (u[k] >> k) & 1 == 0 {
            return false;
        }
        let pivot = u[k];
        for r in &mut u[(k + 1)..m] {
            if (*r >> k) & 1 == 1 {
                *r ^= pivot;
            }
        }
    }
    true
}

impl std::ops::Mul for &BitMatrix {
    type Output = BitMatrix;

    /// Panics on mismatched dimensions; use [`BitMatrix::multiply`] for a checked product.
    fn mul(self, rhs: &BitMatrix) -> BitMatrix {
        self.multiply(rhs).expect("dimension mismatch in matrix product")
    }
}

/// Canonical order: by dimension, then by the integer formed by
/// concatenating the row strings (row 0 most significant).
impl Ord for BitMatrix {
    fn cmp(&self, other: &Self) -> Ordering {
        self.m.cmp(&other.m).then_with(|| {
            (0..self.m)
                .map(|i| self.canonical_row(i).cmp(&other.canonical_row(i)))
                .find(|o| o.is_ne())
                .unwrap_or(Ordering::Equal)
        })
    }
}

impl PartialOrd for BitMatrix {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// One row string per line.
impl fmt::Display for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.row_strings().iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            f.write_str(row)?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitMatrix({})", self.to_compact())
    }
}

/// Accepts the multi-line form (one row per line, blank lines ignored) or
/// the compact form with rows separated by ','.
impl FromStr for BitMatrix {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        // (line, column of first char, text)
        let mut rows: Vec<(usize, usize, &str)> = Vec::new();
        for (ln, line) in s.lines().enumerate() {
            let mut col = 1;
            for piece in line.split(',') {
                let lead = piece.len() - piece.trim_start().len();
                let text = piece.trim();
                if !text.is_empty() {
                    rows.push((ln + 1, col + lead, text));
                }
                col += piece.chars().count() + 1;
            }
        }
        let m = rows.len();
        if m == 0 {
            return Err(Error::Parse {
                line: 1,
                column: 1,
                message: "empty matrix".into(),
            });
        }
        if m > MAX_DIM {
            return Err(Error::Parse {
                line: rows[MAX_DIM].0,
                column: rows[MAX_DIM].1,
                message: format!("more than {MAX_DIM} rows"),
            });
        }
        let mut words = Vec::with_capacity(m);
        for &(line, col, text) in &rows {
            let mut w = 0u64;
            let mut width = 0;
            for (k, c) in text.chars().enumerate() {
                let bit = match c {
                    '0' => 0,
                    '1' => 1,
                    other => {
                        return Err(Error::Parse {
                            line,
                            column: col + k,
                            message: format!("expected '0' or '1', found {other:?}"),
                        })
                    }
                };
                if k < MAX_DIM {
                    w |= bit << k;
                }
                width = k + 1;
            }
            if width != m {
                return Err(Error::Parse {
                    line,
                    column: col,
                    message: format!("row has {width} entries, expected {m} (matrix must be square)"),
                });
            }
            words.push(w);
        }
        Self::from_rows(m, &words)
    }
}

impl Serialize for BitMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_compact())
    }
}

impl<'de> Deserialize<'de> for BitMatrix {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Largest m for which the unipotent lower group (2^(m(m−1)/2) members) is enumerated.
pub const MAX_ENUM_DIM: usize = 8;

/// Every unit-diagonal lower-triangular m×m matrix, each exactly once.
///
/// The strictly-lower entries, read in row-major order, are the bits of a
/// counter running from 0 to 2^(m(m−1)/2) − 1 with the first entry (1, 0)
/// as the most significant bit. The stream is therefore ascending in the
/// canonical matrix order.
pub fn enumerate_unipotent_lower(m: usize) -> Result<UnipotentLower> {
    check_dim(m)?;
    if m > MAX_ENUM_DIM {
        return Err(Error::EnumerationTooLarge {
            m,
            max: MAX_ENUM_DIM,
        });
    }
    let free = m * (m - 1) / 2;
    Ok(UnipotentLower {
        m,
        free,
        next: 0,
        end: 1u64 << free,
    })
}

#[derive(Clone, Debug)]
pub struct UnipotentLower {
    m: usize,
    free: usize,
    next: u64,
    end: u64,
}

impl UnipotentLower {
    fn build(&self, counter: u64) -> BitMatrix {
        let mut rows = [0u64; MAX_DIM];
        let mut pos = 0;
        for (i, row) in rows.iter_mut().enumerate().take(self.m) {
            *row = 1 << i;
            for j in 0..i {
                let bit = (counter >> (self.free - 1 - pos)) & 1;
                *row |= bit << j;
                pos += 1;
            }
        }
        BitMatrix { m: self.m, rows }
    }
}

impl Iterator for UnipotentLower {
    type Item = BitMatrix;

    fn next(&mut self) -> Option<BitMatrix> {
        (self.next < self.end).then(|| {
            let out = self.build(self.next);
            self.next += 1;
            out
        })
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = (self.end - self.next) as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for UnipotentLower {}
