//! Digital nets over F2: point generation and exact t-values.
//!
//! Point `l` of the net generated by `(C_1, …, C_s)` takes the base-2 digits
//! of `l` (least significant digit first) as a column vector, multiplies it by
//! each `C_j`, and reads the product as a binary fraction whose first entry is
//! the most significant digit. Coordinates are stored as integers scaled by
//! 2^m, so all arithmetic stays exact.

mod export;
mod tvalue;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf2::{reverse_low, BitMatrix, BitVector};

pub use export::{write_csv, write_dyadic_text};
pub use tvalue::{
    compositions, t_invariance_check, t_value_geometric, t_value_rank, Compositions,
    GEOMETRIC_BUDGET,
};

/// Ordered tuple of s ≥ 1 generating matrices sharing dimension m. Singular matrices are allowed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NetSpec {
    m: usize,
    mats: Vec<BitMatrix>,
}

impl NetSpec {
    pub fn new(mats: Vec<BitMatrix>) -> Result<Self> {
        let m = mats
            .first()
            .ok_or_else(|| Error::InvalidArgument("a net needs at least one generating matrix".into()))?
            .dim();
        if let Some(bad) = mats.iter().find(|c| c.dim() != m) {
            return Err(Error::DimensionMismatch {
                left: m,
                right: bad.dim(),
            });
        }
        Ok(Self { m, mats })
    }

    pub const fn m(&self) -> usize {
        self.m
    }

    pub fn s(&self) -> usize {
        self.mats.len()
    }

    pub fn matrices(&self) -> &[BitMatrix] {
        &self.mats
    }
}

/// Maps (y_1, …, y_m) to 2^m · (y_1/2 + … + y_m/2^m); y_1 becomes the most significant bit.
pub fn phi(v: &BitVector) -> u64 {
    reverse_low(v.bits(), v.dim())
}

/// Largest m for which a full point set is materialized.
pub const MAX_POINT_DIM: usize = 24;

/// 2^m points in [0,1)^s, flat row-major. Each coordinate is the integer 2^m·x.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointSet {
    m: usize,
    s: usize,
    coords: Vec<u64>,
}

impl PointSet {
    /// Wrap raw scaled coordinates: exactly 2^m points of width `s`, every
    /// value below 2^m.
    pub fn from_coords(m: usize, s: usize, coords: Vec<u64>) -> Result<Self> {
        if !(1..=MAX_POINT_DIM).contains(&m) {
            return Err(Error::DimensionOutOfRange {
                m,
                max: MAX_POINT_DIM,
            });
        }
        if s == 0 || coords.len() != s << m {
            return Err(Error::InvalidArgument(format!(
                "expected 2^{m} points of width {s}, got {} coordinates",
                coords.len()
            )));
        }
        if coords.iter().any(|&c| c >> m != 0) {
            return Err(Error::InvalidArgument(format!("coordinate out of range for m = {m}")));
        }
        Ok(Self { m, s, coords })
    }

    pub const fn m(&self) -> usize {
        self.m
    }

    pub const fn s(&self) -> usize {
        self.s
    }

    pub fn len(&self) -> usize {
        self.coords.len() / self.s
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn point(&self, l: usize) -> &[u64] {
        &self.coords[l * self.s..(l + 1) * self.s]
    }

    pub fn points(&self) -> impl ExactSizeIterator<Item = &[u64]> {
        self.coords.chunks_exact(self.s)
    }
}

/// Point `l` has coordinate `j` equal to φ(C_j · digits(l)).
///
/// Fails only when m exceeds [`MAX_POINT_DIM`] (the set would not fit in memory).
pub fn generate_points(spec: &NetSpec) -> Result<PointSet> {
    let m = spec.m;
    if m > MAX_POINT_DIM {
        return Err(Error::DimensionOutOfRange {
            m,
            max: MAX_POINT_DIM,
        });
    }
    let n = 1u64 << m;
    let mut coords = Vec::with_capacity(spec.s() << m);
    for l in 0..n {
        // bit k of l is digit ι_k, already in packed column-vector layout
        coords.extend(spec.mats.iter().map(|c| reverse_low(c.apply_word(l), m)));
    }
    Ok(PointSet {
        m,
        s: spec.s(),
        coords,
    })
}

/// Exact t-value with a minimality certificate.
///
/// For every composition of m − t the selected generator rows are
/// independent; when t ≥ 1, `witness` is a composition of m − t + 1 whose
/// rows are dependent.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TValueResult {
    pub m: usize,
    pub s: usize,
    pub t: usize,
    pub witness: Option<Vec<usize>>,
}

impl TValueResult {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain struct serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mats(m: usize, names: &str) -> NetSpec {
        let v = names
            .chars()
            .map(|c| match c {
                'I' => BitMatrix::identity(m).unwrap(),
                'P' => BitMatrix::pascal_p(m).unwrap(),
                'J' => BitMatrix::antidiag_j(m).unwrap(),
                _ => unreachable!(),
            })
            .collect();
        NetSpec::new(v).unwrap()
    }

    #[test]
    fn phi_examples() {
        assert_eq!(phi(&"10".parse().unwrap()), 2);
        assert_eq!(phi(&"01".parse().unwrap()), 1);
        assert_eq!(phi(&"111".parse().unwrap()), 7);
    }

    #[test]
    fn points_examples() {
        let p = generate_points(&mats(1, "I")).unwrap();
        assert_eq!(p.points().map(|x| x[0]).collect::<Vec<_>>(), [0, 1]);
        // 0, 0.5, 0.25, 0.75 at scale 4
        let p = generate_points(&mats(2, "I")).unwrap();
        assert_eq!(p.points().map(|x| x[0]).collect::<Vec<_>>(), [0, 2, 1, 3]);
        let p = generate_points(&mats(2, "IP")).unwrap();
        let got: Vec<Vec<u64>> = p.points().map(<[u64]>::to_vec).collect();
        assert_eq!(got, vec![vec![0, 0], vec![2, 2], vec![1, 3], vec![3, 1]]);
    }

    #[test]
    fn invertible_projections_are_permutations() {
        let p = generate_points(&mats(6, "IPJ")).unwrap();
        assert_eq!(p.len(), 64);
        for j in 0..3 {
            let mut col: Vec<u64> = p.points().map(|x| x[j]).collect();
            col.sort_unstable();
            assert_eq!(col, (0..64).collect::<Vec<_>>());
        }
    }

    #[test]
    fn third_coordinate_of_ipj_is_index() {
        for m in 1..=12 {
            let p = generate_points(&mats(m, "IPJ")).unwrap();
            for (l, x) in p.points().enumerate() {
                assert_eq!(x[2], l as u64);
            }
        }
    }

    #[test]
    fn spec_validation() {
        assert!(NetSpec::new(vec![]).is_err());
        let bad = vec![BitMatrix::identity(2).unwrap(), BitMatrix::identity(3).unwrap()];
        assert!(matches!(NetSpec::new(bad), Err(Error::DimensionMismatch { .. })));
        assert!(generate_points(&mats(25, "I")).is_err());
    }

    #[test]
    fn tvalue_json_shape() {
        let r = TValueResult {
            m: 2,
            s: 2,
            t: 1,
            witness: Some(vec![1, 1]),
        };
        assert_eq!(r.to_json(), r#"{"m":2,"s":2,"t":1,"witness":[1,1]}"#);
        let r0 = TValueResult { witness: None, t: 0, ..r };
        assert_eq!(r0.to_json(), r#"{"m":2,"s":2,"t":0,"witness":null}"#);
    }
}
