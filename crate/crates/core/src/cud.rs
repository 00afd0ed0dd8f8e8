//! F2-linear recurrences x_{i+1} = B·x_i and their overlapping s-tuples.
//!
//! For a primitive B the orbit of any nonzero seed runs through every
//! nonzero vector, and the cyclic s-tuples (φ(x_i), …, φ(x_{i+s−1})) together
//! with the origin form, as a set, the digital net generated by
//! (I, B, …, B^(s−1)).

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::gf2::{BitMatrix, BitVector};
use crate::net::{generate_points, phi, NetSpec, MAX_POINT_DIM};

/// Longest period followed before giving up.
pub const MAX_PERIOD: u64 = 1 << 28;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecurrenceSpec {
    b: BitMatrix,
    seed: BitVector,
    length: usize,
}

impl RecurrenceSpec {
    /// `b` must be invertible and `seed` nonzero of the same dimension.
    pub fn new(b: BitMatrix, seed: BitVector, length: usize) -> Result<Self> {
        if seed.dim() != b.dim() {
            return Err(Error::DimensionMismatch {
                left: b.dim(),
                right: seed.dim(),
            });
        }
        if seed.is_zero() {
            return Err(Error::ZeroSeed);
        }
        if !b.is_invertible() {
            return Err(Error::Singular);
        }
        Ok(Self { b, seed, length })
    }

    pub fn matrix(&self) -> &BitMatrix {
        &self.b
    }

    pub fn seed(&self) -> &BitVector {
        &self.seed
    }

    pub fn length(&self) -> usize {
        self.length
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orbit {
    /// x_1 = seed, x_2 = B·x_1, … (`length` states).
    pub states: Vec<BitVector>,
    /// Least p ≥ 1 with x_{p+1} = x_1.
    pub period: u64,
}

fn period_states(spec: &RecurrenceSpec) -> Result<Vec<u64>> {
    let start = spec.seed.bits();
    let mut cycle = vec![start];
    let mut x = spec.b.apply_word(start);
    while x != start {
        if cycle.len() as u64 >= MAX_PERIOD {
            return Err(Error::CapExceeded { cap: MAX_PERIOD });
        }
        cycle.push(x);
        x = spec.b.apply_word(x);
    }
    Ok(cycle)
}

pub fn recurrence_orbit(spec: &RecurrenceSpec) -> Result<Orbit> {
    let cycle = period_states(spec)?;
    let m = spec.b.dim();
    let states = cycle
        .iter()
        .cycle()
        .take(spec.length)
        .map(|&x| BitVector::new(m, x))
        .collect::<Result<Vec<_>>>()?;
    Ok(Orbit {
        states,
        period: cycle.len() as u64,
    })
}

/// Multiset of p points in [0,1)^s, one per position of the periodic orbit.
/// Coordinates are scaled by 2^m, as in [`crate::net::PointSet`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TupleSet {
    m: usize,
    s: usize,
    coords: Vec<u64>,
}

impl TupleSet {
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

    pub fn points(&self) -> impl ExactSizeIterator<Item = &[u64]> {
        self.coords.chunks_exact(self.s)
    }
}

/// Tuple i is (φ(x_i), …, φ(x_{i+s−1})) with indices taken modulo the period.
pub fn overlapping_tuples(spec: &RecurrenceSpec, s: usize) -> Result<TupleSet> {
    if s == 0 {
        return Err(Error::InvalidArgument("tuple width must be at least 1".into()));
    }
    let m = spec.b.dim();
    let scaled: Vec<u64> = period_states(spec)?
        .into_iter()
        .map(|x| phi(&BitVector::new(m, x).expect("orbit stays in F2^m")))
        .collect();
    let p = scaled.len();
    let coords = (0..p)
        .flat_map(|i| (0..s).map(move |k| (i + k) % p))
        .map(|idx| scaled[idx])
        .collect();
    Ok(TupleSet { m, s, coords })
}

/// Whether the s-tuples plus the origin equal, as a set, the net generated by (I, B, …, B^(s−1)).
pub fn tuple_set_equals_net(spec: &RecurrenceSpec, s: usize) -> Result<bool> {
    let b = &spec.b;
    let m = b.dim();
    if m > MAX_POINT_DIM {
        return Err(Error::DimensionOutOfRange {
            m,
            max: MAX_POINT_DIM,
        });
    }
    if !b.is_primitive() {
        return Err(Error::NotPrimitive);
    }
    let tuples = overlapping_tuples(spec, s)?;
    let mut lhs: BTreeSet<&[u64]> = tuples.points().collect();
    let origin = vec![0u64; s];
    lhs.insert(&origin);

    let mut powers = vec![BitMatrix::identity(m)?];
    for k in 1..s {
        powers.push(&powers[k - 1] * b);
    }
    let net = generate_points(&NetSpec::new(powers)?)?;
    let rhs: BTreeSet<&[u64]> = net.points().collect();
    Ok(lhs == rhs)
}

/// The Faure first-block nets: (I, P) in dimension 2 and (I, P, J) in dimension 3.
pub fn faure_nets(m: usize) -> Result<(NetSpec, NetSpec)> {
    let i = BitMatrix::identity(m)?;
    let p = BitMatrix::pascal_p(m)?;
    let j = BitMatrix::antidiag_j(m)?;
    Ok((
        NetSpec::new(vec![i.clone(), p.clone()])?,
        NetSpec::new(vec![i, p, j])?,
    ))
}
