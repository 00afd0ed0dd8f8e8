use super::{NetSpec, PointSet, TValueResult};
use crate::error::{Error, Result};
use crate::gf2::{BitMatrix, XorBasis};

/// All tuples of `parts` nonnegative integers summing to `total`, each once,
/// in descending lexicographic order: (total, 0, …, 0) first, (0, …, 0, total) last.
pub fn compositions(total: usize, parts: usize) -> Compositions {
    assert!(parts >= 1, "a composition needs at least one part");
    let mut first = vec![0; parts];
    first[0] = total;
    Compositions { next: Some(first) }
}

#[derive(Clone, Debug)]
pub struct Compositions {
    next: Option<Vec<usize>>,
}

impl Iterator for Compositions {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let current = self.next.take()?;
        let parts = current.len();
        // rightmost nonzero entry that can still move one unit to the right
        if let Some(i) = (0..parts.saturating_sub(1)).rev().find(|&i| current[i] > 0) {
            let mut succ = current.clone();
            let tail: usize = succ[i + 1..].iter().sum();
            succ[i] -= 1;
            succ[i + 1] = tail + 1;
            succ[i + 2..].iter_mut().for_each(|d| *d = 0);
            self.next = Some(succ);
        }
        Some(current)
    }
}

/// Depth-first scan over compositions that shares the echelon basis of
/// common prefixes and stops at the first dependent row selection.
struct DependenceSearch<'a> {
    mats: &'a [BitMatrix],
    basis: XorBasis,
    inserted: Vec<usize>,
    parts: Vec<usize>,
}

impl<'a> DependenceSearch<'a> {
    fn new(mats: &'a [BitMatrix]) -> Self {
        Self {
            mats,
            basis: XorBasis::new(),
            inserted: Vec::with_capacity(64),
            parts: vec![0; mats.len()],
        }
    }

    fn undo_to(&mut self, mark: usize) {
        while self.inserted.len() > mark {
            let p = self.inserted.pop().expect("non-empty");
            self.basis.remove(p);
        }
    }

    /// Some composition of `total` with dependent rows, if any.
    fn find(mut self, total: usize) -> Option<Vec<usize>> {
        self.visit(0, total).then_some(self.parts)
    }

    fn visit(&mut self, i: usize, remaining: usize) -> bool {
        let last = i + 1 == self.mats.len();
        if !last && self.visit(i + 1, remaining) {
            return true;
        }
        let mark = self.inserted.len();
        for k in 1..=remaining {
            match self.basis.insert(self.mats[i].row(k - 1)) {
                None => {
                    // every completion of this prefix is dependent; park the rest here
                    self.parts[i] = remaining;
                    self.undo_to(mark);
                    return true;
                }
                Some(p) => self.inserted.push(p),
            }
            self.parts[i] = k;
            if !last && self.visit(i + 1, remaining - k) {
                self.undo_to(mark);
                return true;
            }
        }
        self.undo_to(mark);
        self.parts[i] = 0;
        false
    }
}

/// Least t such that for every composition (d_1, …, d_s) of m − t the first
/// d_i rows of each C_i are jointly independent.
pub fn t_value_rank(spec: &NetSpec) -> TValueResult {
    let m = spec.m();
    let s = spec.s();
    for total in 1..=m {
        if let Some(witness) = DependenceSearch::new(spec.matrices()).find(total) {
            return TValueResult {
                m,
                s,
                t: m - total + 1,
                witness: Some(witness),
            };
        }
    }
    TValueResult {
        m,
        s,
        t: 0,
        witness: None,
    }
}

/// Upper bound on cell assignments the geometric oracle will perform.
pub const GEOMETRIC_BUDGET: u128 = 1_000_000_000;

fn binomial(n: u128, k: u128) -> u128 {
    (0..k).fold(1u128, |acc, i| acc.saturating_mul(n - i) / (i + 1))
}

fn geometric_cost(m: usize, s: usize) -> u128 {
    let points = 1u128 << m;
    (0..=m)
        .map(|n| {
            let comps = binomial((n + s - 1) as u128, (s - 1) as u128);
            comps.saturating_mul(points * s as u128 + (1u128 << n))
        })
        .fold(0u128, u128::saturating_add)
}

/// Least t such that every elementary interval of volume 2^(t−m) holds
/// exactly 2^t points, counted with multiplicity.
///
/// Each point is bucketed by the leading d_i bits of its coordinates; no
/// linear algebra is involved, so this is independent of [`t_value_rank`].
pub fn t_value_geometric(points: &PointSet) -> Result<usize> {
    let (m, s) = (points.m(), points.s());
    let required = geometric_cost(m, s);
    if required > GEOMETRIC_BUDGET {
        return Err(Error::BudgetExceeded {
            required,
            budget: GEOMETRIC_BUDGET,
        });
    }
    let mut counts: Vec<u32> = Vec::new();
    for t in 0..=m {
        let n = m - t;
        let expected = 1u32 << t;
        let holds = compositions(n, s).all(|d| {
            counts.clear();
            counts.resize(1 << n, 0);
            for x in points.points() {
                let cell = x.iter().zip(&d).fold(0usize, |key, (&c, &di)| {
                    if di == 0 {
                        key
                    } else {
                        (key << di) | (c >> (m - di)) as usize
                    }
                });
                counts[cell] += 1;
            }
            counts.iter().all(|&c| c == expected)
        });
        if holds {
            return Ok(t);
        }
    }
    unreachable!("t = m always holds for 2^m points")
}

/// Whether (C_1, …, C_s) and (L_1 C_1 G, …, L_s C_s G) have the same t-value.
///
/// The `lefts` must be unit-diagonal lower triangular and `g` invertible.
pub fn t_invariance_check(spec: &NetSpec, lefts: &[BitMatrix], g: &BitMatrix) -> Result<bool> {
    if lefts.len() != spec.s() {
        return Err(Error::DimensionMismatch {
            left: spec.s(),
            right: lefts.len(),
        });
    }
    if let Some(bad) = lefts.iter().find(|l| !l.is_unipotent_lower()) {
        return Err(Error::InvalidArgument(format!(
            "left factor {} is not unit-diagonal lower triangular",
            bad.to_compact()
        )));
    }
    if !g.is_invertible() {
        return Err(Error::Singular);
    }
    let transformed = spec
        .matrices()
        .iter()
        .zip(lefts)
        .map(|(c, l)| l.multiply(c)?.multiply(g))
        .collect::<Result<Vec<_>>>()?;
    let after = t_value_rank(&NetSpec::new(transformed)?);
    Ok(t_value_rank(spec).t == after.t)
}
