use std::collections::BTreeSet;

use super::pj;
use crate::error::{Error, Result};
use crate::gf2::{enumerate_unipotent_lower, BitMatrix};
use crate::net::{t_value_rank, NetSpec};

/// B = l1 · J · l2 with both factors unit-diagonal lower triangular.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Characterization2D {
    pub l1: BitMatrix,
    pub l2: BitMatrix,
}

/// B = l · P · J · l⁻¹ with `l` unit-diagonal lower triangular.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyWitness {
    pub l: BitMatrix,
}

impl ConjugacyWitness {
    pub fn recompose(&self) -> Result<BitMatrix> {
        let m = self.l.dim();
        Ok(&(&self.l * &pj(m)?) * &self.l.inverse()?)
    }
}

/// Factor B = L1·J·L2 when t(I, B) = 0.
///
/// B·J factors as l·u, so B = l·u·J = l·J·(J·u·J) and J·u·J is lower unit triangular.
pub fn characterize_2d(b: &BitMatrix) -> Result<Characterization2D> {
    let m = b.dim();
    let r = t_value_rank(&NetSpec::new(vec![BitMatrix::identity(m)?, b.clone()])?);
    if r.t != 0 {
        return Err(Error::NotT0(r));
    }
    let lu = b.reverse_columns().lu_unit_diagonal().map_err(|e| {
        Error::TheoremViolation(format!(
            "t(I, B) = 0 but B*J has no unit LU ({e}); B = {}",
            b.to_compact()
        ))
    })?;
    let l2 = lu.u.reverse_rows().reverse_columns();
    debug_assert!(l2.is_unipotent_lower());
    Ok(Characterization2D { l1: lu.l, l2 })
}

/// A unit-diagonal lower triangular L with L·c = c′, if one exists.
///
/// Row i of c′ must equal row i of c plus a combination of rows 0..i of c.
/// When rows of `c` are dependent the combination is not unique; rows that
/// are dependent on earlier ones always get coefficient zero, which makes the
/// choice deterministic. The error names the first (0-based) row that fails.
pub fn lower_transform(c: &BitMatrix, c_prime: &BitMatrix) -> Result<BitMatrix> {
    let m = c.dim();
    if c_prime.dim() != m {
        return Err(Error::DimensionMismatch {
            left: m,
            right: c_prime.dim(),
        });
    }
    // (vector, combination of original rows of c) keyed by pivot
    let mut basis = [(0u64, 0u64); 64];
    let reduce = |basis: &[(u64, u64); 64], mut v: u64| {
        let mut combo = 0u64;
        while v != 0 {
            let p = 63 - v.leading_zeros() as usize;
            let (bv, bc) = basis[p];
            if bv == 0 {
                break;
            }
            v ^= bv;
            combo ^= bc;
        }
        (v, combo)
    };
    let mut rows = vec![0u64; m];
    for (i, row) in rows.iter_mut().enumerate() {
        let (rest, combo) = reduce(&basis, c_prime.row(i) ^ c.row(i));
        if rest != 0 {
            return Err(Error::NoSolution { row: i });
        }
        *row = combo | (1 << i);
        let (v, vc) = reduce(&basis, c.row(i));
        if v != 0 {
            basis[63 - v.leading_zeros() as usize] = (v, vc ^ (1 << i));
        }
    }
    BitMatrix::from_rows(m, &rows)
}

/// For B with t(I, B, B²) = 0, find L with B = L·P·J·L⁻¹.
///
/// Takes B = L1·J·L2 from [`characterize_2d`]; then J·L2·L1·J must equal P
/// and L = L1. Any failure after the t-value test passes is reported as
/// [`Error::TheoremViolation`].
pub fn decompose_t0_triple(b: &BitMatrix) -> Result<ConjugacyWitness> {
    let m = b.dim();
    let b2 = b * b;
    let r = t_value_rank(&NetSpec::new(vec![BitMatrix::identity(m)?, b.clone(), b2])?);
    if r.t != 0 {
        return Err(Error::NotT0(r));
    }
    let violation = |what: &str| Error::TheoremViolation(format!("{what}; B = {}", b.to_compact()));
    let f = characterize_2d(b).map_err(|e| violation(&format!("t(I,B,B^2) = 0 but {e}")))?;
    let middle = (&f.l2 * &f.l1).reverse_rows().reverse_columns();
    if middle != BitMatrix::pascal_p(m)? {
        return Err(violation(&format!(
            "J*L2*L1*J = {} differs from P (L1 = {}, L2 = {})",
            middle.to_compact(),
            f.l1.to_compact(),
            f.l2.to_compact()
        )));
    }
    let witness = ConjugacyWitness { l: f.l1 };
    if witness.recompose()? != *b {
        return Err(violation(&format!(
            "L*P*J*L^-1 does not reproduce B (L = {})",
            witness.l.to_compact()
        )));
    }
    Ok(witness)
}

/// All L·P·J·L⁻¹ over unit-diagonal lower L, deduplicated, in canonical order.
pub fn conjugacy_orbit(m: usize) -> Result<Vec<BitMatrix>> {
    let base = pj(m)?;
    let orbit: BTreeSet<BitMatrix> = enumerate_unipotent_lower(m)?
        .map(|l| {
            let inv = l.inverse().expect("unipotent matrices are invertible");
            &(&l * &base) * &inv
        })
        .collect();
    Ok(orbit.into_iter().collect())
}

/// P² = I, J² = I and (P·J)³ = I, each checked by multiplication.
pub fn pj_identities_check(m: usize) -> Result<bool> {
    let p = BitMatrix::pascal_p(m)?;
    let j = BitMatrix::antidiag_j(m)?;
    let pj = &p * &j;
    Ok((&p * &p).is_identity() && (&j * &j).is_identity() && (&(&pj * &pj) * &pj).is_identity())
}
