use std::collections::BTreeSet;
use std::sync::atomic::{AtomicU64, Ordering};
use std::time::Instant;

use serde::{Deserialize, Serialize};

use super::conjugacy_orbit;
use crate::error::{Error, Result};
use crate::gf2::{leading_minors_nonsingular_rows, low_mask, reverse_low, BitMatrix};
use crate::net::{t_value_rank, NetSpec};

/// Largest m scanned exhaustively (2^(m²) candidates).
pub const MAX_SEARCH_DIM: usize = 5;

/// Candidates per work unit handed to a worker.
const CHUNK: u64 = 1 << 16;

/// Outcome of scanning every m×m matrix B for t(I, B, B²) = 0.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchReport {
    pub m: usize,
    /// All B with t(I, B, B²) = 0, in canonical order.
    pub found: Vec<BitMatrix>,
    /// All L·P·J·L⁻¹, in canonical order.
    pub orbit: Vec<BitMatrix>,
    pub equal_sets: bool,
    pub all_cubes_identity: bool,
    pub primitive_members: Vec<BitMatrix>,
    pub candidates_scanned: u64,
    /// Candidates passing the t(I, B) = 0 pre-filter.
    pub filter_pass: u64,
    pub elapsed_ms: u64,
}

impl SearchReport {
    pub fn verified(&self) -> bool {
        self.equal_sets && self.all_cubes_identity
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain struct serializes")
    }
}

/// Candidate `k` is the matrix whose row strings, concatenated with row 0
/// first, read as the binary number `k`. Ascending `k` is canonical order.
fn candidate_rows(m: usize, k: u64) -> [u64; MAX_SEARCH_DIM] {
    let mut canonical = [0u64; MAX_SEARCH_DIM];
    for (i, r) in canonical.iter_mut().enumerate().take(m) {
        *r = (k >> ((m - 1 - i) * m)) & low_mask(m);
    }
    canonical
}

#[derive(Default)]
struct Partial {
    found: Vec<BitMatrix>,
    scanned: u64,
    filter_pass: u64,
}

fn scan_range(m: usize, range: std::ops::Range<u64>, ident: &BitMatrix, out: &mut Partial) {
    for k in range {
        out.scanned += 1;
        let canonical = candidate_rows(m, k);
        // the packed rows of B·J are exactly the row-string values of B
        let passes = leading_minors_nonsingular_rows(&canonical[..m]);
        let mut rows = [0u64; MAX_SEARCH_DIM];
        for (dst, &r) in rows.iter_mut().zip(&canonical[..m]) {
            *dst = reverse_low(r, m);
        }
        let b = BitMatrix::from_rows_unchecked(m, &rows[..m]);
        if cfg!(debug_assertions) {
            let direct = t_value_rank(&NetSpec::new(vec![ident.clone(), b.clone()]).expect("same m"));
            assert_eq!(
                passes,
                direct.t == 0,
                "pre-filter disagrees with t(I, B) for B = {}",
                b.to_compact()
            );
        }
        if !passes {
            continue;
        }
        out.filter_pass += 1;
        let b2 = &b * &b;
        let spec = NetSpec::new(vec![ident.clone(), b.clone(), b2]).expect("same m");
        if t_value_rank(&spec).t == 0 {
            out.found.push(b);
        }
    }
}

/// Scan all 2^(m²) matrices B for t(I, B, B²) = 0 and compare with the
/// conjugacy orbit of P·J.
///
/// Candidates are split into contiguous ranges handed out to `workers`
/// threads; the merged result is the same for every worker count.
pub fn exhaustive_search_t0(m: usize, workers: usize) -> Result<SearchReport> {
    crate::gf2::check_dim(m)?;
    if m > MAX_SEARCH_DIM {
        return Err(Error::EnumerationTooLarge {
            m,
            max: MAX_SEARCH_DIM,
        });
    }
    if workers == 0 {
        return Err(Error::InvalidArgument("worker count must be at least 1".into()));
    }
    let start = Instant::now();
    let total = 1u64 << (m * m);
    let ident = BitMatrix::identity(m)?;
    let next = AtomicU64::new(0);

    let partials: Vec<Partial> = std::thread::scope(|scope| {
        let handles: Vec<_> = (0..workers)
            .map(|_| {
                scope.spawn(|| {
                    let mut part = Partial::default();
                    loop {
                        let lo = next.fetch_add(CHUNK, Ordering::Relaxed);
                        if lo >= total {
                            break;
                        }
                        scan_range(m, lo..(lo + CHUNK).min(total), &ident, &mut part);
                    }
                    part
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("search worker panicked"))
            .collect()
    });

    let mut found = BTreeSet::new();
    let (mut scanned, mut filter_pass) = (0, 0);
    for p in partials {
        scanned += p.scanned;
        filter_pass += p.filter_pass;
        found.extend(p.found);
    }
    let found: Vec<BitMatrix> = found.into_iter().collect();
    let orbit = conjugacy_orbit(m)?;
    let equal_sets = found == orbit;
    let all_cubes_identity = found.iter().all(|b| b.pow(3).is_identity());
    let primitive_members = found.iter().filter(|b| b.is_primitive()).cloned().collect();

    Ok(SearchReport {
        m,
        found,
        orbit,
        equal_sets,
        all_cubes_identity,
        primitive_members,
        candidates_scanned: scanned,
        filter_pass,
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}
