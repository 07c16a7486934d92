//! Exact maximum independent set size via branch and bound, for the
//! locality upper bound. Intended as a test oracle on small graphs; refuses
//! inputs above a configurable vertex cap.

use thiserror::Error;

use crate::graph::Graph;

/// Default vertex cap guarding against runaway exponential work.
pub const DEFAULT_MIS_CAP: usize = 32;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MisError {
    #[error("graph has {n} vertices, above the configured cap of {cap}")]
    TooLarge { n: usize, cap: usize },
}

/// Exact alpha(G) with the default cap.
pub fn max_independent_set_size(g: &Graph) -> Result<usize, MisError> {
    max_independent_set_size_capped(g, DEFAULT_MIS_CAP)
}

/// Exact alpha(G), refusing graphs with more than `cap` vertices
/// (`cap` itself is limited to 64 by the bitset representation).
pub fn max_independent_set_size_capped(g: &Graph, cap: usize) -> Result<usize, MisError> {
    let cap = cap.min(64);
    if g.n() > cap {
        return Err(MisError::TooLarge { n: g.n(), cap });
    }
    let n = g.n();
    if n == 0 {
        return Ok(0);
    }
    let mut nbr = vec![0u64; n];
    for &(u, v) in g.edges() {
        nbr[u] |= 1 << v;
        nbr[v] |= 1 << u;
    }
    let all: u64 = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut best = 0;
    branch(&nbr, all, 0, &mut best);
    Ok(best)
}

fn branch(nbr: &[u64], candidates: u64, current: usize, best: &mut usize) {
    let remaining = candidates.count_ones() as usize;
    if current + remaining <= *best {
        return;
    }
    if candidates == 0 {
        *best = (*best).max(current);
        return;
    }
    // Branch on a candidate of maximum degree within the candidate set;
    // isolated candidates are taken greedily.
    let mut pick = usize::MAX;
    let mut pick_deg = 0;
    let mut free = 0usize;
    let mut c = candidates;
    while c != 0 {
        let v = c.trailing_zeros() as usize;
        c &= c - 1;
        let deg = (nbr[v] & candidates).count_ones() as usize;
        if deg == 0 {
            free += 1;
        } else if pick == usize::MAX || deg > pick_deg {
            pick = v;
            pick_deg = deg;
        }
    }
    if pick == usize::MAX {
        *best = (*best).max(current + free);
        return;
    }
    // Include pick.
    branch(
        nbr,
        candidates & !nbr[pick] & !(1u64 << pick),
        current + 1,
        best,
    );
    // Exclude pick.
    branch(nbr, candidates & !(1u64 << pick), current, best);
}
