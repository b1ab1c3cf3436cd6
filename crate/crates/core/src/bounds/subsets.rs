//! Exhaustive minimum of the induced maximum degree over all k-subsets.
//!
//! Subsets are `u64` bitmasks. The search space is split by the largest
//! vertex of the subset; each part walks the remaining `(k-1)`-subsets of the
//! lower vertices with Gosper's hack. Parts run in parallel and are merged on
//! `(degree, lexicographically smallest witness)`, so the answer does not
//! depend on the worker count.

use std::sync::atomic::{AtomicUsize, Ordering};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::SignedGraph;

pub const DEFAULT_MAX_VERTICES: usize = 28;
/// Hard limit of the bitmask representation.
pub const MASK_BITS: usize = 64;

#[derive(Debug, Clone, Copy)]
pub struct SearchOptions {
    /// Worker threads; `None` uses the global rayon pool.
    pub jobs: Option<usize>,
    pub max_vertices: usize,
    /// Ignore `max_vertices` (the 64-vertex mask limit still applies).
    pub force: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        Self {
            jobs: None,
            max_vertices: DEFAULT_MAX_VERTICES,
            force: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubsetMinimum {
    pub degree: usize,
    /// Sorted vertex list of the lexicographically smallest minimiser.
    pub witness: Vec<usize>,
}

/// `a` precedes `b` as sorted vertex lists of equal length.
fn lex_less(a: u64, b: u64) -> bool {
    let diff = a ^ b;
    diff != 0 && a & (diff & diff.wrapping_neg()) != 0
}

fn better(a: (usize, u64), b: (usize, u64)) -> bool {
    a.0 < b.0 || (a.0 == b.0 && lex_less(a.1, b.1))
}

fn induced_max_degree(adj: &[u64], mask: u64, cutoff: usize) -> usize {
    let mut best = 0;
    let mut rest = mask;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        best = best.max((adj[v] & mask).count_ones() as usize);
        if best > cutoff {
            break;
        }
    }
    best
}

fn next_combination(x: u64) -> u64 {
    let c = x & x.wrapping_neg();
    let r = x + c;
    (((r ^ x) >> 2) / c) | r
}

/// Best `(degree, mask)` over subsets whose largest vertex is `top`.
fn search_part(adj: &[u64], k: usize, top: usize, global: &AtomicUsize) -> Option<(usize, u64)> {
    let high = 1u64 << top;
    let mut best: Option<(usize, u64)> = None;
    let mut visit = |mask: u64| {
        let cutoff = best.map_or(usize::MAX, |b| b.0).min(global.load(Ordering::Relaxed));
        let d = induced_max_degree(adj, mask, cutoff);
        if d > cutoff {
            return;
        }
        if best.is_none_or(|b| better((d, mask), b)) {
            best = Some((d, mask));
            global.fetch_min(d, Ordering::Relaxed);
        }
    };
    let r = k - 1;
    if r == 0 {
        visit(high);
        return best;
    }
    let limit = 1u64 << top;
    let mut low = (1u64 << r) - 1;
    while low < limit {
        visit(high | low);
        low = next_combination(low);
    }
    best
}

pub fn min_max_degree_over_induced(g: &SignedGraph, k: usize, opts: &SearchOptions) -> Result<SubsetMinimum> {
    let n = g.order();
    if k > n {
        return Err(Error::InvalidArgument(format!("subset size {k} exceeds order {n}")));
    }
    if n > MASK_BITS {
        return Err(Error::TooLarge {
            what: "vertices",
            size: n,
            cap: MASK_BITS,
        });
    }
    if n > opts.max_vertices && !opts.force {
        return Err(Error::TooLarge {
            what: "vertices",
            size: n,
            cap: opts.max_vertices,
        });
    }
    if k == 0 {
        return Ok(SubsetMinimum {
            degree: 0,
            witness: Vec::new(),
        });
    }
    let adj: Vec<u64> = (0..n).map(|v| g.neighbors(v).fold(0u64, |m, w| m | (1 << w))).collect();
    let global = AtomicUsize::new(usize::MAX);
    let run = || {
        (k - 1..n)
            .into_par_iter()
            .filter_map(|top| search_part(&adj, k, top, &global))
            .reduce_with(|a, b| if better(b, a) { b } else { a })
    };
    let best = match opts.jobs {
        Some(j) => rayon::ThreadPoolBuilder::new()
            .num_threads(j.max(1))
            .build()
            .map_err(|e| Error::InvalidArgument(format!("thread pool: {e}")))?
            .install(run),
        None => run(),
    };
    let (degree, mask) = best.expect("at least one subset of size k <= n");
    Ok(SubsetMinimum {
        degree,
        witness: (0..n).filter(|&v| mask >> v & 1 == 1).collect(),
    })
}
