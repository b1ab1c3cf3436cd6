//! Exhaustive minimisation of the spectral radius over all edge signings.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::SignedGraph;
use crate::linalg::{eigenvalues_sym, DenseMatrix};

pub const DEFAULT_MAX_EDGES: usize = 24;
/// Radii within this distance of the minimum count as ties.
pub const TIE_TOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq)]
pub struct SignatureSearchResult {
    pub edges: Vec<(usize, usize)>,
    pub best_rho: f64,
    /// Sign of `edges[i]` in the minimiser.
    pub best_signature: Vec<i8>,
    /// `'+'`/`'-'` per edge; ties go to the lexicographically smallest string.
    pub encoding: String,
    /// Spectral radius of the all-positive signing.
    pub all_positive_rho: f64,
    pub max_degree: usize,
    /// `2 sqrt(Δ - 1)`, absent when `Δ <= 1`.
    pub bound: Option<f64>,
    pub satisfied: Option<bool>,
    pub evaluated: u64,
}

/// Code `c` read MSB-first gives the signs of edges `0..m`; increasing codes
/// are increasing encodings.
fn signs_of(code: u64, m: usize) -> Vec<i8> {
    (0..m)
        .map(|i| if code >> (m - 1 - i) & 1 == 1 { -1 } else { 1 })
        .collect()
}

fn rho_of(edges: &[(usize, usize)], n: usize, code: u64) -> Result<f64> {
    let m = edges.len();
    let mut a = DenseMatrix::<f64>::zeros(n, n);
    for (i, &(u, v)) in edges.iter().enumerate() {
        let s = if code >> (m - 1 - i) & 1 == 1 { -1.0 } else { 1.0 };
        a[(u, v)] = s;
        a[(v, u)] = s;
    }
    let values = eigenvalues_sym(&a)?;
    Ok(values
        .first()
        .map_or(0.0, |hi| hi.abs().max(values.last().map_or(0.0, |lo| lo.abs()))))
}

/// Searches the signings of the underlying graph of `g`.
pub fn signature_search(g: &SignedGraph, max_edges: usize, force: bool) -> Result<SignatureSearchResult> {
    let n = g.order();
    let edges: Vec<(usize, usize)> = g.edges().into_iter().map(|(u, v, _)| (u, v)).collect();
    let m = edges.len();
    if m >= 64 {
        return Err(Error::TooLarge {
            what: "edges",
            size: m,
            cap: 63,
        });
    }
    if m > max_edges && !force {
        return Err(Error::TooLarge {
            what: "edges",
            size: m,
            cap: max_edges,
        });
    }
    let total = 1u64 << m;
    let min_rho = (0..total)
        .into_par_iter()
        .map(|c| rho_of(&edges, n, c))
        .try_reduce(|| f64::INFINITY, |a, b| Ok(a.min(b)))?;
    let best_code = (0..total)
        .into_par_iter()
        .find_first(|&c| rho_of(&edges, n, c).is_ok_and(|r| r <= min_rho + TIE_TOL))
        .ok_or_else(|| Error::InvariantViolation("minimum radius not attained on second pass".into()))?;
    let best_signature = signs_of(best_code, m);
    let encoding = best_signature.iter().map(|&s| if s > 0 { '+' } else { '-' }).collect();
    let max_degree = g.max_degree();
    let bound = (max_degree > 1).then(|| 2.0 * ((max_degree - 1) as f64).sqrt());
    Ok(SignatureSearchResult {
        best_rho: rho_of(&edges, n, best_code)?,
        all_positive_rho: rho_of(&edges, n, 0)?,
        edges,
        best_signature,
        encoding,
        max_degree,
        satisfied: bound.map(|b| min_rho <= b + TIE_TOL),
        bound,
        evaluated: total,
    })
}
