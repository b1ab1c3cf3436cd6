#![allow(dead_code)]

use signed_spectra::constructions::{c4, k2, k22neg, k3, p3, petersen, star_k12, toroidal_t2n};
use signed_spectra::linalg::{eigen_sym_default, rank_exact};
use signed_spectra::{Bipartition, IntMatrix, SignedGraph, Spectrum64};

pub const TOL: f64 = 1e-8;

/// Bipartite fixtures usable as the first factor of a signed product.
pub fn bipartite_fixtures() -> Vec<(&'static str, Bipartition)> {
    vec![
        ("k2+", k2(1)),
        ("k2-", k2(-1)),
        ("p3", p3()),
        ("p3-swapped", p3().swapped()),
        ("k12", star_k12()),
        ("k22neg", k22neg()),
        ("c4", c4()),
    ]
}

/// Second-factor fixtures (bipartite ones included).
pub fn graph_fixtures() -> Vec<(&'static str, SignedGraph)> {
    let mut out: Vec<(&'static str, SignedGraph)> = bipartite_fixtures()
        .into_iter()
        .map(|(n, b)| (n, b.into_graph()))
        .collect();
    out.push(("k3+", k3(1)));
    out.push(("k3-", k3(-1)));
    out.push(("t6", toroidal_t2n(3).unwrap()));
    out.push(("pg+", petersen(1)));
    out.push(("pg-", petersen(-1)));
    out
}

pub fn spectrum(g: &SignedGraph) -> Spectrum64 {
    eigen_sym_default(&g.adjacency::<f64>()).unwrap()
}

pub fn close(a: f64, b: f64) -> bool {
    (a - b).abs() <= TOL
}

/// Asserts the spectrum is exactly `expected` (descending pairs).
pub fn assert_spectrum(s: &Spectrum64, expected: &[(f64, usize)]) {
    let got = s.pairs();
    assert_eq!(got.len(), expected.len(), "spectrum {got:?} vs {expected:?}");
    for (g, e) in got.iter().zip(expected) {
        assert!(close(g.0, e.0) && g.1 == e.1, "spectrum {got:?} vs {expected:?}");
    }
}

/// `dim ker(A - cI)` in exact integer arithmetic.
pub fn exact_eigen_mult(a: &IntMatrix, c: i64) -> usize {
    let n = a.rows();
    a.rows() - rank_exact(&a.sub(&IntMatrix::identity(n).scale(c)).unwrap())
}

/// `dim ker(A^2 - rI)`: the combined multiplicity of `±sqrt(r)`.
pub fn exact_square_mult(a: &IntMatrix, r: i64) -> usize {
    let sq = a.matmul(a).unwrap();
    exact_eigen_mult(&sq, r)
}

pub fn is_symmetric_zero_diag(m: &IntMatrix) -> bool {
    m.is_symmetric() && (0..m.rows()).all(|i| m[(i, i)] == 0) && m.as_slice().iter().all(|x| (-1..=1).contains(x))
}

/// Every `k`-subset's induced maximum degree, minimised by plain recursion.
pub fn naive_min_max_degree(g: &SignedGraph, k: usize) -> usize {
    fn rec(g: &SignedGraph, k: usize, start: usize, chosen: &mut Vec<usize>, best: &mut usize) {
        if chosen.len() == k {
            let d = chosen
                .iter()
                .map(|&u| chosen.iter().filter(|&&v| g.is_adjacent(u, v)).count())
                .max()
                .unwrap_or(0);
            *best = (*best).min(d);
            return;
        }
        for v in start..g.order() {
            chosen.push(v);
            rec(g, k, v + 1, chosen, best);
            chosen.pop();
        }
    }
    let mut best = usize::MAX;
    rec(g, k, 0, &mut Vec::new(), &mut best);
    best
}

pub fn random_graph(n: usize, seed: u64) -> SignedGraph {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            match rng.gen_range(0..3) {
                0 => edges.push((u, v, 1)),
                1 => edges.push((u, v, -1)),
                _ => {}
            }
        }
    }
    SignedGraph::from_edges(n, &edges).unwrap()
}

/// Random signed bipartite graph with V1 = the first `s` vertices, `1 <= s < n`.
pub fn random_bipartite(n: usize, seed: u64) -> Bipartition {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let s = rng.gen_range(1..n);
    let mut edges = Vec::new();
    for u in 0..s {
        for v in s..n {
            match rng.gen_range(0..3) {
                0 => edges.push((u, v, 1)),
                1 => edges.push((u, v, -1)),
                _ => {}
            }
        }
    }
    Bipartition::new(SignedGraph::from_edges(n, &edges).unwrap(), s).unwrap()
}
