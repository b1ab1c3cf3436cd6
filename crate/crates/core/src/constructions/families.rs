//! Named signed graphs and parametrised two-eigenvalue families.

use crate::constructions::weighing::{conference_paley, hadamard, w74};
use crate::error::{Error, Result};
use crate::graph::{Bipartition, SignedGraph};
use crate::linalg::{kronecker, DenseMatrix};

fn graph(n: usize, edges: &[(usize, usize, i8)]) -> SignedGraph {
    SignedGraph::from_edges(n, edges).expect("builtin edge list is valid")
}

fn bip(g: SignedGraph, s: usize) -> Bipartition {
    Bipartition::new(g, s).expect("builtin bipartition is valid")
}

fn to_graph(m: &DenseMatrix<i64>) -> Result<SignedGraph> {
    SignedGraph::from_sign_matrix(m)
}

/// Single edge with sign `sign`, split `{0} | {1}`.
pub fn k2(sign: i8) -> Bipartition {
    bip(graph(2, &[(0, 1, sign)]), 1)
}

/// Path a-b-c relabeled so that V1 = {a, c} comes first: edges {0,2}, {1,2}.
pub fn p3() -> Bipartition {
    bip(graph(3, &[(0, 2, 1), (1, 2, 1)]), 2)
}

/// K_{1,2} with the centre as V1.
pub fn star_k12() -> Bipartition {
    bip(graph(3, &[(0, 1, 1), (0, 2, 1)]), 1)
}

/// All-positive 4-cycle as K_{2,2}, split `{0,1} | {2,3}`.
pub fn c4() -> Bipartition {
    bip(graph(4, &[(0, 2, 1), (0, 3, 1), (1, 2, 1), (1, 3, 1)]), 2)
}

/// K_{2,2} with exactly one negative edge, `[[0, H2], [H2, 0]]`.
pub fn k22neg() -> Bipartition {
    signed_complete_bipartite(1)
}

pub fn k3(sign: i8) -> SignedGraph {
    graph(3, &[(0, 1, sign), (0, 2, sign), (1, 2, sign)])
}

/// Petersen graph: outer 5-cycle on 0..5, spokes `i -- i+5`, inner pentagram.
pub fn petersen(sign: i8) -> SignedGraph {
    let mut edges = Vec::with_capacity(15);
    for i in 0..5 {
        edges.push((i, (i + 1) % 5, sign));
        edges.push((i, i + 5, sign));
        edges.push((5 + i, 5 + (i + 2) % 5, sign));
    }
    graph(10, &edges)
}

/// Unsigned hypercube Q_n; vertices are bit strings, adjacent when they differ in one bit.
pub fn hypercube(n: u32) -> SignedGraph {
    let order = 1usize << n;
    let mut edges = Vec::new();
    for u in 0..order {
        for b in 0..n {
            let v = u ^ (1 << b);
            if u < v {
                edges.push((u, v, 1));
            }
        }
    }
    graph(order, &edges)
}

/// Signed hypercube with `A_1 = [[0,1],[1,0]]` and
/// `A_n = [[A_{n-1}, I], [I, -A_{n-1}]]`, so `A_n^2 = n I`.
pub fn huang_hypercube(n: u32) -> Result<SignedGraph> {
    if n == 0 {
        return Ok(SignedGraph::empty(1));
    }
    let mut a = DenseMatrix::from_rows(&[vec![0i64, 1], vec![1, 0]])?;
    for _ in 1..n {
        let i = DenseMatrix::identity(a.rows());
        a = DenseMatrix::from_blocks(&[vec![&a, &i], vec![&i, &a.neg()]])?;
    }
    to_graph(&a)
}

/// `[[0, 1], [1, 0]] ⊗ H_{2^t}`: a signing of K_{2^t, 2^t} with spectrum
/// `±√(2^t)`, V1 the first `2^t` vertices.
pub fn signed_complete_bipartite(t: u32) -> Bipartition {
    let h = hadamard(1 << t).expect("power of two");
    let swap = DenseMatrix::from_rows(&[vec![0i64, 1], vec![1, 0]]).expect("2x2");
    let m = kronecker(&swap, h.entries()).expect("small kronecker");
    bip(to_graph(&m).expect("H is a sign matrix"), 1 << t)
}

fn cyclic_shift(n: usize) -> DenseMatrix<i64> {
    DenseMatrix::from_fn(n, n, |i, j| i64::from(j == (i + 1) % n))
}

/// Toroidal tessellation T_{2n}: `[[P+P^T, P-P^T], [P^T-P, -(P+P^T)]]` with
/// `P` the `n`-cycle shift.
pub fn toroidal_t2n(n: usize) -> Result<SignedGraph> {
    if n < 3 {
        return Err(Error::InvalidArgument(format!("T_2n needs n >= 3, got {n}")));
    }
    let p = cyclic_shift(n);
    let pt = p.transpose();
    let sym = p.add(&pt)?;
    let skew = p.sub(&pt)?;
    let m = DenseMatrix::from_blocks(&[vec![&sym, &skew], vec![&skew.neg(), &sym.neg()]])?;
    to_graph(&m)
}

/// Bipartite double of the circulant W(7,4): `[[0, W], [W^T, 0]]`, 14 vertices.
pub fn s14() -> Bipartition {
    let w = w74();
    let z = DenseMatrix::zeros(7, 7);
    let m =
        DenseMatrix::from_blocks(&[vec![&z, w.entries()], vec![&w.entries().transpose(), &z]]).expect("square blocks");
    bip(to_graph(&m).expect("W(7,4) is a sign matrix"), 7)
}

/// Signed K_n from the symmetric conference matrix of order `n`.
pub fn signed_complete(n: usize) -> Result<SignedGraph> {
    conference_paley(n)?.to_graph()
}

/// `C_k ⊗ H_{2^t}`: signing of the complete k-partite graph with parts of size `2^t`.
pub fn signed_multipartite(k: usize, t: u32) -> Result<SignedGraph> {
    let c = conference_paley(k)?;
    let h = hadamard(1 << t)?;
    to_graph(&kronecker(c.entries(), h.entries())?)
}

/// `H_{2^t} ⊗ A(g)`.
pub fn hadamard_blowup(g: &SignedGraph, t: u32) -> Result<SignedGraph> {
    let h = hadamard(1 << t)?;
    to_graph(&kronecker(h.entries(), &g.adjacency())?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::degree_stats;

    #[test]
    fn small_named_graphs() {
        assert_eq!(p3().graph().edge_count(), 2);
        assert_eq!(p3().s(), 2);
        assert_eq!(star_k12().graph().degree(0), 2);
        assert_eq!(petersen(1).edge_count(), 15);
        assert_eq!(degree_stats(&petersen(-1)).regular, Some(3));
        assert_eq!(hypercube(3).edge_count(), 12);
        assert_eq!(k22neg().graph().edges().iter().filter(|e| e.2 < 0).count(), 1);
    }

    #[test]
    fn huang_matrix_squares_to_scalar() {
        for n in 1..=4 {
            let a = huang_hypercube(n).unwrap().adjacency::<i64>();
            let sq = a.matmul(&a).unwrap();
            assert_eq!(sq, DenseMatrix::identity(1 << n).scale(n as i64));
            assert_eq!(huang_hypercube(n).unwrap().underlying(), hypercube(n));
        }
    }

    #[test]
    fn toroidal_is_four_regular() {
        for n in 3..7 {
            assert_eq!(degree_stats(&toroidal_t2n(n).unwrap()).regular, Some(4));
        }
        assert!(toroidal_t2n(2).is_err());
        let p = cyclic_shift(4);
        let c4 = p.add(&p.transpose()).unwrap();
        let expected =
            DenseMatrix::from_rows(&[vec![0, 1, 0, 1], vec![1, 0, 1, 0], vec![0, 1, 0, 1], vec![1, 0, 1, 0]]).unwrap();
        assert_eq!(c4, expected);
    }

    #[test]
    fn s14_is_four_regular_bipartite() {
        let s = s14();
        assert_eq!(s.order(), 14);
        assert_eq!(degree_stats(s.graph()).regular, Some(4));
        assert!(s.is_balanced());
    }
}
