//! Signed graphs, bipartitions and structural predicates.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::linalg::DenseMatrix;
use crate::scalar::Element;

/// Simple signed graph on vertices `0..n`, stored as a dense symmetric sign
/// matrix with zero diagonal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SignedGraph {
    n: usize,
    sign: Vec<i8>,
}

impl std::fmt::Debug for SignedGraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("SignedGraph")
            .field("n", &self.n)
            .field("edges", &self.edges())
            .finish()
    }
}

impl SignedGraph {
    pub fn empty(n: usize) -> Self {
        Self {
            n,
            sign: vec![0; n * n],
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize, i8)]) -> Result<Self> {
        let mut g = Self::empty(n);
        for &(u, v, s) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::IndexOutOfRange { index: x, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if s != 1 && s != -1 {
                return Err(Error::InvalidSign(s as i64));
            }
            if g.sign(u, v) != 0 {
                return Err(Error::DuplicateEdge {
                    u: u.min(v),
                    v: u.max(v),
                });
            }
            g.sign[u * n + v] = s;
            g.sign[v * n + u] = s;
        }
        Ok(g)
    }

    /// Accepts any square integer matrix that is symmetric, has zero diagonal
    /// and entries in {-1, 0, +1}.
    pub fn from_sign_matrix(m: &DenseMatrix<i64>) -> Result<Self> {
        if !m.is_square() {
            return Err(Error::InvalidSignMatrix(format!(
                "{}x{} is not square",
                m.rows(),
                m.cols()
            )));
        }
        let n = m.rows();
        let mut sign = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let x = m[(i, j)];
                if !(-1..=1).contains(&x) {
                    return Err(Error::EntryOutOfRange { i, j, value: x });
                }
                if i == j && x != 0 {
                    return Err(Error::SelfLoop(i));
                }
                if x != m[(j, i)] {
                    return Err(Error::NotSymmetric { i, j });
                }
                sign.push(x as i8);
            }
        }
        Ok(Self { n, sign })
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn sign(&self, i: usize, j: usize) -> i8 {
        self.sign[i * self.n + j]
    }

    #[inline]
    pub fn is_adjacent(&self, i: usize, j: usize) -> bool {
        self.sign(i, j) != 0
    }

    /// Edges `(u, v, sign)` with `u < v`, in row-major order.
    pub fn edges(&self) -> Vec<(usize, usize, i8)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                let s = self.sign(u, v);
                if s != 0 {
                    out.push((u, v, s));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.sign.iter().filter(|&&s| s != 0).count() / 2
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        let n = self.n;
        self.sign[v * n..(v + 1) * n]
            .iter()
            .enumerate()
            .filter(|(_, &s)| s != 0)
            .map(|(j, _)| j)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors(v).count()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn adjacency<T: Element>(&self) -> DenseMatrix<T> {
        DenseMatrix::from_fn(self.n, self.n, |i, j| T::from_sign(self.sign(i, j)))
    }

    /// The same graph with every edge positive.
    pub fn underlying(&self) -> Self {
        Self {
            n: self.n,
            sign: self.sign.iter().map(|s| s.abs()).collect(),
        }
    }

    /// Every edge sign flipped: (G, sigma) -> (G, -sigma).
    pub fn negated(&self) -> Self {
        Self {
            n: self.n,
            sign: self.sign.iter().map(|s| -s).collect(),
        }
    }

    /// Re-sign the edges of this graph; `signs[i]` applies to `edges()[i]`.
    pub fn with_signature(&self, signs: &[i8]) -> Result<Self> {
        let edges = self.edges();
        if edges.len() != signs.len() {
            return Err(Error::DimensionMismatch(format!(
                "{} signs for {} edges",
                signs.len(),
                edges.len()
            )));
        }
        let relabeled: Vec<_> = edges.iter().zip(signs).map(|(&(u, v, _), &s)| (u, v, s)).collect();
        Self::from_edges(self.n, &relabeled)
    }

    /// Relabel so that new vertex `i` is old vertex `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Self> {
        check_permutation(perm, self.n)?;
        let n = self.n;
        let mut sign = vec![0; n * n];
        for i in 0..n {
            for j in 0..n {
                sign[i * n + j] = self.sign(perm[i], perm[j]);
            }
        }
        Ok(Self { n, sign })
    }

    /// Induced subgraph on `vertices`, relabeled in the order given.
    pub fn induced(&self, vertices: &[usize]) -> Result<Self> {
        for &v in vertices {
            if v >= self.n {
                return Err(Error::IndexOutOfRange { index: v, n: self.n });
            }
        }
        let k = vertices.len();
        let mut sign = vec![0; k * k];
        for (a, &u) in vertices.iter().enumerate() {
            for (b, &v) in vertices.iter().enumerate() {
                sign[a * k + b] = self.sign(u, v);
            }
        }
        Ok(Self { n: k, sign })
    }

    /// Structural checks on the stored matrix. Constructors maintain these; the
    /// method exists so tests can assert them entrywise.
    pub fn check_invariants(&self) -> Result<()> {
        for i in 0..self.n {
            if self.sign(i, i) != 0 {
                return Err(Error::SelfLoop(i));
            }
            for j in 0..self.n {
                let s = self.sign(i, j);
                if !(-1..=1).contains(&s) {
                    return Err(Error::EntryOutOfRange { i, j, value: s as i64 });
                }
                if s != self.sign(j, i) {
                    return Err(Error::NotSymmetric { i, j });
                }
            }
        }
        Ok(())
    }
}

fn check_permutation(perm: &[usize], n: usize) -> Result<()> {
    if perm.len() != n {
        return Err(Error::DimensionMismatch(format!(
            "permutation of length {} for order {n}",
            perm.len()
        )));
    }
    let mut seen = vec![false; n];
    for &p in perm {
        if p >= n || seen[p] {
            return Err(Error::InvalidArgument(format!("{perm:?} is not a permutation")));
        }
        seen[p] = true;
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeStats {
    pub degrees: Vec<usize>,
    pub max_degree: usize,
    /// Common degree when the graph is regular.
    pub regular: Option<usize>,
}

impl DegreeStats {
    pub fn is_regular(&self) -> bool {
        self.regular.is_some()
    }
}

pub fn degree_stats(g: &SignedGraph) -> DegreeStats {
    let degrees: Vec<usize> = (0..g.order()).map(|v| g.degree(v)).collect();
    let max_degree = degrees.iter().copied().max().unwrap_or(0);
    let regular = match degrees.first() {
        Some(&d) if degrees.iter().all(|&x| x == d) => Some(d),
        None => Some(0),
        _ => None,
    };
    DegreeStats {
        degrees,
        max_degree,
        regular,
    }
}

pub fn is_connected(g: &SignedGraph) -> bool {
    let n = g.order();
    if n == 0 {
        return true;
    }
    let mut seen = vec![false; n];
    let mut queue = VecDeque::from([0]);
    seen[0] = true;
    let mut count = 1;
    while let Some(u) = queue.pop_front() {
        for w in g.neighbors(u) {
            if !seen[w] {
                seen[w] = true;
                count += 1;
                queue.push_back(w);
            }
        }
    }
    count == n
}

/// Two-part vertex split of a signed graph in which every edge crosses parts.
///
/// The common case is contiguous: the first `s` vertices form V1 and the
/// adjacency matrix has block form `[[0, P], [P^T, 0]]`. Products of bipartite
/// graphs carry non-contiguous splits, so the part of each vertex is stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bipartition {
    graph: SignedGraph,
    in_v1: Vec<bool>,
}

impl Bipartition {
    /// V1 = `{0, .., s-1}`.
    pub fn new(graph: SignedGraph, s: usize) -> Result<Self> {
        let n = graph.order();
        let in_v1 = (0..n).map(|i| i < s).collect();
        Self::from_sides(graph, in_v1)
    }

    /// `in_v1[v]` is true when vertex `v` belongs to V1.
    pub fn from_sides(graph: SignedGraph, in_v1: Vec<bool>) -> Result<Self> {
        let n = graph.order();
        if in_v1.len() != n {
            return Err(Error::InvalidBipartition(format!(
                "{} side labels for order {n}",
                in_v1.len()
            )));
        }
        let s = in_v1.iter().filter(|&&b| b).count();
        if s == 0 || s == n {
            return Err(Error::InvalidBipartition(format!(
                "|V1| = {s} must lie in 1..={}",
                n.saturating_sub(1)
            )));
        }
        for (u, v, _) in graph.edges() {
            if in_v1[u] == in_v1[v] {
                return Err(Error::InvalidBipartition(format!(
                    "edge {{{u}, {v}}} lies inside one part"
                )));
            }
        }
        Ok(Self { graph, in_v1 })
    }

    pub fn graph(&self) -> &SignedGraph {
        &self.graph
    }

    pub fn into_graph(self) -> SignedGraph {
        self.graph
    }

    pub fn order(&self) -> usize {
        self.graph.order()
    }

    /// |V1|.
    pub fn s(&self) -> usize {
        self.in_v1.iter().filter(|&&b| b).count()
    }

    pub fn in_v1(&self, v: usize) -> bool {
        self.in_v1[v]
    }

    pub fn sides(&self) -> &[bool] {
        &self.in_v1
    }

    pub fn v1(&self) -> Vec<usize> {
        (0..self.order()).filter(|&v| self.in_v1[v]).collect()
    }

    pub fn v2(&self) -> Vec<usize> {
        (0..self.order()).filter(|&v| !self.in_v1[v]).collect()
    }

    pub fn is_balanced(&self) -> bool {
        2 * self.s() == self.order()
    }

    /// True when V1 is exactly the first `s` vertices.
    pub fn is_contiguous(&self) -> bool {
        let s = self.s();
        self.in_v1.iter().enumerate().all(|(i, &b)| b == (i < s))
    }

    /// `+1` on V1, `-1` on V2: the diagonal of `diag(I_s, -I_{n-s})`.
    pub fn side_signs(&self) -> Vec<i8> {
        self.in_v1.iter().map(|&b| if b { 1 } else { -1 }).collect()
    }

    /// Biadjacency block: rows are V1 and columns V2, both ascending.
    pub fn block_p(&self) -> DenseMatrix<i64> {
        self.graph.adjacency::<i64>().submatrix(&self.v1(), &self.v2())
    }

    /// Same graph with the roles of V1 and V2 exchanged.
    pub fn swapped(&self) -> Self {
        Self {
            graph: self.graph.clone(),
            in_v1: self.in_v1.iter().map(|b| !b).collect(),
        }
    }

    /// Contiguous relabeling: V1 first, then V2, each ascending. Returns the
    /// permutation with `perm[new] = old`.
    pub fn to_contiguous(&self) -> (Self, Vec<usize>) {
        let mut perm = self.v1();
        perm.extend(self.v2());
        let s = self.s();
        let graph = self.graph.permuted(&perm).expect("v1 ++ v2 is a permutation");
        (Self::new(graph, s).expect("relabeling preserves the split"), perm)
    }
}

pub fn is_balanced_bipartition(b: &Bipartition) -> bool {
    b.is_balanced()
}

/// Result of [`find_bipartition`]: the graph relabeled with V1 first, and the
/// relabeling `permutation[new] = old`.
#[derive(Debug, Clone)]
pub struct BipartiteSplit {
    pub bipartition: Bipartition,
    pub permutation: Vec<usize>,
}

/// Two-colors the graph, V1 being the part containing vertex 0 (and, in other
/// components, the part containing the component's smallest vertex). An
/// edgeless graph puts only its last vertex in V2.
pub fn find_bipartition(g: &SignedGraph) -> Result<BipartiteSplit> {
    let n = g.order();
    if n < 2 {
        return Err(Error::InvalidBipartition(format!("order {n} admits no two-part split")));
    }
    let mut color: Vec<Option<bool>> = vec![None; n];
    let mut parent: Vec<usize> = (0..n).collect();
    let mut depth = vec![0usize; n];
    for root in 0..n {
        if color[root].is_some() {
            continue;
        }
        color[root] = Some(true);
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            let cu = color[u].expect("queued vertices are colored");
            for w in g.neighbors(u) {
                match color[w] {
                    None => {
                        color[w] = Some(!cu);
                        parent[w] = u;
                        depth[w] = depth[u] + 1;
                        queue.push_back(w);
                    }
                    Some(cw) if cw == cu => {
                        return Err(Error::NotBipartite {
                            cycle: odd_cycle(&parent, &depth, u, w),
                        });
                    }
                    Some(_) => {}
                }
            }
        }
    }
    let mut in_v1: Vec<bool> = color.into_iter().map(|c| c.expect("all vertices colored")).collect();
    if in_v1.iter().all(|&b| b) {
        // edgeless: every root landed in V1, so V2 takes the last vertex
        in_v1[n - 1] = false;
    }
    let split = Bipartition::from_sides(g.clone(), in_v1)?;
    let (bipartition, permutation) = split.to_contiguous();
    Ok(BipartiteSplit {
        bipartition,
        permutation,
    })
}

/// Closes the BFS-tree paths from `u` and `w` (same color, adjacent) into a cycle.
fn odd_cycle(parent: &[usize], depth: &[usize], u: usize, w: usize) -> Vec<usize> {
    let (mut a, mut b) = (u, w);
    let mut left = vec![a];
    let mut right = vec![b];
    while depth[a] > depth[b] {
        a = parent[a];
        left.push(a);
    }
    while depth[b] > depth[a] {
        b = parent[b];
        right.push(b);
    }
    while a != b {
        a = parent[a];
        b = parent[b];
        left.push(a);
        right.push(b);
    }
    right.pop();
    right.reverse();
    left.extend(right);
    left
}
