//! Graph products on signed adjacency matrices.
//!
//! Vertex `(u, v)` of a product with an order-`m` right factor is index
//! `u * m + v`, so every product matrix is literally the Kronecker expression
//! it is defined by.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{Bipartition, SignedGraph};
use crate::linalg::{kronecker, DenseMatrix};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ProductKind {
    /// `A1 ⊗ I + I ⊗ A2`
    Cartesian,
    /// `A1 ⊗ A2`
    Direct,
    /// `(A1 + I) ⊗ A2`
    Semistrong,
    /// `A1 ⊗ I + diag(I_s, -I_{n-s}) ⊗ A2`
    SignedCartesian,
    /// `[[I_s, P], [P^T, -I_{n-s}]] ⊗ A2`
    SignedSemistrong,
}

impl ProductKind {
    pub fn is_signed(self) -> bool {
        matches!(self, Self::SignedCartesian | Self::SignedSemistrong)
    }

    pub fn name(self) -> &'static str {
        match self {
            Self::Cartesian => "cartesian",
            Self::Direct => "direct",
            Self::Semistrong => "semistrong",
            Self::SignedCartesian => "signed-cartesian",
            Self::SignedSemistrong => "signed-semistrong",
        }
    }
}

impl fmt::Display for ProductKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ProductKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().replace('_', "-").as_str() {
            "cartesian" => Ok(Self::Cartesian),
            "direct" | "kronecker" | "tensor" => Ok(Self::Direct),
            "semistrong" | "semi-strong" => Ok(Self::Semistrong),
            "signed-cartesian" => Ok(Self::SignedCartesian),
            "signed-semistrong" | "signed-semi-strong" => Ok(Self::SignedSemistrong),
            other => Err(Error::InvalidArgument(format!("unknown product kind '{other}'"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FoldDirection {
    /// `Γ_1 ∘ (Γ_2 ∘ (… ∘ Γ_n))`
    Left,
    /// `((Γ_1 ∘ Γ_2) ∘ …) ∘ Γ_n`
    Right,
}

impl FromStr for FoldDirection {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "left" | "l" => Ok(Self::Left),
            "right" | "r" => Ok(Self::Right),
            other => Err(Error::InvalidArgument(format!("unknown fold direction '{other}'"))),
        }
    }
}

impl fmt::Display for FoldDirection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Left => "left",
            Self::Right => "right",
        })
    }
}

fn to_graph(m: &DenseMatrix<i64>) -> Result<SignedGraph> {
    SignedGraph::from_sign_matrix(m)
}

/// Unsigned-style products of two signed graphs.
pub fn product(kind: ProductKind, g1: &SignedGraph, g2: &SignedGraph) -> Result<SignedGraph> {
    let a1 = g1.adjacency::<i64>();
    let a2 = g2.adjacency::<i64>();
    let i1 = DenseMatrix::identity(g1.order());
    let i2 = DenseMatrix::identity(g2.order());
    let m = match kind {
        ProductKind::Cartesian => kronecker(&a1, &i2)?.add(&kronecker(&i1, &a2)?)?,
        ProductKind::Direct => kronecker(&a1, &a2)?,
        ProductKind::Semistrong => kronecker(&a1.add(&i1)?, &a2)?,
        ProductKind::SignedCartesian | ProductKind::SignedSemistrong => {
            return Err(Error::InvalidArgument(format!(
                "{kind} needs a bipartition; use the signed product functions"
            )))
        }
    };
    to_graph(&m)
}

/// Signed Cartesian product `Γ1 □̃ Γ2`.
pub fn signed_cartesian(b1: &Bipartition, g2: &SignedGraph) -> Result<SignedGraph> {
    let a1 = b1.graph().adjacency::<i64>();
    let d = DenseMatrix::diagonal(&b1.side_signs().iter().map(|&s| s as i64).collect::<Vec<_>>());
    let i2 = DenseMatrix::identity(g2.order());
    let m = kronecker(&a1, &i2)?.add(&kronecker(&d, &g2.adjacency())?)?;
    to_graph(&m)
}

/// Signed semi-strong product `Γ1 ⋈̃ Γ2`.
pub fn signed_semistrong(b1: &Bipartition, g2: &SignedGraph) -> Result<SignedGraph> {
    let a1 = b1.graph().adjacency::<i64>();
    let d = DenseMatrix::diagonal(&b1.side_signs().iter().map(|&s| s as i64).collect::<Vec<_>>());
    let m = kronecker(&a1.add(&d)?, &g2.adjacency())?;
    to_graph(&m)
}

/// Dispatches on a signed kind.
pub fn signed_product(kind: ProductKind, b1: &Bipartition, g2: &SignedGraph) -> Result<SignedGraph> {
    match kind {
        ProductKind::SignedCartesian => signed_cartesian(b1, g2),
        ProductKind::SignedSemistrong => signed_semistrong(b1, g2),
        other => Err(Error::InvalidArgument(format!("{other} is not a signed product"))),
    }
}

/// Bipartition of a signed product of two bipartite factors, in product
/// vertex order. For `□̃` a vertex `(u, v)` is in V1 when `u` and `v` sit on
/// the same side of their factors; for `⋈̃` it follows `v` alone.
pub fn product_bipartition(
    kind: ProductKind,
    b1: &Bipartition,
    b2: &Bipartition,
    product_graph: SignedGraph,
) -> Result<Bipartition> {
    let (n, m) = (b1.order(), b2.order());
    if product_graph.order() != n * m {
        return Err(Error::DimensionMismatch(format!(
            "product of order {} for factors of order {n} and {m}",
            product_graph.order()
        )));
    }
    let mut sides = Vec::with_capacity(n * m);
    for u in 0..n {
        for v in 0..m {
            sides.push(match kind {
                ProductKind::SignedCartesian | ProductKind::Cartesian => b1.in_v1(u) == b2.in_v1(v),
                ProductKind::SignedSemistrong | ProductKind::Semistrong => b2.in_v1(v),
                ProductKind::Direct => b1.in_v1(u),
            });
        }
    }
    Bipartition::from_sides(product_graph, sides)
}

/// One operand of a fold: bipartite factors carry their split.
#[derive(Debug, Clone)]
pub enum Factor {
    Bipartite(Bipartition),
    Plain(SignedGraph),
}

impl Factor {
    pub fn graph(&self) -> &SignedGraph {
        match self {
            Self::Bipartite(b) => b.graph(),
            Self::Plain(g) => g,
        }
    }

    pub fn bipartition(&self) -> Option<&Bipartition> {
        match self {
            Self::Bipartite(b) => Some(b),
            Self::Plain(_) => None,
        }
    }
}

impl From<Bipartition> for Factor {
    fn from(b: Bipartition) -> Self {
        Self::Bipartite(b)
    }
}

impl From<SignedGraph> for Factor {
    fn from(g: SignedGraph) -> Self {
        Self::Plain(g)
    }
}

/// n-fold signed product.
///
/// `Right` computes `((Γ1 ∘ Γ2) ∘ …) ∘ Γn`, carrying the intermediate
/// bipartition through [`product_bipartition`] and checking it against each
/// intermediate graph. `Left` computes `Γ1 ∘ (Γ2 ∘ (… ∘ Γn))`; only the
/// original factors 1..n-1 act as left operands there.
pub fn fold(kind: ProductKind, dir: FoldDirection, factors: &[Factor]) -> Result<SignedGraph> {
    if !kind.is_signed() {
        return Err(Error::InvalidArgument(format!(
            "fold is defined for signed products, not {kind}"
        )));
    }
    let Some(last) = factors.last() else {
        return Err(Error::EmptyFold);
    };
    if factors.len() == 1 {
        return Ok(last.graph().clone());
    }
    let bip = |i: usize| factors[i].bipartition().ok_or(Error::NotBipartiteFactor { index: i });
    match dir {
        FoldDirection::Left => {
            let mut acc = last.graph().clone();
            for i in (0..factors.len() - 1).rev() {
                acc = signed_product(kind, bip(i)?, &acc)?;
            }
            Ok(acc)
        }
        FoldDirection::Right => {
            let mut acc = bip(0)?.clone();
            for k in 1..factors.len() {
                let g = signed_product(kind, &acc, factors[k].graph())?;
                if k == factors.len() - 1 {
                    return Ok(g);
                }
                acc =
                    product_bipartition(kind, &acc, bip(k)?, g).map_err(|_| Error::NotBipartiteFactor { index: k })?;
            }
            unreachable!("loop returns at the last factor")
        }
    }
}
