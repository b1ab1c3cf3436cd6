//! Induced-subgraph degree bounds and the checks around them.
//!
//! If `H` is an induced subgraph on `n - k + 1` vertices then interlacing gives
//! `λ_1(H) >= λ_k(Γ)`, and `Δ(H) >= λ_1(A_H)` for any signing of `H`. The
//! brute-force oracle in [`subsets`] measures the left-hand side directly.

pub mod signature;
pub mod subsets;

use std::time::{Duration, Instant};

use crate::error::{Error, Result};
use crate::graph::{is_connected, Bipartition, SignedGraph};
use crate::linalg::{eigen_sym_default, eigenvalues_sym, spectral_radius, DenseMatrix};
use crate::products::signed_cartesian;
use crate::scalar::Real;

pub use signature::{signature_search, SignatureSearchResult, DEFAULT_MAX_EDGES};
pub use subsets::{min_max_degree_over_induced, SearchOptions, SubsetMinimum, DEFAULT_MAX_VERTICES};

/// Slack on every floating-point inequality checked here.
pub const CHECK_TOL: f64 = 1e-8;
/// Bounds within this of an integer square root are rounded onto it.
const SQRT_SNAP: f64 = 1e-6;

/// `⌈√n⌉` in integers.
pub fn ceil_sqrt(n: u64) -> u64 {
    let mut r = (n as f64).sqrt() as u64;
    while r * r > n {
        r -= 1;
    }
    while r * r < n {
        r += 1;
    }
    r
}

/// `⌈x - 1e-9⌉` clamped at zero, computed through [`ceil_sqrt`] when `x^2`
/// is numerically an integer.
pub fn bound_ceil(x: f64) -> u64 {
    if x <= 0.0 {
        return 0;
    }
    let sq = x * x;
    let near = sq.round();
    if (sq - near).abs() <= SQRT_SNAP * (1.0 + near) {
        return ceil_sqrt(near as u64);
    }
    (x - 1e-9).ceil().max(0.0) as u64
}

#[derive(Debug, Clone, PartialEq)]
pub struct SpectralBound {
    /// Number of eigenvalues `>= -tol`.
    pub k_nonneg: usize,
    /// `λ_k` for `k = k_nonneg`.
    pub lambda_k: f64,
    /// Induced subgraphs of this order have `Δ >= λ_k`.
    pub subgraph_order: usize,
}

pub fn spectral_lower_bound(g: &SignedGraph) -> Result<SpectralBound> {
    if !is_connected(g) {
        return Err(Error::Disconnected);
    }
    let spec = eigen_sym_default(&g.adjacency::<f64>())?;
    let tol = spec.grouping_tol();
    let values = spec.values();
    let k = values.iter().filter(|&&v| v >= -tol).count();
    let lambda_k = if k == 0 { values[0] } else { values[k - 1] };
    Ok(SpectralBound {
        k_nonneg: k,
        lambda_k,
        subgraph_order: g.order() - k.max(1) + 1,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct BoundReport {
    pub subset_size: usize,
    pub brute_min_max_degree: Option<usize>,
    /// `λ_{n-k+1}(Γ)`.
    pub spectral_bound: f64,
    pub spectral_bound_ceil: u64,
    pub witness_subset: Vec<usize>,
    pub elapsed: Duration,
}

impl BoundReport {
    /// The brute-force minimum respects the bound (vacuous when skipped).
    pub fn holds(&self) -> bool {
        self.brute_min_max_degree
            .is_none_or(|d| d as u64 >= self.spectral_bound_ceil)
    }
}

/// Brute-force minimum of `Δ(H)` over `k`-vertex induced subgraphs next to the
/// interlacing bound `λ_{n-k+1}`; `brute = false` skips the enumeration.
pub fn huang_report(g: &SignedGraph, k: usize, brute: bool, opts: &SearchOptions) -> Result<BoundReport> {
    let n = g.order();
    if k == 0 || k > n {
        return Err(Error::InvalidArgument(format!("subset size {k} must lie in 1..={n}")));
    }
    let start = Instant::now();
    let values = eigenvalues_sym(&g.adjacency::<f64>())?;
    let spectral_bound = values[n - k];
    let (brute_min_max_degree, witness_subset) = if brute {
        let r = min_max_degree_over_induced(g, k, opts)?;
        (Some(r.degree), r.witness)
    } else {
        (None, Vec::new())
    };
    Ok(BoundReport {
        subset_size: k,
        brute_min_max_degree,
        spectral_bound,
        spectral_bound_ceil: bound_ceil(spectral_bound),
        witness_subset,
        elapsed: start.elapsed(),
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct InterlacingReport<T> {
    pub holds: bool,
    /// Largest `μ_i - λ_i` or `λ_{n-m+i} - μ_i`; nonpositive when interlacing holds exactly.
    pub max_violation: T,
}

/// Checks `λ_i >= μ_i >= λ_{n-m+i}` for the principal submatrix on `subset`.
pub fn interlacing_check<T: Real>(a: &DenseMatrix<T>, subset: &[usize]) -> Result<InterlacingReport<T>> {
    let n = a.rows();
    let m = subset.len();
    if m == 0 || m >= n {
        return Err(Error::InvalidArgument(format!("subset of size {m} for order {n}")));
    }
    let mut seen = vec![false; n];
    for &i in subset {
        if i >= n {
            return Err(Error::IndexOutOfRange { index: i, n });
        }
        if std::mem::replace(&mut seen[i], true) {
            return Err(Error::InvalidArgument(format!("index {i} repeated in subset")));
        }
    }
    let lam = eigenvalues_sym(a)?;
    let mu = eigenvalues_sym(&a.principal_submatrix(subset))?;
    let mut worst = T::neg_infinity();
    for i in 0..m {
        worst = worst.max(mu[i] - lam[i]).max(lam[n - m + i] - mu[i]);
    }
    Ok(InterlacingReport {
        holds: worst <= T::lit(CHECK_TOL),
        max_violation: worst,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct DominanceReport {
    pub max_degree: usize,
    pub lambda1: f64,
    pub holds: bool,
}

/// `Δ(g) >= λ_1(Ã)` for any symmetric `Ã` with `|ã_ij| <= |a_ij|`.
pub fn dominance_check<T: Real>(g: &SignedGraph, a_tilde: &DenseMatrix<T>) -> Result<DominanceReport> {
    let n = g.order();
    if a_tilde.rows() != n || a_tilde.cols() != n {
        return Err(Error::DimensionMismatch(format!(
            "{}x{} matrix for order {n}",
            a_tilde.rows(),
            a_tilde.cols()
        )));
    }
    for i in 0..n {
        for j in 0..n {
            let cap = if g.is_adjacent(i, j) { T::one() } else { T::zero() };
            if a_tilde[(i, j)].abs() > cap {
                return Err(Error::NotDominated { i, j });
            }
        }
    }
    let lambda1 = eigenvalues_sym(a_tilde)?.first().map_or(0.0, |v| v.as_f64());
    let max_degree = g.max_degree();
    Ok(DominanceReport {
        max_degree,
        lambda1,
        holds: max_degree as f64 >= lambda1 - CHECK_TOL,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct RamanujanReport {
    pub rho1: f64,
    pub rho2: f64,
    pub delta1: usize,
    pub delta2: usize,
    pub rho_product: f64,
    /// `sqrt(ρ1^2 + ρ2^2)`.
    pub rho_formula: f64,
    pub identity_holds: bool,
    /// Both factors satisfy `ρ_i <= 2 sqrt(Δ_i - 1)`.
    pub factors_ramanujan: bool,
    /// `2 sqrt(Δ1 + Δ2 - 2)`.
    pub bound: f64,
    pub bound_holds: bool,
}

impl RamanujanReport {
    /// The identity holds and, when the factor hypotheses do, so does the bound.
    pub fn holds(&self) -> bool {
        self.identity_holds && (!self.factors_ramanujan || self.bound_holds)
    }
}

fn rho(g: &SignedGraph) -> Result<f64> {
    Ok(spectral_radius(&eigen_sym_default(&g.adjacency::<f64>())?))
}

pub fn ramanujan_product_check(b1: &Bipartition, g2: &SignedGraph) -> Result<RamanujanReport> {
    let (delta1, delta2) = (b1.graph().max_degree(), g2.max_degree());
    if delta1 == 0 || delta2 == 0 {
        return Err(Error::InvalidArgument("both factors need an edge".into()));
    }
    let (rho1, rho2) = (rho(b1.graph())?, rho(g2)?);
    let rho_product = rho(&signed_cartesian(b1, g2)?)?;
    let rho_formula = (rho1 * rho1 + rho2 * rho2).sqrt();
    let ram = |r: f64, d: usize| r <= 2.0 * ((d - 1) as f64).sqrt() + CHECK_TOL;
    let bound = 2.0 * ((delta1 + delta2 - 2) as f64).sqrt();
    Ok(RamanujanReport {
        rho1,
        rho2,
        delta1,
        delta2,
        rho_product,
        rho_formula,
        identity_holds: (rho_product - rho_formula).abs() <= CHECK_TOL,
        factors_ramanujan: ram(rho1, delta1) && ram(rho2, delta2),
        bound,
        bound_holds: rho_product <= bound + CHECK_TOL,
    })
}
