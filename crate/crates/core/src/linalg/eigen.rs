//! Cyclic Jacobi eigensolver for dense symmetric matrices and the grouped
//! [`Spectrum`] it produces.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::linalg::matrix::DenseMatrix;
use crate::scalar::Real;

/// Off-diagonal Frobenius norm, relative to the input's, at which a solve stops.
pub const OFF_DIAGONAL_THRESHOLD: f64 = 1e-12;
pub const MAX_SWEEPS: usize = 100;
pub const SYMMETRY_TOL: f64 = 1e-12;
/// Relative factor in the default grouping tolerance `1e-8 * (1 + ||a||_inf)`.
pub const GROUPING_FACTOR: f64 = 1e-8;

#[derive(Debug, Clone, Copy)]
pub struct JacobiConfig {
    pub threshold: f64,
    pub max_sweeps: usize,
    pub symmetry_tol: f64,
}

impl Default for JacobiConfig {
    fn default() -> Self {
        Self {
            threshold: OFF_DIAGONAL_THRESHOLD,
            max_sweeps: MAX_SWEEPS,
            symmetry_tol: SYMMETRY_TOL,
        }
    }
}

/// Eigenvalues in descending order with the accumulated rotations; column `i`
/// of `vectors` belongs to `values[i]`.
#[derive(Debug, Clone)]
pub struct SymmetricEigen<T> {
    pub values: Vec<T>,
    pub vectors: DenseMatrix<T>,
    pub sweeps: usize,
}

fn off_diagonal_norm<T: Real>(a: &DenseMatrix<T>) -> T {
    let n = a.rows();
    let mut acc = T::zero();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                acc += a[(i, j)] * a[(i, j)];
            }
        }
    }
    acc.sqrt()
}

pub fn jacobi_eigen<T: Real>(input: &DenseMatrix<T>, cfg: &JacobiConfig) -> Result<SymmetricEigen<T>> {
    input.check_symmetric(T::lit(cfg.symmetry_tol))?;
    let n = input.rows();
    let mut a = input.clone();
    let mut v = DenseMatrix::<T>::identity(n);
    let rel = T::lit(cfg.threshold).max(T::precision_floor());
    let stop = rel * input.frobenius();

    let mut sweeps = 0;
    loop {
        if off_diagonal_norm(&a) <= stop {
            break;
        }
        if sweeps == cfg.max_sweeps {
            return Err(Error::NoConvergence { sweeps });
        }
        sweeps += 1;
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[(p, q)];
                if apq == T::zero() {
                    continue;
                }
                let app = a[(p, p)];
                let aqq = a[(q, q)];
                // negligible against both diagonal entries: a rotation here only
                // reshuffles a degenerate cluster and refills the other entries
                let g = T::lit(100.0) * apq.abs();
                if sweeps > 3 && app.abs() + g == app.abs() && aqq.abs() + g == aqq.abs() {
                    a[(p, q)] = T::zero();
                    a[(q, p)] = T::zero();
                    continue;
                }
                let tau = (aqq - app) / (T::lit(2.0) * apq);
                let t = if tau >= T::zero() {
                    T::one() / (tau + (T::one() + tau * tau).sqrt())
                } else {
                    -T::one() / (-tau + (T::one() + tau * tau).sqrt())
                };
                let c = T::one() / (T::one() + t * t).sqrt();
                let s = t * c;
                for k in 0..n {
                    if k == p || k == q {
                        continue;
                    }
                    let akp = a[(k, p)];
                    let akq = a[(k, q)];
                    let new_kp = c * akp - s * akq;
                    let new_kq = s * akp + c * akq;
                    a[(k, p)] = new_kp;
                    a[(p, k)] = new_kp;
                    a[(k, q)] = new_kq;
                    a[(q, k)] = new_kq;
                }
                a[(p, p)] = app - t * apq;
                a[(q, q)] = aqq + t * apq;
                a[(p, q)] = T::zero();
                a[(q, p)] = T::zero();
                for k in 0..n {
                    let vkp = v[(k, p)];
                    let vkq = v[(k, q)];
                    v[(k, p)] = c * vkp - s * vkq;
                    v[(k, q)] = s * vkp + c * vkq;
                }
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[(j, j)].partial_cmp(&a[(i, i)]).unwrap_or(Ordering::Equal));
    let values = order.iter().map(|&i| a[(i, i)]).collect();
    let vectors = DenseMatrix::from_fn(n, n, |r, c| v[(r, order[c])]);
    Ok(SymmetricEigen {
        values,
        vectors,
        sweeps,
    })
}

/// All eigenvalues, descending, with the default solver settings.
pub fn eigenvalues_sym<T: Real>(a: &DenseMatrix<T>) -> Result<Vec<T>> {
    Ok(jacobi_eigen(a, &JacobiConfig::default())?.values)
}

/// `1e-8 * (1 + ||a||_inf)`, floored at `1000 eps` per unit norm so that
/// single-precision solves still group repeated eigenvalues.
pub fn default_grouping_tol<T: Real>(a: &DenseMatrix<T>) -> T {
    let factor = T::lit(GROUPING_FACTOR).max(T::epsilon() * T::lit(1e3));
    factor * (T::one() + a.norm_inf())
}

/// Eigenvalues of `a` grouped into multiplicities under `grouping_tol`.
pub fn eigen_sym<T: Real>(a: &DenseMatrix<T>, grouping_tol: T) -> Result<Spectrum<T>> {
    let values = eigenvalues_sym(a)?;
    Ok(Spectrum::from_sorted_values(&values, grouping_tol))
}

/// [`eigen_sym`] with [`default_grouping_tol`].
pub fn eigen_sym_default<T: Real>(a: &DenseMatrix<T>) -> Result<Spectrum<T>> {
    eigen_sym(a, default_grouping_tol(a))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectralGroup<T> {
    pub value: T,
    pub mult: usize,
}

/// Distinct eigenvalues, descending, with multiplicities.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum<T> {
    groups: Vec<SpectralGroup<T>>,
    grouping_tol: T,
}

impl<T: Real> Spectrum<T> {
    /// `values` must already be sorted descending.
    pub fn from_sorted_values(values: &[T], grouping_tol: T) -> Self {
        let weighted: Vec<(T, usize)> = values.iter().map(|&v| (v, 1)).collect();
        Self {
            groups: merge_sorted(&weighted, grouping_tol),
            grouping_tol,
        }
    }

    /// Groups in any order; values closer than `grouping_tol` are merged.
    pub fn from_pairs(pairs: &[(T, usize)], grouping_tol: T) -> Self {
        let mut sorted: Vec<(T, usize)> = pairs.iter().copied().filter(|&(_, m)| m > 0).collect();
        sorted.sort_by(|a, b| b.0.partial_cmp(&a.0).unwrap_or(Ordering::Equal));
        Self {
            groups: merge_sorted(&sorted, grouping_tol),
            grouping_tol,
        }
    }

    pub fn groups(&self) -> &[SpectralGroup<T>] {
        &self.groups
    }

    pub fn pairs(&self) -> Vec<(T, usize)> {
        self.groups.iter().map(|g| (g.value, g.mult)).collect()
    }

    pub fn grouping_tol(&self) -> T {
        self.grouping_tol
    }

    pub fn order(&self) -> usize {
        self.groups.iter().map(|g| g.mult).sum()
    }

    pub fn distinct_count(&self) -> usize {
        self.groups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.groups.is_empty()
    }

    /// Expanded eigenvalue list, descending.
    pub fn values(&self) -> Vec<T> {
        self.groups
            .iter()
            .flat_map(|g| std::iter::repeat_n(g.value, g.mult))
            .collect()
    }

    /// `k`-th largest eigenvalue, 1-indexed.
    pub fn kth_largest(&self, k: usize) -> Option<T> {
        let mut seen = 0;
        for g in &self.groups {
            seen += g.mult;
            if k >= 1 && k <= seen {
                return Some(g.value);
            }
        }
        None
    }

    pub fn largest(&self) -> Option<T> {
        self.groups.first().map(|g| g.value)
    }

    pub fn smallest(&self) -> Option<T> {
        self.groups.last().map(|g| g.value)
    }

    /// Multiplicity of the group matching `value` within the grouping tolerance.
    pub fn multiplicity_of(&self, value: T) -> usize {
        self.groups
            .iter()
            .filter(|g| (g.value - value).abs() <= self.grouping_tol)
            .map(|g| g.mult)
            .sum()
    }

    pub fn trace(&self) -> T {
        self.groups.iter().map(|g| g.value * T::lit(g.mult as f64)).sum()
    }

    pub fn sum_of_squares(&self) -> T {
        self.groups
            .iter()
            .map(|g| g.value * g.value * T::lit(g.mult as f64))
            .sum()
    }

    /// Group-by-group equality: same number of groups, identical multiplicities,
    /// values within `tol`.
    pub fn approx_eq(&self, other: &Self, tol: T) -> bool {
        self.groups.len() == other.groups.len()
            && self
                .groups
                .iter()
                .zip(&other.groups)
                .all(|(a, b)| a.mult == b.mult && (a.value - b.value).abs() <= tol)
    }

    pub fn to_f64(&self) -> Spectrum<f64> {
        Spectrum {
            groups: self
                .groups
                .iter()
                .map(|g| SpectralGroup {
                    value: g.value.as_f64(),
                    mult: g.mult,
                })
                .collect(),
            grouping_tol: self.grouping_tol.as_f64(),
        }
    }
}

fn merge_sorted<T: Real>(sorted: &[(T, usize)], tol: T) -> Vec<SpectralGroup<T>> {
    let mut groups: Vec<SpectralGroup<T>> = Vec::new();
    // running weighted sum and last raw value of the open group
    let mut sum = T::zero();
    let mut last = T::zero();
    for &(v, m) in sorted {
        match groups.last_mut() {
            Some(g) if last - v <= tol => {
                g.mult += m;
                sum += v * T::lit(m as f64);
                g.value = sum / T::lit(g.mult as f64);
            }
            _ => {
                groups.push(SpectralGroup { value: v, mult: m });
                sum = v * T::lit(m as f64);
            }
        }
        last = v;
    }
    groups
}

/// `max(|largest|, |smallest|)`.
pub fn spectral_radius<T: Real>(s: &Spectrum<T>) -> T {
    match (s.largest(), s.smallest()) {
        (Some(hi), Some(lo)) => hi.abs().max(lo.abs()),
        _ => T::zero(),
    }
}
