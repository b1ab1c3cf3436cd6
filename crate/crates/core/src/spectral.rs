//! Closed-form spectra of graph products, symmetry criteria and
//! two-eigenvalue certificates.
//!
//! Signed products are predicted from the squared-matrix identities
//! `A(Γ1 □̃ Γ2)^2 = A1^2 ⊗ I + I ⊗ A2^2` and `A(Γ1 ⋈̃ Γ2)^2 = (A1^2 + I) ⊗ A2^2`,
//! which fix every eigenvalue up to sign; the sign split comes from the
//! bipartite structure of the first factor.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::graph::Bipartition;
use crate::io::round_sig;
use crate::linalg::Spectrum;
use crate::products::{Factor, FoldDirection, ProductKind};
use crate::scalar::Real;

/// One predicted eigenvalue group together with the formula branches that
/// produced it.
#[derive(Debug, Clone, PartialEq)]
pub struct PredictedGroup<T> {
    pub value: T,
    pub mult: usize,
    pub provenance: Vec<String>,
}

/// Predicted spectrum, descending, groups merged under `grouping_tol`.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectrumPrediction<T> {
    groups: Vec<PredictedGroup<T>>,
    grouping_tol: T,
}

impl<T: Real> SpectrumPrediction<T> {
    pub fn from_raw(mut raw: Vec<PredictedGroup<T>>, grouping_tol: T) -> Self {
        raw.retain(|g| g.mult > 0);
        raw.sort_by(|a, b| b.value.partial_cmp(&a.value).unwrap_or(Ordering::Equal));
        let mut groups: Vec<PredictedGroup<T>> = Vec::new();
        let mut last = T::zero();
        let mut sum = T::zero();
        for g in raw {
            match groups.last_mut() {
                Some(open) if last - g.value <= grouping_tol => {
                    open.mult += g.mult;
                    sum += g.value * T::lit(g.mult as f64);
                    open.value = sum / T::lit(open.mult as f64);
                    last = g.value;
                    for p in g.provenance {
                        if !open.provenance.contains(&p) {
                            open.provenance.push(p);
                        }
                    }
                }
                _ => {
                    last = g.value;
                    sum = g.value * T::lit(g.mult as f64);
                    groups.push(g);
                }
            }
        }
        Self { groups, grouping_tol }
    }

    pub fn groups(&self) -> &[PredictedGroup<T>] {
        &self.groups
    }

    pub fn pairs(&self) -> Vec<(T, usize)> {
        self.groups.iter().map(|g| (g.value, g.mult)).collect()
    }

    pub fn order(&self) -> usize {
        self.groups.iter().map(|g| g.mult).sum()
    }

    pub fn grouping_tol(&self) -> T {
        self.grouping_tol
    }

    pub fn to_spectrum(&self) -> Spectrum<T> {
        Spectrum::from_pairs(&self.pairs(), self.grouping_tol)
    }

    /// Same group count, exact multiplicities, values within `tol`.
    pub fn matches(&self, observed: &Spectrum<T>, tol: T) -> bool {
        self.groups.len() == observed.groups().len()
            && self
                .groups
                .iter()
                .zip(observed.groups())
                .all(|(p, o)| p.mult == o.mult && (p.value - o.value).abs() <= tol)
    }
}

/// Spectrum equal to `{+θ^(plus), -θ^(minus)}` with `θ > 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwoEigenvalueCertificate<T> {
    pub theta: T,
    pub multiplicity_plus: usize,
    pub multiplicity_minus: usize,
}

/// True when negating every eigenvalue maps the multiset to itself.
pub fn is_spectrum_symmetric<T: Real>(s: &Spectrum<T>, tol: T) -> bool {
    s.groups().iter().all(|g| {
        s.groups()
            .iter()
            .filter(|h| (h.value + g.value).abs() <= tol)
            .map(|h| h.mult)
            .sum::<usize>()
            == g.mult
    })
}

pub fn two_eigenvalue_param<T: Real>(s: &Spectrum<T>) -> Option<TwoEigenvalueCertificate<T>> {
    let [hi, lo] = s.groups() else {
        return None;
    };
    let tol = s.grouping_tol();
    if hi.value <= tol || (hi.value + lo.value).abs() > tol {
        return None;
    }
    Some(TwoEigenvalueCertificate {
        theta: (hi.value - lo.value) / T::lit(2.0),
        multiplicity_plus: hi.mult,
        multiplicity_minus: lo.mult,
    })
}

fn raw<T>(value: T, mult: usize, provenance: String) -> PredictedGroup<T> {
    PredictedGroup {
        value,
        mult,
        provenance: vec![provenance],
    }
}

/// Unsigned-style products: every pair `(λ_i, μ_j)` contributes `λ+μ`, `λμ`
/// or `(λ+1)μ` with multiplicity `m_i m_j`.
pub fn predict_pair_product<T: Real>(
    kind: ProductKind,
    s1: &Spectrum<T>,
    s2: &Spectrum<T>,
) -> Result<SpectrumPrediction<T>> {
    let (label, f): (&str, fn(T, T) -> T) = match kind {
        ProductKind::Cartesian => ("cartesian lambda+mu", |l, m| l + m),
        ProductKind::Direct => ("direct lambda*mu", |l, m| l * m),
        ProductKind::Semistrong => ("semistrong (lambda+1)*mu", |l, m| (l + T::one()) * m),
        other => return Err(Error::InvalidArgument(format!("{other} needs predict_signed_product"))),
    };
    let mut out = Vec::new();
    for a in s1.groups() {
        for b in s2.groups() {
            out.push(raw(
                f(a.value, b.value),
                a.mult * b.mult,
                format!(
                    "{label} (lambda={}, mu={})",
                    round_sig(a.value.as_f64()),
                    round_sig(b.value.as_f64())
                ),
            ));
        }
    }
    Ok(SpectrumPrediction::from_raw(
        out,
        s1.grouping_tol().max(s2.grouping_tol()),
    ))
}

/// `|V|` and `|V1|` of a bipartite operand; all the closed forms need.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SplitSize {
    pub order: usize,
    pub s: usize,
}

impl SplitSize {
    pub fn of(b: &Bipartition) -> Self {
        Self {
            order: b.order(),
            s: b.s(),
        }
    }

    pub fn is_balanced(self) -> bool {
        2 * self.s == self.order
    }

    /// Split carried by a signed product of two bipartite operands.
    pub fn product(kind: ProductKind, left: Self, right: Self) -> Self {
        let s = match kind {
            ProductKind::SignedCartesian | ProductKind::Cartesian => {
                left.s * right.s + (left.order - left.s) * (right.order - right.s)
            }
            ProductKind::Direct => left.s * right.order,
            ProductKind::SignedSemistrong | ProductKind::Semistrong => left.order * right.s,
        };
        Self {
            order: left.order * right.order,
            s,
        }
    }
}

/// A group of `A^2` eigenvalues `x^2` with `p = mult(x) + mult(-x)` and
/// `plus = mult(x)`.
struct SquareGroup<T> {
    root: T,
    count: usize,
    plus: usize,
}

fn square_groups<T: Real>(s: &Spectrum<T>, require_symmetric: bool) -> Result<Vec<SquareGroup<T>>> {
    let tol = s.grouping_tol();
    let mult_near = |v: T| -> usize {
        s.groups()
            .iter()
            .filter(|g| (g.value - v).abs() <= tol)
            .map(|g| g.mult)
            .sum()
    };
    let mut out = Vec::new();
    for g in s.groups() {
        if g.value.abs() <= tol {
            out.push(SquareGroup {
                root: T::zero(),
                count: g.mult,
                plus: g.mult,
            });
        } else if g.value > T::zero() {
            let minus = mult_near(-g.value);
            if require_symmetric && minus != g.mult {
                return Err(Error::AsymmetricBipartiteSpectrum {
                    value: g.value.as_f64(),
                });
            }
            out.push(SquareGroup {
                root: g.value,
                count: g.mult + minus,
                plus: g.mult,
            });
        } else if mult_near(-g.value) == 0 {
            if require_symmetric {
                return Err(Error::AsymmetricBipartiteSpectrum {
                    value: g.value.as_f64(),
                });
            }
            out.push(SquareGroup {
                root: -g.value,
                count: g.mult,
                plus: 0,
            });
        }
    }
    Ok(out)
}

/// Signed product prediction from the split sizes of the bipartite first
/// operand. `s1` must be the spectrum of that operand.
pub fn predict_signed_from_split<T: Real>(
    kind: ProductKind,
    split: SplitSize,
    s1: &Spectrum<T>,
    s2: &Spectrum<T>,
) -> Result<SpectrumPrediction<T>> {
    if !kind.is_signed() {
        return Err(Error::InvalidArgument(format!("{kind} is not a signed product")));
    }
    let n = split.order;
    if s1.order() != n {
        return Err(Error::DimensionMismatch(format!(
            "first spectrum has order {}, bipartition {n}",
            s1.order()
        )));
    }
    let m = s2.order();
    let semistrong = kind == ProductKind::SignedSemistrong;
    let name = if semistrong { "semistrong" } else { "cartesian" };
    let lambdas = square_groups(s1, true)?;
    let mus = square_groups(s2, false)?;
    let tol = s1.grouping_tol().max(s2.grouping_tol());
    let mut out = Vec::new();
    for l in &lambdas {
        let p = l.count;
        let l2 = l.root * l.root;
        for mu in &mus {
            let (q, t) = (mu.count, mu.plus);
            let m2 = mu.root * mu.root;
            let inputs = format!(
                "lambda^2={}, mu^2={}, p={p}, q={q}, t={t}, n={n}, s={}",
                round_sig(l2.as_f64()),
                round_sig(m2.as_f64()),
                split.s
            );
            let lambda_zero = l.root == T::zero();
            let mu_zero = mu.root == T::zero();
            if (lambda_zero && mu_zero) || (semistrong && mu_zero) {
                out.push(raw(T::zero(), p * q, format!("{name} zero branch ({inputs})")));
            } else if !lambda_zero {
                let v = if semistrong {
                    ((l2 + T::one()) * m2).sqrt()
                } else {
                    (l2 + m2).sqrt()
                };
                let label = format!("{name} lambda!=0 ({inputs})");
                out.push(raw(v, p * q / 2, label.clone()));
                out.push(raw(-v, p * q / 2, label));
            } else {
                // λ = 0, μ ≠ 0: ±μ split by how the null space of A1 sits across the parts
                let d = n as i64 - 2 * split.s as i64;
                let pq = (p * q) as i64;
                let skew = d * (q as i64 - 2 * t as i64);
                let (plus2, minus2) = (pq + skew, pq - skew);
                if plus2 % 2 != 0 || plus2 < 0 || minus2 < 0 {
                    return Err(Error::InvariantViolation(format!(
                        "zero-eigenvalue multiplicities are not integral ({inputs})"
                    )));
                }
                let label = format!("{name} lambda=0, mu!=0 ({inputs})");
                out.push(raw(mu.root, (plus2 / 2) as usize, label.clone()));
                out.push(raw(-mu.root, (minus2 / 2) as usize, label));
            }
        }
    }
    let pred = SpectrumPrediction::from_raw(out, tol);
    if pred.order() != n * m {
        return Err(Error::InvariantViolation(format!(
            "predicted {} eigenvalues for order {}",
            pred.order(),
            n * m
        )));
    }
    Ok(pred)
}

/// Prediction for `Γ1 □̃ Γ2` or `Γ1 ⋈̃ Γ2`.
pub fn predict_signed_product<T: Real>(
    kind: ProductKind,
    b1: &Bipartition,
    s1: &Spectrum<T>,
    s2: &Spectrum<T>,
) -> Result<SpectrumPrediction<T>> {
    predict_signed_from_split(kind, SplitSize::of(b1), s1, s2)
}

/// Iterates [`predict_signed_from_split`] in fold order. `splits[i]` is the
/// split of factor `i` (`None` for a non-bipartite factor); the left operands
/// must all carry one, exactly as for `products::fold`.
pub fn predict_fold<T: Real>(
    kind: ProductKind,
    dir: FoldDirection,
    spectra: &[Spectrum<T>],
    splits: &[Option<SplitSize>],
) -> Result<SpectrumPrediction<T>> {
    if spectra.len() != splits.len() {
        return Err(Error::DimensionMismatch(format!(
            "{} spectra for {} splits",
            spectra.len(),
            splits.len()
        )));
    }
    let Some(last) = spectra.last() else {
        return Err(Error::EmptyFold);
    };
    let split = |i: usize| splits[i].ok_or(Error::NotBipartiteFactor { index: i });
    if spectra.len() == 1 {
        let tol = last.grouping_tol();
        let groups = last
            .groups()
            .iter()
            .map(|g| raw(g.value, g.mult, "single factor".to_string()))
            .collect();
        return Ok(SpectrumPrediction::from_raw(groups, tol));
    }
    let n = spectra.len();
    match dir {
        FoldDirection::Left => {
            let mut acc = predict_signed_from_split(kind, split(n - 2)?, &spectra[n - 2], last)?;
            for i in (0..n - 2).rev() {
                acc = predict_signed_from_split(kind, split(i)?, &spectra[i], &acc.to_spectrum())?;
            }
            Ok(acc)
        }
        FoldDirection::Right => {
            let mut acc_split = split(0)?;
            let mut acc = predict_signed_from_split(kind, acc_split, &spectra[0], &spectra[1])?;
            for (k, next) in spectra.iter().enumerate().skip(2) {
                acc_split = SplitSize::product(kind, acc_split, split(k - 1)?);
                acc = predict_signed_from_split(kind, acc_split, &acc.to_spectrum(), next)?;
            }
            Ok(acc)
        }
    }
}

/// Spectrum of `Γ1 ∘ Γ2` is symmetric iff Γ1 is balanced or Γ2's spectrum is.
pub fn symmetry_criterion<T: Real>(b1: &Bipartition, s2: &Spectrum<T>) -> bool {
    b1.is_balanced() || is_spectrum_symmetric(s2, s2.grouping_tol())
}

/// Fold version: for a right semi-strong fold the split that matters is
/// factor `n-2`'s; for the other three folds any balanced left operand works.
pub fn symmetry_criterion_fold<T: Real>(
    kind: ProductKind,
    dir: FoldDirection,
    factors: &[Factor],
    last_spectrum: &Spectrum<T>,
) -> Result<bool> {
    let n = factors.len();
    if n == 0 {
        return Err(Error::EmptyFold);
    }
    let last_symmetric = is_spectrum_symmetric(last_spectrum, last_spectrum.grouping_tol());
    if n == 1 {
        return Ok(last_symmetric);
    }
    let mut balanced = Vec::with_capacity(n - 1);
    for (i, f) in factors[..n - 1].iter().enumerate() {
        balanced.push(
            f.bipartition()
                .ok_or(Error::NotBipartiteFactor { index: i })?
                .is_balanced(),
        );
    }
    let left_ok = if kind == ProductKind::SignedSemistrong && dir == FoldDirection::Right {
        balanced[n - 2]
    } else {
        balanced.iter().any(|&b| b)
    };
    Ok(left_ok || last_symmetric)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(pairs: &[(f64, usize)]) -> Spectrum<f64> {
        Spectrum::from_pairs(pairs, 1e-8)
    }

    #[test]
    fn symmetric_spectra() {
        let r3 = 3f64.sqrt();
        assert!(is_spectrum_symmetric(&spec(&[(r3, 4), (-r3, 4)]), 1e-8));
        assert!(!is_spectrum_symmetric(&spec(&[(3.0, 1), (1.0, 5), (-2.0, 4)]), 1e-8));
        assert!(is_spectrum_symmetric(&spec(&[(0.0, 7)]), 1e-8));
        assert!(!is_spectrum_symmetric(&spec(&[(1.0, 2), (-1.0, 1)]), 1e-8));
    }

    #[test]
    fn two_eigenvalue_certificates() {
        let c = two_eigenvalue_param(&spec(&[(2.0, 5), (-2.0, 5)])).unwrap();
        assert_eq!((c.multiplicity_plus, c.multiplicity_minus), (5, 5));
        assert!((c.theta - 2.0).abs() < 1e-12);
        assert!(two_eigenvalue_param(&spec(&[(3.0, 1), (1.0, 5), (-2.0, 4)])).is_none());
        assert!(two_eigenvalue_param(&spec(&[(0.0, 3)])).is_none());
        assert!(two_eigenvalue_param(&spec(&[(2.0, 1), (-1.0, 1)])).is_none());
    }

    #[test]
    fn pair_products_of_edges() {
        let e = spec(&[(1.0, 1), (-1.0, 1)]);
        let c = predict_pair_product(ProductKind::Cartesian, &e, &e).unwrap();
        assert_eq!(c.pairs(), vec![(2.0, 1), (0.0, 2), (-2.0, 1)]);
        let s = predict_pair_product(ProductKind::Semistrong, &e, &e).unwrap();
        assert_eq!(s.pairs(), vec![(2.0, 1), (0.0, 2), (-2.0, 1)]);
        let d = predict_pair_product(
            ProductKind::Direct,
            &spec(&[(2.0, 3), (-2.0, 3)]),
            &spec(&[(1.5, 2), (-1.5, 2)]),
        )
        .unwrap();
        assert_eq!(d.pairs(), vec![(3.0, 12), (-3.0, 12)]);
    }

    #[test]
    fn zero_branch_orientation() {
        let r2 = 2f64.sqrt();
        let p3 = spec(&[(r2, 1), (0.0, 1), (-r2, 1)]);
        let k3 = spec(&[(2.0, 1), (-1.0, 2)]);
        let a =
            predict_signed_from_split(ProductKind::SignedCartesian, SplitSize { order: 3, s: 2 }, &p3, &k3).unwrap();
        let b =
            predict_signed_from_split(ProductKind::SignedCartesian, SplitSize { order: 3, s: 1 }, &p3, &k3).unwrap();
        // swapping the parts flips n - 2s and with it the ± split of the zero branch
        assert_eq!(a.to_spectrum().multiplicity_of(2.0), 1);
        assert_eq!(a.to_spectrum().multiplicity_of(-2.0), 0);
        assert_eq!(b.to_spectrum().multiplicity_of(2.0), 0);
        assert_eq!(b.to_spectrum().multiplicity_of(-2.0), 1);
        assert_eq!(a.order(), 9);
    }

    #[test]
    fn rejects_asymmetric_first_factor() {
        let k3 = spec(&[(2.0, 1), (-1.0, 2)]);
        let e = spec(&[(1.0, 1), (-1.0, 1)]);
        assert!(matches!(
            predict_signed_from_split(ProductKind::SignedCartesian, SplitSize { order: 3, s: 1 }, &k3, &e),
            Err(Error::AsymmetricBipartiteSpectrum { .. })
        ));
    }

    #[test]
    fn split_of_products() {
        let a = SplitSize { order: 3, s: 2 };
        let b = SplitSize { order: 2, s: 1 };
        assert_eq!(
            SplitSize::product(ProductKind::SignedCartesian, a, b),
            SplitSize { order: 6, s: 3 }
        );
        assert_eq!(
            SplitSize::product(ProductKind::SignedSemistrong, a, b),
            SplitSize { order: 6, s: 3 }
        );
        assert_eq!(
            SplitSize::product(ProductKind::SignedSemistrong, b, a),
            SplitSize { order: 6, s: 4 }
        );
    }
}
