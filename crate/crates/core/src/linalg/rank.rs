use num_bigint::BigInt;
use num_traits::Zero;

use crate::linalg::matrix::DenseMatrix;
use crate::scalar::Real;

/// Exact rank of an integer matrix by fraction-free (Bareiss) elimination.
pub fn rank_exact(m: &DenseMatrix<i64>) -> usize {
    let (rows, cols) = (m.rows(), m.cols());
    let mut a: Vec<Vec<BigInt>> = (0..rows)
        .map(|i| m.row(i).iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let mut prev = BigInt::from(1);
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pivot) = (rank..rows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, pivot);
        for r in (rank + 1)..rows {
            for c in (col + 1)..cols {
                let v = (&a[rank][col] * &a[r][c] - &a[r][col] * &a[rank][c]) / &prev;
                a[r][c] = v;
            }
            a[r][col] = BigInt::zero();
        }
        prev = a[rank][col].clone();
        rank += 1;
    }
    rank
}

/// Floating-point rank by partial-pivot elimination; pivots at or below
/// `tol * max|entry|` count as zero.
pub fn rank_real<T: Real>(m: &DenseMatrix<T>, tol: T) -> usize {
    let (rows, cols) = (m.rows(), m.cols());
    let scale = m.max_abs();
    if scale == T::zero() {
        return 0;
    }
    let cutoff = tol * scale;
    let mut a: Vec<Vec<T>> = (0..rows).map(|i| m.row(i).to_vec()).collect();
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let (pivot, best) = (rank..rows)
            .map(|r| (r, a[r][col].abs()))
            .fold((rank, T::zero()), |acc, x| if x.1 > acc.1 { x } else { acc });
        if best <= cutoff {
            continue;
        }
        a.swap(rank, pivot);
        for r in (rank + 1)..rows {
            let f = a[r][col] / a[rank][col];
            if f == T::zero() {
                continue;
            }
            let (top, bottom) = a.split_at_mut(r);
            for (x, &y) in bottom[0][col..cols].iter_mut().zip(&top[rank][col..cols]) {
                *x -= f * y;
            }
        }
        rank += 1;
    }
    rank
}

/// `cols - rank`.
pub fn nullity_exact(m: &DenseMatrix<i64>) -> usize {
    m.cols() - rank_exact(m)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_rank_small_cases() {
        let z = DenseMatrix::<i64>::zeros(3, 4);
        assert_eq!(rank_exact(&z), 0);
        assert_eq!(rank_exact(&DenseMatrix::identity(5)), 5);
        let m = DenseMatrix::from_rows(&[vec![1, 2, 3], vec![2, 4, 6], vec![1, 0, 1]]).unwrap();
        assert_eq!(rank_exact(&m), 2);
        assert_eq!(nullity_exact(&m), 1);
    }

    #[test]
    fn exact_and_real_agree_on_hadamard() {
        let h2 = DenseMatrix::from_rows(&[vec![1i64, 1], vec![1, -1]]).unwrap();
        let h8 = crate::linalg::kronecker(&h2, &crate::linalg::kronecker(&h2, &h2).unwrap()).unwrap();
        assert_eq!(rank_exact(&h8), 8);
        assert_eq!(rank_real(&h8.to_real::<f64>(), 1e-9), 8);
    }
}
