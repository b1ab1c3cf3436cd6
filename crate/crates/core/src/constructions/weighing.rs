use crate::constructions::field::{prime_power, FiniteField};
use crate::error::{Error, Result};
use crate::graph::SignedGraph;
use crate::linalg::{kronecker, DenseMatrix};

/// Square {-1, 0, +1} matrix with `W W^T = W^T W = weight * I`, checked in
/// integer arithmetic on construction.
#[derive(Debug, Clone, PartialEq)]
pub struct WeighingMatrix {
    weight: usize,
    entries: DenseMatrix<i64>,
}

impl WeighingMatrix {
    pub fn new(entries: DenseMatrix<i64>, weight: usize) -> Result<Self> {
        check_weighing(&entries, weight)?;
        Ok(Self { weight, entries })
    }

    /// Reads the weight off the first row and verifies it.
    pub fn detect(entries: DenseMatrix<i64>) -> Result<Self> {
        if entries.rows() == 0 {
            return Err(Error::InvariantViolation("empty weighing matrix".into()));
        }
        let weight = entries.row(0).iter().filter(|&&x| x != 0).count();
        Self::new(entries, weight)
    }

    pub fn order(&self) -> usize {
        self.entries.rows()
    }

    pub fn weight(&self) -> usize {
        self.weight
    }

    pub fn entries(&self) -> &DenseMatrix<i64> {
        &self.entries
    }

    pub fn is_symmetric(&self) -> bool {
        self.entries.is_symmetric()
    }

    /// Symmetric weighing matrices with zero diagonal are signed adjacency matrices.
    pub fn to_graph(&self) -> Result<SignedGraph> {
        SignedGraph::from_sign_matrix(&self.entries)
    }
}

fn check_weighing(m: &DenseMatrix<i64>, weight: usize) -> Result<()> {
    if !m.is_square() {
        return Err(Error::InvariantViolation(format!(
            "{}x{} is not square",
            m.rows(),
            m.cols()
        )));
    }
    if let Some(bad) = m.as_slice().iter().find(|x| !(-1..=1).contains(*x)) {
        return Err(Error::InvariantViolation(format!("entry {bad} outside {{-1, 0, +1}}")));
    }
    let target = DenseMatrix::<i64>::identity(m.rows()).scale(weight as i64);
    if m.matmul(&m.transpose())? != target || m.transpose().matmul(m)? != target {
        return Err(Error::InvariantViolation(format!(
            "W W^T != {weight} I for order {}",
            m.rows()
        )));
    }
    Ok(())
}

/// Sylvester Hadamard matrix `H_{2^t} = H_2 ⊗ H_{2^{t-1}}`.
pub fn hadamard(order: usize) -> Result<WeighingMatrix> {
    if !order.is_power_of_two() {
        return Err(Error::NotPowerOfTwo(order));
    }
    let h2 = DenseMatrix::from_rows(&[vec![1i64, 1], vec![1, -1]])?;
    let mut h = DenseMatrix::from_rows(&[vec![1i64]])?;
    while h.rows() < order {
        h = kronecker(&h2, &h)?;
    }
    WeighingMatrix::new(h, order)
}

/// Orders with a symmetric Paley conference matrix: 2, or `n ≡ 2 (mod 4)`
/// with `n - 1` a prime power.
pub fn is_supported_conference_order(n: usize) -> bool {
    n == 2 || (n % 4 == 2 && prime_power(n - 1).is_some())
}

/// Symmetric conference matrix `[[0, 1^T], [1, Q]]` with `Q[a][b] = χ(a - b)`
/// over GF(n - 1).
pub fn conference_paley(order: usize) -> Result<WeighingMatrix> {
    if !is_supported_conference_order(order) {
        return Err(Error::UnsupportedOrder(order));
    }
    if order == 2 {
        return WeighingMatrix::new(DenseMatrix::from_rows(&[vec![0, 1], vec![1, 0]])?, 1);
    }
    let q = order - 1;
    let field = FiniteField::new(q).ok_or(Error::UnsupportedOrder(order))?;
    let chi = field.quadratic_characters();
    let m = DenseMatrix::from_fn(order, order, |i, j| match (i, j) {
        (0, 0) => 0,
        (0, _) | (_, 0) => 1,
        _ => chi[field.sub(i - 1, j - 1)] as i64,
    });
    WeighingMatrix::new(m, q)
}

/// Circulant with `m[i][j] = first_row[(j - i) mod n]`.
pub fn circulant(first_row: &[i64]) -> DenseMatrix<i64> {
    let n = first_row.len();
    DenseMatrix::from_fn(n, n, |i, j| first_row[(j + n - i) % n])
}

/// The order-7 weight-4 circulant with first row (-1, 1, 1, 0, 1, 0, 0).
pub fn w74() -> WeighingMatrix {
    WeighingMatrix::new(circulant(&[-1, 1, 1, 0, 1, 0, 0]), 4).expect("W(7,4) circulant is a weighing matrix")
}

/// The four block/Kronecker compositions of two weighing matrices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ComposeVariant {
    /// `W(4 n1 n2, k1 + k2)`
    CartesianDoubled = 1,
    /// `W(4 n1 n2, (k1 + 1) k2)`
    SemistrongDoubled = 2,
    /// `W(2 n1 n2, (k1 + 1) k2)`
    Semistrong = 3,
    /// `W(2 n1 n2, k1 + k2)`, needs `W2` symmetric
    Cartesian = 4,
}

impl TryFrom<u8> for ComposeVariant {
    type Error = Error;
    fn try_from(v: u8) -> Result<Self> {
        match v {
            1 => Ok(Self::CartesianDoubled),
            2 => Ok(Self::SemistrongDoubled),
            3 => Ok(Self::Semistrong),
            4 => Ok(Self::Cartesian),
            other => Err(Error::InvalidArgument(format!(
                "weighing composition variant {other} is not in 1..=4"
            ))),
        }
    }
}

fn bipartite_double(w: &DenseMatrix<i64>) -> Result<DenseMatrix<i64>> {
    let z = DenseMatrix::zeros(w.rows(), w.rows());
    DenseMatrix::from_blocks(&[vec![&z, w], vec![&w.transpose(), &z]])
}

fn twisted(w: &DenseMatrix<i64>) -> Result<DenseMatrix<i64>> {
    let i = DenseMatrix::identity(w.rows());
    DenseMatrix::from_blocks(&[vec![&i, w], vec![&w.transpose(), &i.neg()]])
}

fn split_signs(n: usize) -> DenseMatrix<i64> {
    DenseMatrix::diagonal(&(0..2 * n).map(|i| if i < n { 1 } else { -1 }).collect::<Vec<_>>())
}

pub fn weighing_compose(variant: ComposeVariant, w1: &WeighingMatrix, w2: &WeighingMatrix) -> Result<WeighingMatrix> {
    let (n1, n2) = (w1.order(), w2.order());
    let (k1, k2) = (w1.weight(), w2.weight());
    let (a, b) = (w1.entries(), w2.entries());
    let (m, weight) = match variant {
        ComposeVariant::CartesianDoubled => {
            let left = kronecker(&bipartite_double(a)?, &DenseMatrix::identity(2 * n2))?;
            let right = kronecker(&split_signs(n1), &bipartite_double(b)?)?;
            (left.add(&right)?, k1 + k2)
        }
        ComposeVariant::SemistrongDoubled => (kronecker(&twisted(a)?, &bipartite_double(b)?)?, (k1 + 1) * k2),
        ComposeVariant::Semistrong => (kronecker(&twisted(a)?, b)?, (k1 + 1) * k2),
        ComposeVariant::Cartesian => {
            if !w2.is_symmetric() {
                let (i, j) = first_asymmetry(b);
                return Err(Error::NotSymmetric { i, j });
            }
            let i1 = DenseMatrix::identity(n1);
            let i2 = DenseMatrix::identity(n2);
            let tl = kronecker(&i1, b)?;
            let tr = kronecker(a, &i2)?;
            let bl = kronecker(&a.transpose(), &i2)?;
            let br = tl.neg();
            (DenseMatrix::from_blocks(&[vec![&tl, &tr], vec![&bl, &br]])?, k1 + k2)
        }
    };
    WeighingMatrix::new(m, weight)
}

fn first_asymmetry(m: &DenseMatrix<i64>) -> (usize, usize) {
    for i in 0..m.rows() {
        for j in (i + 1)..m.cols() {
            if m[(i, j)] != m[(j, i)] {
                return (i, j);
            }
        }
    }
    (0, 0)
}
