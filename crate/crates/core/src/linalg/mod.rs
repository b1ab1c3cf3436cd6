//! Dense linear algebra: matrices, Kronecker products, rank and the symmetric eigensolver.

mod eigen;
mod matrix;
mod rank;

pub use eigen::{
    default_grouping_tol, eigen_sym, eigen_sym_default, eigenvalues_sym, jacobi_eigen, spectral_radius, JacobiConfig,
    SpectralGroup, Spectrum, SymmetricEigen, GROUPING_FACTOR, MAX_SWEEPS, OFF_DIAGONAL_THRESHOLD, SYMMETRY_TOL,
};
pub use matrix::{kronecker, kronecker_with_cap, DenseMatrix, DEFAULT_MAX_ENTRIES};
pub use rank::{nullity_exact, rank_exact, rank_real};
