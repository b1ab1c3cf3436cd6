//! Signed graphs, their products and spectra.
//!
//! * [`graph`]: the signed adjacency model, bipartitions, degree statistics.
//! * [`linalg`]: dense matrices, Kronecker products, a cyclic Jacobi solver.
//! * [`products`]: unsigned-style and signed Cartesian / semi-strong products and n-fold folds.
//! * [`constructions`]: Hadamard, conference and weighing matrices and the signed families built on them.
//! * [`spectral`]: closed-form spectrum predictions and symmetry criteria.
//! * [`bounds`]: induced-subgraph degree bounds, brute-force oracles and signature search.
//! * [`io`]: graph JSON, matrix text and report output.
//!
//! Matrix and spectral code is generic over [`scalar::Element`] /
//! [`scalar::Real`]; the aliases below fix the usual choices.

pub mod bounds;
pub mod constructions;
pub mod error;
pub mod graph;
pub mod io;
pub mod linalg;
pub mod products;
pub mod scalar;
pub mod spectral;

pub use error::{Error, Result};
pub use graph::{
    degree_stats, find_bipartition, is_balanced_bipartition, is_connected, Bipartition, DegreeStats, SignedGraph,
};
pub use linalg::{eigen_sym, eigen_sym_default, kronecker, spectral_radius, DenseMatrix, Spectrum};
pub use products::{
    fold, product, signed_cartesian, signed_product, signed_semistrong, Factor, FoldDirection, ProductKind,
};
pub use scalar::{Element, Real};
pub use spectral::{SpectrumPrediction, SplitSize, TwoEigenvalueCertificate};

/// Exact integer matrices: sign, weighing and Hadamard matrices.
pub type IntMatrix = DenseMatrix<i64>;
pub type RealMatrix = DenseMatrix<f64>;
pub type RealMatrix32 = DenseMatrix<f32>;
pub type Spectrum64 = Spectrum<f64>;
pub type Spectrum32 = Spectrum<f32>;
pub type Prediction64 = SpectrumPrediction<f64>;
