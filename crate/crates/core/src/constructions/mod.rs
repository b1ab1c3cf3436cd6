//! Explicit signed graphs with few distinct eigenvalues and the weighing
//! matrices behind them.

pub mod families;
pub mod field;
pub mod weighing;

pub use families::{
    c4, hadamard_blowup, huang_hypercube, hypercube, k2, k22neg, k3, p3, petersen, s14, signed_complete,
    signed_complete_bipartite, signed_multipartite, star_k12, toroidal_t2n,
};
pub use field::{prime_power, FiniteField};
pub use weighing::{
    circulant, conference_paley, hadamard, is_supported_conference_order, w74, weighing_compose, ComposeVariant,
    WeighingMatrix,
};
