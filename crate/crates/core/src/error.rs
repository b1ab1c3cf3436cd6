use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("edge {{{u}, {v}}} listed more than once")]
    DuplicateEdge { u: usize, v: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex index {index} out of range for a graph of order {n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("edge sign must be +1 or -1, got {0}")]
    InvalidSign(i64),
    #[error("sign matrix is invalid: {0}")]
    InvalidSignMatrix(String),
    #[error("graph is not bipartite; odd cycle {cycle:?}")]
    NotBipartite { cycle: Vec<usize> },
    #[error("invalid bipartition: {0}")]
    InvalidBipartition(String),
    #[error("matrix of {rows}x{cols} exceeds the size cap of {cap} entries")]
    SizeOverflow { rows: usize, cols: usize, cap: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is not symmetric at ({i}, {j})")]
    NotSymmetric { i: usize, j: usize },
    #[error("Jacobi iteration did not converge after {sweeps} sweeps")]
    NoConvergence { sweeps: usize },
    #[error("product entry {value} at ({i}, {j}) is outside {{-1, 0, +1}}")]
    EntryOutOfRange { i: usize, j: usize, value: i64 },
    #[error("factor {index} must be bipartite for this product")]
    NotBipartiteFactor { index: usize },
    #[error("fold needs at least one factor")]
    EmptyFold,
    #[error("{0} is not a power of two")]
    NotPowerOfTwo(usize),
    #[error("no supported construction for order {0}")]
    UnsupportedOrder(usize),
    #[error("invariant violated: {0}")]
    InvariantViolation(String),
    #[error("bipartite factor spectrum is not symmetric about zero (value {value})")]
    AsymmetricBipartiteSpectrum { value: f64 },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("matrix entry ({i}, {j}) exceeds the adjacency magnitude")]
    NotDominated { i: usize, j: usize },
    #[error("enumeration too large: {what} = {size} exceeds cap {cap}")]
    TooLarge {
        what: &'static str,
        size: usize,
        cap: usize,
    },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
