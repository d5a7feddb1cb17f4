use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("line {line}: self-loop on vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },

    #[error("line {line}: duplicate edge {u}-{v}")]
    DuplicateEdge { line: usize, u: usize, v: usize },

    #[error("vertex {vertex} out of range for a graph with {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("vertex subset is empty")]
    EmptySubset,

    #[error("vertex {0} appears more than once in the subset")]
    DuplicateVertex(usize),

    #[error("invalid lattice dimensions: {0}")]
    InvalidLattice(String),

    #[error("lattice has {size} vertices, above the cap of {cap}")]
    LatticeTooLarge { size: usize, cap: usize },

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("matrix row {row} has {len} entries, expected {n}")]
    NotSquare { row: usize, len: usize, n: usize },

    #[error("matrix is not symmetric: |a[{row}][{col}] - a[{col}][{row}]| = {diff:e}")]
    Asymmetric { row: usize, col: usize, diff: f64 },

    #[error("non-finite matrix entry at ({row}, {col})")]
    NonFinite { row: usize, col: usize },

    #[error("matrix must be at least {min}x{min}, got {n}x{n}")]
    TooSmall { n: usize, min: usize },

    #[error("Jacobi iteration did not converge after {sweeps} sweeps (off-diagonal norm {residual:e})")]
    NoConvergence { sweeps: usize, residual: f64 },

    #[error("k = {k} is out of range 1..={n}")]
    KOutOfRange { k: usize, n: usize },

    #[error("vector must be nonzero")]
    ZeroVector,

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("not a graph Laplacian: row {row} sums to {sum:e}")]
    NotLaplacian { row: usize, sum: f64 },

    #[error("graph is disconnected ({} components of sizes {sizes:?}); split by components first", sizes.len())]
    Disconnected { sizes: Vec<usize> },

    #[error("threshold alpha = {alpha} leaves one side of the split empty")]
    EmptySide { alpha: f64 },

    #[error("dataset has no points")]
    EmptyDataset,

    #[error("duplicate point id {0:?}")]
    DuplicateId(String),

    #[error("point {id:?} has a non-finite coordinate")]
    NonFiniteCoordinate { id: String },

    #[error("label {label} is out of range 1..={k}")]
    InvalidLabel { label: usize, k: usize },

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
}
