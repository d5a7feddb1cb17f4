//! Clustering and graph partitioning on small dense problems.
//!
//! Two families of methods live here:
//!
//! - [`kmeans`]: Lloyd's algorithm with a full per-iteration trace (centers,
//!   point-to-center distance matrix, labels and SSE), suitable for printing
//!   the classic "distance matrix formed in iteration N" tables.
//! - [`spectral`]: Fiedler bisection of a graph Laplacian and recursive
//!   multi-way partitioning over induced subgraphs.
//!
//! The spectral side is backed by [`eigen`], a cyclic Jacobi solver for dense
//! symmetric matrices, and [`graph`], which builds adjacency, degree and
//! Laplacian matrices from a simple undirected graph.
//!
//! ```
//! use partitionlab::graph::parse_edge_list;
//! use partitionlab::spectral::{bisect, BisectConfig};
//!
//! let g = parse_edge_list("1 2\n2 3\n3 4\n").unwrap();
//! let b = bisect(&g, &BisectConfig::default()).unwrap();
//! assert_eq!(b.partition.parts(), vec![vec![2, 3], vec![0, 1]]);
//! ```

pub mod eigen;
mod error;
pub mod graph;
pub mod kmeans;
pub mod matrix;
pub mod spectral;

pub use error::{Error, Result};
pub use graph::{Graph, Partition, VertexSubset};
pub use matrix::SymMatrix;
