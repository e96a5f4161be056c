//! Sparse linear algebra over semirings, and graph algorithms written
//! entirely in terms of it.
//!
//! A graph on `n` vertices is an `n x n` adjacency matrix with entry `(i, j)`
//! for the edge `i -> j`. Nine primitives in [`kernels`] (matrix-matrix and
//! matrix-vector products, element-wise products, reductions, sub-matrix
//! extraction and assignment, scaling and unary maps) are parameterized by a
//! [`Semiring`] or one of its parts, and the algorithms in [`algorithms`] are
//! compositions of those primitives only.
//!
//! ```
//! use sgk_core::{algorithms, CompressedMatrix};
//!
//! let path = CompressedMatrix::from_entries(3, 3, [(0, 1, 1i64), (1, 2, 1)]).unwrap();
//! let bfs = algorithms::bfs(&path, &[0]).unwrap();
//! assert_eq!(bfs.levels.to_dense(-1), vec![0, 1, 2]);
//! ```

pub mod algebra;
pub mod algorithms;
pub mod domain;
pub mod error;
pub mod generate;
pub mod io;
pub mod kernels;
pub mod oracle;
pub mod sparse;

pub use algebra::{
    register_semiring, registry_get, BinaryOp, BuiltinSemiring, Monoid, Semiring, SemiringId, UnaryOp,
};
pub use domain::{Complex64, Numeric, OpaqueHandle, Scalar, ValueDomain};
pub use error::{Error, Result};
pub use sparse::{Axis, CompressedMatrix, CooMatrix, MatrixDescriptor, Orientation, SparseVector, Triple};
