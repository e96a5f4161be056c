//! Graph algorithms expressed with the [`kernels`](crate::kernels) only.
//!
//! Nothing in this module touches container storage: matrices and vectors
//! are built through the public constructors and combined with the nine
//! primitives, sub-matrix assembly and the registry semirings.

mod bfs;
mod components;
mod pagerank;
mod sssp;
mod triangles;

pub use bfs::{bfs, BfsResult};
pub use components::connected_components;
pub use pagerank::{pagerank, PageRankResult};
pub use sssp::sssp_minplus;
pub use triangles::{clustering_coefficients, triangle_count};

use crate::algebra::{Monoid, Semiring, UnaryOp};
use crate::domain::{Scalar, ValueDomain};
use crate::error::{Error, Result};
use crate::kernels::{apply_unary, mxm, reduce, subassign};
use crate::sparse::{Axis, CompressedMatrix, Orientation, SparseVector};

/// Edge direction for [`degrees`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    In,
    Out,
}

/// In- or out-degree of every vertex; vertices of degree 0 are absent.
pub fn degrees<T: Scalar>(a: &CompressedMatrix<T>, direction: Direction) -> Result<SparseVector<i64>> {
    let p = pattern(a, 1i64);
    let axis = match direction {
        Direction::Out => Axis::Rows,
        Direction::In => Axis::Cols,
    };
    reduce(&p, &Monoid::plus(), axis)
}

fn pattern<T: Scalar, O: Scalar>(a: &CompressedMatrix<T>, one: O) -> CompressedMatrix<O> {
    apply_unary(a, &UnaryOp::constant(one), None)
}

fn require_graph<T: Scalar>(a: &CompressedMatrix<T>) -> Result<usize> {
    if T::DOMAIN == ValueDomain::Complex64 {
        return Err(Error::UnsupportedDomain(T::DOMAIN));
    }
    if a.nrows() != a.ncols() {
        return Err(Error::NonSquare {
            nrows: a.nrows(),
            ncols: a.ncols(),
        });
    }
    Ok(a.nrows())
}

fn require_vertex(v: usize, n: usize) -> Result<()> {
    if v >= n {
        return Err(Error::IndexOutOfRange { index: v, bound: n });
    }
    Ok(())
}

/// `A ⊕ D` where `D` carries `one` on the diagonal, computed as the product
/// of the block matrices `[D | A]` and `[D ; D]` under `s`. `one` must be the
/// multiplicative identity of `s`.
fn with_diagonal<T: Scalar>(a: &CompressedMatrix<T>, one: T, s: &Semiring<T>) -> Result<CompressedMatrix<T>> {
    let n = a.nrows();
    let d = CompressedMatrix::diagonal(n, one);
    let low: Vec<usize> = (0..n).collect();
    let high: Vec<usize> = (n..2 * n).collect();
    let left = CompressedMatrix::empty(n, 2 * n, Orientation::Csr);
    let left = subassign(&left, &low, &low, &d)?;
    let left = subassign(&left, &low, &high, a)?;
    let right = CompressedMatrix::empty(2 * n, n, Orientation::Csr);
    let right = subassign(&right, &low, &low, &d)?;
    let right = subassign(&right, &high, &low, &d)?;
    mxm(&left, &right, s)
}
