//! The nine primitive operations.
//!
//! | operation | graph reading |
//! |---|---|
//! | [`mxm`] | multi-source one-hop traversal and combine |
//! | [`mxv`] | single-source one-hop traversal and combine |
//! | [`ewise_mult`] | edge weighting by another graph on the shared edges |
//! | [`reduce`] | in/out degree and other per-vertex folds |
//! | [`subref`] | sub-graph selection, relabeling |
//! | [`subassign`] | sub-graph insertion |
//! | [`scale_matrix`] | per-vertex edge weighting |
//! | [`scale_vector`] | vertex weighting, masking |
//! | [`apply_unary`] | edge transformation |
//!
//! Every kernel is a pure function of borrowed inputs. Kernels that fold with
//! a semiring or monoid ([`mxm`], [`mxv`], [`reduce`]) never store a result
//! equal to its 0̄; [`apply_unary`] drops a caller-chosen value.

mod apply;
mod elementwise;
mod index;
mod mxm;
mod mxv;
mod reduce;

pub use apply::{apply_unary, ApplyUnary};
pub use elementwise::{ewise_mult, scale_matrix, scale_vector};
pub use index::{subassign, subref};
pub use mxm::mxm;
pub use mxv::mxv;
pub use reduce::reduce;

use crate::domain::Scalar;
use crate::error::{Error, Result};
use crate::sparse::{CompressedMatrix, MatrixDescriptor, Orientation};

const UNSET: usize = usize::MAX;

/// Range and uniqueness check for subref/subassign index lists. Returns the
/// inverse map `old index -> position in list` (`UNSET` when absent).
fn index_map(list: &[usize], bound: usize) -> Result<Vec<usize>> {
    let mut map = vec![UNSET; bound];
    for (p, &i) in list.iter().enumerate() {
        if i >= bound {
            return Err(Error::IndexOutOfRange { index: i, bound });
        }
        if map[i] != UNSET {
            return Err(Error::DuplicateIndex(i));
        }
        map[i] = p;
    }
    Ok(map)
}

/// Concatenates per-lane `(indices, values)` into one compressed matrix.
fn assemble<T: Scalar>(
    nrows: usize,
    ncols: usize,
    orientation: Orientation,
    lanes: Vec<(Vec<usize>, Vec<T>)>,
) -> CompressedMatrix<T> {
    let nnz = lanes.iter().map(|l| l.0.len()).sum();
    let mut offsets = Vec::with_capacity(lanes.len() + 1);
    let mut indices = Vec::with_capacity(nnz);
    let mut values = Vec::with_capacity(nnz);
    offsets.push(0);
    for (idx, vals) in lanes {
        indices.extend(idx);
        values.extend(vals);
        offsets.push(indices.len());
    }
    CompressedMatrix::from_parts_unchecked(
        nrows,
        ncols,
        orientation,
        offsets,
        indices,
        values,
        MatrixDescriptor::default(),
    )
}

/// Dense index for sparse vector lookups.
fn scatter<T: Scalar>(len: usize, entries: impl Iterator<Item = (usize, T)>) -> Vec<Option<T>> {
    let mut dense = vec![None; len];
    for (i, v) in entries {
        dense[i] = Some(v);
    }
    dense
}
