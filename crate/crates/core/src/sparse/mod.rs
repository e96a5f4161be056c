//! Sparse containers: tuple lists (COO), compressed rows/columns (CSR/CSC)
//! and sparse vectors.
//!
//! Indices are 0-based. Entry `(i, j)` of an adjacency matrix is the edge
//! `i -> j`, so reducing along rows gives out-degrees.

mod compressed;
mod coo;
mod vector;

pub use compressed::CompressedMatrix;
pub use coo::{CooMatrix, Triple};
pub use vector::SparseVector;

use crate::domain::Scalar;
use std::hash::Hasher;

/// Which dimension a [`CompressedMatrix`] is compressed along.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Orientation {
    /// Compressed sparse rows: offsets index rows, minor indices are columns.
    Csr,
    /// Compressed sparse columns: offsets index columns, minor indices are rows.
    Csc,
}

impl Orientation {
    pub fn flipped(self) -> Self {
        match self {
            Orientation::Csr => Orientation::Csc,
            Orientation::Csc => Orientation::Csr,
        }
    }
}

/// Metadata carried alongside a matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct MatrixDescriptor {
    /// Marks an undirected graph. Symmetric matrices are stored fully
    /// expanded; the flag itself is never trusted by kernels.
    pub symmetric: bool,
}

/// Selects rows or columns for [`reduce`](crate::kernels::reduce) and
/// [`scale_matrix`](crate::kernels::scale_matrix).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Axis {
    Rows,
    Cols,
}

/// FNV-1a over a stream of words; structural fingerprints only need to be
/// stable within one process.
pub(crate) struct Fingerprint(u64);

impl Fingerprint {
    pub(crate) fn new() -> Self {
        Fingerprint(0xcbf2_9ce4_8422_2325)
    }

    pub(crate) fn value<T: Scalar>(&mut self, v: &T) {
        v.hash_bits(self)
    }
}

impl Hasher for Fingerprint {
    fn finish(&self) -> u64 {
        self.0
    }

    fn write(&mut self, bytes: &[u8]) {
        for &b in bytes {
            self.0 ^= b as u64;
            self.0 = self.0.wrapping_mul(0x0100_0000_01b3);
        }
    }
}

/// Checks that `indices` is strictly increasing with every entry `< bound`.
pub(crate) fn check_sorted_unique(indices: &[usize], bound: usize) -> Result<(), String> {
    for (k, &i) in indices.iter().enumerate() {
        if i >= bound {
            return Err(format!("index {i} at position {k} is not below {bound}"));
        }
        if k > 0 && indices[k - 1] >= i {
            return Err(format!("indices not strictly increasing at position {k}"));
        }
    }
    Ok(())
}
