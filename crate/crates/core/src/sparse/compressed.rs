use super::{check_sorted_unique, CooMatrix, Fingerprint, MatrixDescriptor, Orientation, Triple};
use crate::domain::Scalar;
use crate::error::{Error, Result};
use std::borrow::Cow;
use std::hash::Hasher;

/// CSR or CSC storage.
///
/// `offsets` has one slot per major index plus one; lane `k` occupies
/// `offsets[k]..offsets[k + 1]` of `indices`/`values`, with minor indices
/// strictly increasing inside every lane.
#[derive(Debug, Clone, PartialEq)]
pub struct CompressedMatrix<T> {
    nrows: usize,
    ncols: usize,
    orientation: Orientation,
    offsets: Vec<usize>,
    indices: Vec<usize>,
    values: Vec<T>,
    descriptor: MatrixDescriptor,
}

impl<T: Scalar> CompressedMatrix<T> {
    /// Assembles a matrix from its arrays, validating every invariant.
    pub fn from_raw_parts(
        nrows: usize,
        ncols: usize,
        orientation: Orientation,
        offsets: Vec<usize>,
        indices: Vec<usize>,
        values: Vec<T>,
    ) -> Result<Self> {
        let m = CompressedMatrix {
            nrows,
            ncols,
            orientation,
            offsets,
            indices,
            values,
            descriptor: MatrixDescriptor::default(),
        };
        m.validate()?;
        Ok(m)
    }

    pub(crate) fn from_parts_unchecked(
        nrows: usize,
        ncols: usize,
        orientation: Orientation,
        offsets: Vec<usize>,
        indices: Vec<usize>,
        values: Vec<T>,
        descriptor: MatrixDescriptor,
    ) -> Self {
        let m = CompressedMatrix {
            nrows,
            ncols,
            orientation,
            offsets,
            indices,
            values,
            descriptor,
        };
        debug_assert!(m.validate().is_ok(), "{:?}", m.validate());
        m
    }

    pub fn empty(nrows: usize, ncols: usize, orientation: Orientation) -> Self {
        let major = match orientation {
            Orientation::Csr => nrows,
            Orientation::Csc => ncols,
        };
        CompressedMatrix::from_parts_unchecked(
            nrows,
            ncols,
            orientation,
            vec![0; major + 1],
            Vec::new(),
            Vec::new(),
            MatrixDescriptor::default(),
        )
    }

    /// `n x n` matrix with `value` on the diagonal.
    pub fn diagonal(n: usize, value: T) -> Self {
        CompressedMatrix::from_parts_unchecked(
            n,
            n,
            Orientation::Csr,
            (0..=n).collect(),
            (0..n).collect(),
            vec![value; n],
            MatrixDescriptor { symmetric: true },
        )
    }

    /// CSR matrix from `(row, col, value)` entries in any order. Repeated
    /// positions are rejected.
    pub fn from_entries<I>(nrows: usize, ncols: usize, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, T)>,
    {
        let mut triples: Vec<Triple<T>> = entries.into_iter().map(Triple::from).collect();
        for (position, t) in triples.iter().enumerate() {
            if t.row >= nrows || t.col >= ncols {
                return Err(Error::TripleOutOfRange {
                    position,
                    row: t.row,
                    col: t.col,
                    nrows,
                    ncols,
                });
            }
        }
        triples.sort_by_key(|t| (t.row, t.col));
        if let Some(w) = triples.windows(2).find(|w| (w[0].row, w[0].col) == (w[1].row, w[1].col)) {
            return Err(Error::InvalidStructure(format!(
                "repeated entry at ({}, {})",
                w[0].row, w[0].col
            )));
        }
        Ok(CooMatrix::from_sorted_triples(nrows, ncols, triples)?.to_compressed(Orientation::Csr))
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.nrows, self.ncols)
    }

    pub fn nvals(&self) -> usize {
        self.indices.len()
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    pub fn descriptor(&self) -> MatrixDescriptor {
        self.descriptor
    }

    pub fn with_descriptor(mut self, descriptor: MatrixDescriptor) -> Self {
        self.descriptor = descriptor;
        self
    }

    pub fn raw_offsets(&self) -> &[usize] {
        &self.offsets
    }

    pub fn raw_indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn raw_values(&self) -> &[T] {
        &self.values
    }

    pub(crate) fn major_dim(&self) -> usize {
        self.offsets.len() - 1
    }

    pub(crate) fn minor_dim(&self) -> usize {
        match self.orientation {
            Orientation::Csr => self.ncols,
            Orientation::Csc => self.nrows,
        }
    }

    /// Minor indices and values of major lane `k`.
    #[inline]
    pub(crate) fn raw_lane(&self, k: usize) -> (&[usize], &[T]) {
        let r = self.offsets[k]..self.offsets[k + 1];
        (&self.indices[r.clone()], &self.values[r])
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidStructure(msg));
        let major = match self.orientation {
            Orientation::Csr => self.nrows,
            Orientation::Csc => self.ncols,
        };
        if self.offsets.len() != major + 1 {
            return bad(format!("offsets has length {}, expected {}", self.offsets.len(), major + 1));
        }
        if self.offsets[0] != 0 || self.offsets[major] != self.indices.len() {
            return bad("offsets must start at 0 and end at nnz".into());
        }
        if self.values.len() != self.indices.len() {
            return bad("values and indices differ in length".into());
        }
        if self.offsets.windows(2).any(|w| w[0] > w[1]) {
            return bad("offsets decrease".into());
        }
        for k in 0..major {
            let (idx, _) = self.raw_lane(k);
            if let Err(msg) = check_sorted_unique(idx, self.minor_dim()) {
                return bad(format!("lane {k}: {msg}"));
            }
        }
        if self.descriptor.symmetric && self.nrows != self.ncols {
            return bad("symmetric flag on a non-square matrix".into());
        }
        Ok(())
    }

    /// Entries as `(row, col, value)` in storage order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, T)> + '_ {
        let orientation = self.orientation;
        (0..self.major_dim()).flat_map(move |k| {
            let (idx, vals) = self.raw_lane(k);
            idx.iter().zip(vals).map(move |(&m, &v)| match orientation {
                Orientation::Csr => (k, m, v),
                Orientation::Csc => (m, k, v),
            })
        })
    }

    pub fn get(&self, row: usize, col: usize) -> Option<T> {
        if row >= self.nrows || col >= self.ncols {
            return None;
        }
        let (major, minor) = match self.orientation {
            Orientation::Csr => (row, col),
            Orientation::Csc => (col, row),
        };
        let (idx, vals) = self.raw_lane(major);
        idx.binary_search(&minor).ok().map(|p| vals[p])
    }

    pub fn to_tuples(&self) -> CooMatrix<T> {
        let mut triples: Vec<Triple<T>> = self.iter().map(Triple::from).collect();
        if self.orientation == Orientation::Csc {
            triples.sort_by_key(|t| (t.row, t.col));
        }
        CooMatrix::from_sorted_triples(self.nrows, self.ncols, triples)
            .expect("a valid compressed matrix yields finalized triples")
            .with_descriptor(self.descriptor)
    }

    /// Same entries stored with the other compression.
    pub fn reorient(&self, orientation: Orientation) -> Self {
        if orientation == self.orientation {
            return self.clone();
        }
        let (offsets, indices, values) = self.swap_major_minor();
        CompressedMatrix::from_parts_unchecked(
            self.nrows,
            self.ncols,
            orientation,
            offsets,
            indices,
            values,
            self.descriptor,
        )
    }

    pub(crate) fn in_orientation(&self, orientation: Orientation) -> Cow<'_, Self> {
        if orientation == self.orientation {
            Cow::Borrowed(self)
        } else {
            Cow::Owned(self.reorient(orientation))
        }
    }

    pub fn transpose(&self) -> Self {
        // The other compression of A, read with dimensions swapped, is Aᵀ.
        let (offsets, indices, values) = self.swap_major_minor();
        CompressedMatrix::from_parts_unchecked(
            self.ncols,
            self.nrows,
            self.orientation,
            offsets,
            indices,
            values,
            self.descriptor,
        )
    }

    /// Counting-sort transposition of the storage arrays.
    fn swap_major_minor(&self) -> (Vec<usize>, Vec<usize>, Vec<T>) {
        let minor_dim = self.minor_dim();
        let mut offsets = vec![0usize; minor_dim + 1];
        for &m in &self.indices {
            offsets[m + 1] += 1;
        }
        for k in 0..minor_dim {
            offsets[k + 1] += offsets[k];
        }
        let nnz = self.nvals();
        let mut indices = vec![0usize; nnz];
        let mut values: Vec<Option<T>> = vec![None; nnz];
        let mut next = offsets.clone();
        for k in 0..self.major_dim() {
            let (idx, vals) = self.raw_lane(k);
            for (&m, &v) in idx.iter().zip(vals) {
                let slot = next[m];
                next[m] += 1;
                indices[slot] = k;
                values[slot] = Some(v);
            }
        }
        let values = values.into_iter().map(|v| v.expect("every slot is filled")).collect();
        (offsets, indices, values)
    }

    /// True iff `A(i, j) == A(j, i)` for every position, pattern and value.
    pub fn is_symmetric(&self) -> Result<bool> {
        if self.nrows != self.ncols {
            return Err(Error::NonSquare {
                nrows: self.nrows,
                ncols: self.ncols,
            });
        }
        let t = self.transpose();
        Ok(t.offsets == self.offsets && t.indices == self.indices && t.values == self.values)
    }

    /// Hash of dimensions, orientation, descriptor, arrays and value bits.
    pub fn fingerprint(&self) -> u64 {
        let mut h = Fingerprint::new();
        h.write_usize(self.nrows);
        h.write_usize(self.ncols);
        h.write_u8(self.orientation as u8);
        h.write_u8(self.descriptor.symmetric as u8);
        for &o in &self.offsets {
            h.write_usize(o);
        }
        for &i in &self.indices {
            h.write_usize(i);
        }
        for v in &self.values {
            h.value(v);
        }
        h.finish()
    }
}
