use super::{check_sorted_unique, CompressedMatrix, Fingerprint, MatrixDescriptor, Orientation};
use crate::domain::Scalar;
use crate::error::{Error, Result};
use std::hash::Hasher;

/// Sparse vector: strictly increasing indices, each below `len`.
#[derive(Debug, Clone, PartialEq)]
pub struct SparseVector<T> {
    len: usize,
    indices: Vec<usize>,
    values: Vec<T>,
}

impl<T: Scalar> SparseVector<T> {
    pub fn empty(len: usize) -> Self {
        SparseVector {
            len,
            indices: Vec::new(),
            values: Vec::new(),
        }
    }

    /// Entries given in strictly increasing index order.
    pub fn from_entries<I>(len: usize, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, T)>,
    {
        let (indices, values): (Vec<usize>, Vec<T>) = entries.into_iter().unzip();
        check_sorted_unique(&indices, len).map_err(Error::InvalidStructure)?;
        Ok(SparseVector { len, indices, values })
    }

    /// Entries in any order; a repeated index is an error.
    pub fn from_unsorted<I>(len: usize, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, T)>,
    {
        let mut entries: Vec<(usize, T)> = entries.into_iter().collect();
        entries.sort_by_key(|e| e.0);
        if let Some(w) = entries.windows(2).find(|w| w[0].0 == w[1].0) {
            return Err(Error::DuplicateIndex(w[0].0));
        }
        if let Some(&(i, _)) = entries.iter().find(|e| e.0 >= len) {
            return Err(Error::IndexOutOfRange { index: i, bound: len });
        }
        Ok(SparseVector {
            len,
            indices: entries.iter().map(|e| e.0).collect(),
            values: entries.iter().map(|e| e.1).collect(),
        })
    }

    /// Every position stored.
    pub fn from_dense(values: &[T]) -> Self {
        SparseVector {
            len: values.len(),
            indices: (0..values.len()).collect(),
            values: values.to_vec(),
        }
    }

    pub fn full(len: usize, value: T) -> Self {
        SparseVector {
            len,
            indices: (0..len).collect(),
            values: vec![value; len],
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn nvals(&self) -> usize {
        self.indices.len()
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    pub fn get(&self, index: usize) -> Option<T> {
        self.indices.binary_search(&index).ok().map(|p| self.values[p])
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, T)> + '_ {
        self.indices.iter().copied().zip(self.values.iter().copied())
    }

    /// Dense copy with `fill` at unstored positions.
    pub fn to_dense(&self, fill: T) -> Vec<T> {
        let mut out = vec![fill; self.len];
        for (i, v) in self.iter() {
            out[i] = v;
        }
        out
    }

    /// Vector storing `fill` exactly where `self` stores nothing.
    pub fn structural_complement<U: Scalar>(&self, fill: U) -> SparseVector<U> {
        let mut indices = Vec::with_capacity(self.len - self.nvals());
        let mut stored = self.indices.iter().peekable();
        for i in 0..self.len {
            if stored.peek() == Some(&&i) {
                stored.next();
            } else {
                indices.push(i);
            }
        }
        let values = vec![fill; indices.len()];
        SparseVector {
            len: self.len,
            indices,
            values,
        }
    }

    /// `len x 1` matrix holding the same entries.
    pub fn to_column(&self) -> CompressedMatrix<T> {
        CompressedMatrix::from_parts_unchecked(
            self.len,
            1,
            Orientation::Csc,
            vec![0, self.nvals()],
            self.indices.clone(),
            self.values.clone(),
            MatrixDescriptor::default(),
        )
    }

    /// Inverse of [`to_column`](Self::to_column); `m` must have one column.
    pub fn from_column(m: &CompressedMatrix<T>) -> Result<Self> {
        if m.ncols() != 1 {
            return Err(Error::dims(format!("expected one column, found {}", m.ncols())));
        }
        let col = m.in_orientation(Orientation::Csc);
        let (idx, vals) = col.raw_lane(0);
        Ok(SparseVector {
            len: m.nrows(),
            indices: idx.to_vec(),
            values: vals.to_vec(),
        })
    }

    pub fn validate(&self) -> Result<()> {
        if self.indices.len() != self.values.len() {
            return Err(Error::InvalidStructure("values and indices differ in length".into()));
        }
        check_sorted_unique(&self.indices, self.len).map_err(Error::InvalidStructure)
    }

    pub fn fingerprint(&self) -> u64 {
        let mut h = Fingerprint::new();
        h.write_usize(self.len);
        for &i in &self.indices {
            h.write_usize(i);
        }
        for v in &self.values {
            h.value(v);
        }
        h.finish()
    }
}
