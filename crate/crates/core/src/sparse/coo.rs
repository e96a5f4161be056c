use super::{CompressedMatrix, MatrixDescriptor, Orientation};
use crate::algebra::Monoid;
use crate::domain::Scalar;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Triple<T> {
    pub row: usize,
    pub col: usize,
    pub val: T,
}

impl<T> Triple<T> {
    pub fn new(row: usize, col: usize, val: T) -> Self {
        Triple { row, col, val }
    }
}

impl<T> From<(usize, usize, T)> for Triple<T> {
    fn from((row, col, val): (usize, usize, T)) -> Self {
        Triple { row, col, val }
    }
}

/// A finalized tuple list: triples sorted by `(row, col)` without duplicates.
#[derive(Debug, Clone, PartialEq)]
pub struct CooMatrix<T> {
    nrows: usize,
    ncols: usize,
    triples: Vec<Triple<T>>,
    descriptor: MatrixDescriptor,
}

impl<T: Scalar> CooMatrix<T> {
    pub fn empty(nrows: usize, ncols: usize) -> Self {
        CooMatrix {
            nrows,
            ncols,
            triples: Vec::new(),
            descriptor: MatrixDescriptor::default(),
        }
    }

    /// Builds a finalized matrix from triples in any order. Entries sharing a
    /// position are folded left to right, in input order, with `dup`.
    pub fn build_from_triples<I>(nrows: usize, ncols: usize, triples: I, dup: &Monoid<T>) -> Result<Self>
    where
        I: IntoIterator,
        I::Item: Into<Triple<T>>,
    {
        let mut triples: Vec<Triple<T>> = triples.into_iter().map(Into::into).collect();
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
        // Stable, so duplicates keep their input order for the fold.
        triples.sort_by_key(|t| (t.row, t.col));
        let mut merged: Vec<Triple<T>> = Vec::with_capacity(triples.len());
        for t in triples {
            match merged.last_mut() {
                Some(last) if last.row == t.row && last.col == t.col => {
                    last.val = dup.eval(last.val, t.val);
                }
                _ => merged.push(t),
            }
        }
        Ok(CooMatrix {
            nrows,
            ncols,
            triples: merged,
            descriptor: MatrixDescriptor::default(),
        })
    }

    /// Wraps triples that are already sorted and duplicate-free.
    pub fn from_sorted_triples(nrows: usize, ncols: usize, triples: Vec<Triple<T>>) -> Result<Self> {
        let m = CooMatrix {
            nrows,
            ncols,
            triples,
            descriptor: MatrixDescriptor::default(),
        };
        m.validate()?;
        Ok(m)
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
        self.triples.len()
    }

    pub fn triples(&self) -> &[Triple<T>] {
        &self.triples
    }

    pub fn into_triples(self) -> Vec<Triple<T>> {
        self.triples
    }

    pub fn descriptor(&self) -> MatrixDescriptor {
        self.descriptor
    }

    pub fn with_descriptor(mut self, descriptor: MatrixDescriptor) -> Self {
        self.descriptor = descriptor;
        self
    }

    pub fn get(&self, row: usize, col: usize) -> Option<T> {
        self.triples
            .binary_search_by_key(&(row, col), |t| (t.row, t.col))
            .ok()
            .map(|k| self.triples[k].val)
    }

    /// Asserts the finalized-form invariants.
    pub fn validate(&self) -> Result<()> {
        for (k, t) in self.triples.iter().enumerate() {
            if t.row >= self.nrows || t.col >= self.ncols {
                return Err(Error::TripleOutOfRange {
                    position: k,
                    row: t.row,
                    col: t.col,
                    nrows: self.nrows,
                    ncols: self.ncols,
                });
            }
            if k > 0 {
                let prev = &self.triples[k - 1];
                if (prev.row, prev.col) >= (t.row, t.col) {
                    return Err(Error::InvalidStructure(format!(
                        "triple {k} at ({}, {}) is out of order or duplicated",
                        t.row, t.col
                    )));
                }
            }
        }
        if self.descriptor.symmetric && self.nrows != self.ncols {
            return Err(Error::InvalidStructure("symmetric flag on a non-square matrix".into()));
        }
        Ok(())
    }

    pub fn to_compressed(&self, orientation: Orientation) -> CompressedMatrix<T> {
        let major_dim = match orientation {
            Orientation::Csr => self.nrows,
            Orientation::Csc => self.ncols,
        };
        let key = |t: &Triple<T>| match orientation {
            Orientation::Csr => (t.row, t.col),
            Orientation::Csc => (t.col, t.row),
        };
        let mut offsets = vec![0usize; major_dim + 1];
        for t in &self.triples {
            offsets[key(t).0 + 1] += 1;
        }
        for k in 0..major_dim {
            offsets[k + 1] += offsets[k];
        }
        let nnz = self.triples.len();
        let mut indices = vec![0usize; nnz];
        let mut values: Vec<Option<T>> = vec![None; nnz];
        let mut next = offsets.clone();
        // Triples are row-major, so each column fills in increasing row order.
        for t in &self.triples {
            let (major, minor) = key(t);
            let slot = next[major];
            next[major] += 1;
            indices[slot] = minor;
            values[slot] = Some(t.val);
        }
        let values = values.into_iter().map(|v| v.expect("every slot is filled")).collect();
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
}
