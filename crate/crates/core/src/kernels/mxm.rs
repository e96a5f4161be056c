//! Row-wise Gustavson SpGEMM with a sparse accumulator.

use super::{assemble, UNSET};
use crate::algebra::Semiring;
use crate::domain::Scalar;
use crate::error::{Error, Result};
use crate::sparse::{CompressedMatrix, Orientation};
use rayon::prelude::*;

/// Below this many stored entries across both operands rows run sequentially.
const PARALLEL_THRESHOLD: usize = 1 << 14;

/// `C(i, k) = ⊕_j A(i, j) ⊗ B(j, k)`, returned in CSR.
///
/// Each row accumulates its products in the order of A's row entries, then
/// B's row entries; parallel execution computes rows independently and so is
/// bit-identical to the sequential order.
pub fn mxm<T: Scalar>(
    a: &CompressedMatrix<T>,
    b: &CompressedMatrix<T>,
    s: &Semiring<T>,
) -> Result<CompressedMatrix<T>> {
    if a.ncols() != b.nrows() {
        return Err(Error::dims(format!(
            "mxm: A is {}x{}, B is {}x{}",
            a.nrows(),
            a.ncols(),
            b.nrows(),
            b.ncols()
        )));
    }
    let a = a.in_orientation(Orientation::Csr);
    let b = b.in_orientation(Orientation::Csr);
    let ncols = b.ncols();

    let row = |acc: &mut Accumulator<T>, i: usize| {
        let (a_idx, a_vals) = a.raw_lane(i);
        for (&j, &aij) in a_idx.iter().zip(a_vals) {
            let (b_idx, b_vals) = b.raw_lane(j);
            for (&k, &bjk) in b_idx.iter().zip(b_vals) {
                acc.accumulate(i, k, s.mul(aij, bjk), s);
            }
        }
        acc.drain(s.zero())
    };

    let lanes: Vec<(Vec<usize>, Vec<T>)> = if a.nvals() + b.nvals() < PARALLEL_THRESHOLD {
        let mut acc = Accumulator::new(ncols, s.zero());
        (0..a.nrows()).map(|i| row(&mut acc, i)).collect()
    } else {
        (0..a.nrows())
            .into_par_iter()
            .map_init(|| Accumulator::new(ncols, s.zero()), row)
            .collect()
    };
    Ok(assemble(a.nrows(), ncols, Orientation::Csr, lanes))
}

/// Dense values plus an occupancy stamp per column and the list of columns
/// touched by the current row.
pub(crate) struct Accumulator<T> {
    values: Vec<T>,
    stamp: Vec<usize>,
    touched: Vec<usize>,
}

impl<T: Scalar> Accumulator<T> {
    pub(crate) fn new(width: usize, fill: T) -> Self {
        Accumulator {
            values: vec![fill; width],
            stamp: vec![UNSET; width],
            touched: Vec::new(),
        }
    }

    #[inline]
    pub(crate) fn accumulate(&mut self, owner: usize, k: usize, x: T, s: &Semiring<T>) {
        if self.stamp[k] == owner {
            self.values[k] = s.add(self.values[k], x);
        } else {
            self.stamp[k] = owner;
            self.values[k] = x;
            self.touched.push(k);
        }
    }

    /// Sorted non-0̄ entries of the current row; resets the touched list.
    pub(crate) fn drain(&mut self, zero: T) -> (Vec<usize>, Vec<T>) {
        self.touched.sort_unstable();
        let mut idx = Vec::with_capacity(self.touched.len());
        let mut vals = Vec::with_capacity(self.touched.len());
        for &k in &self.touched {
            let v = self.values[k];
            if v != zero {
                idx.push(k);
                vals.push(v);
            }
            self.stamp[k] = UNSET;
        }
        self.touched.clear();
        (idx, vals)
    }
}
