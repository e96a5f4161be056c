use crate::algebra::{Monoid, Semiring};
use crate::domain::Scalar;
use crate::error::{Error, Result};
use crate::sparse::{Axis, CompressedMatrix};

/// Row-major dense matrix; positions not stored in the sparse source hold
/// `fill`, the ambient semiring's 0̄.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseMatrix<T> {
    pub nrows: usize,
    pub ncols: usize,
    pub fill: T,
    pub values: Vec<T>,
}

impl<T: Scalar> DenseMatrix<T> {
    pub fn filled(nrows: usize, ncols: usize, fill: T) -> Self {
        DenseMatrix {
            nrows,
            ncols,
            fill,
            values: vec![fill; nrows * ncols],
        }
    }

    pub fn from_sparse(a: &CompressedMatrix<T>, fill: T) -> Self {
        let mut d = Self::filled(a.nrows(), a.ncols(), fill);
        for (i, j, v) in a.iter() {
            d.values[i * a.ncols() + j] = v;
        }
        d
    }

    /// CSR matrix of every position whose value differs from `fill`.
    pub fn to_sparse(&self) -> CompressedMatrix<T> {
        let mut entries = Vec::new();
        for i in 0..self.nrows {
            for j in 0..self.ncols {
                let v = self.get(i, j);
                if v != self.fill {
                    entries.push((i, j, v));
                }
            }
        }
        CompressedMatrix::from_entries(self.nrows, self.ncols, entries).expect("row-major order")
    }

    pub fn get(&self, i: usize, j: usize) -> T {
        self.values[i * self.ncols + j]
    }

    fn set(&mut self, i: usize, j: usize, v: T) {
        self.values[i * self.ncols + j] = v;
    }
}

/// `C(i, j) = ⊕_k A(i, k) ⊗ B(k, j)` over every `k`, folded from 0̄.
pub fn dense_mxm<T: Scalar>(a: &DenseMatrix<T>, b: &DenseMatrix<T>, s: &Semiring<T>) -> Result<DenseMatrix<T>> {
    if a.ncols != b.nrows {
        return Err(Error::DimensionMismatch(format!(
            "dense_mxm: {}x{} times {}x{}",
            a.nrows, a.ncols, b.nrows, b.ncols
        )));
    }
    let mut c = DenseMatrix::filled(a.nrows, b.ncols, s.zero());
    for i in 0..a.nrows {
        for j in 0..b.ncols {
            let mut acc = s.zero();
            for k in 0..a.ncols {
                acc = s.add(acc, s.mul(a.get(i, k), b.get(k, j)));
            }
            c.set(i, j, acc);
        }
    }
    Ok(c)
}

/// `w(i) = ⊕_j A'(i, j) ⊗ v(j)`, with `A' = Aᵀ` when `transpose` is set.
pub fn dense_mxv<T: Scalar>(a: &DenseMatrix<T>, v: &[T], s: &Semiring<T>, transpose: bool) -> Result<Vec<T>> {
    let (rows, cols) = if transpose { (a.ncols, a.nrows) } else { (a.nrows, a.ncols) };
    if v.len() != cols {
        return Err(Error::DimensionMismatch(format!(
            "dense_mxv: {rows}x{cols} times vector of length {}",
            v.len()
        )));
    }
    let at = |i: usize, j: usize| if transpose { a.get(j, i) } else { a.get(i, j) };
    Ok((0..rows)
        .map(|i| (0..cols).fold(s.zero(), |acc, j| s.add(acc, s.mul(at(i, j), v[j]))))
        .collect())
}

/// `C(i, j) = A(i, j) ⊗ B(i, j)` at every position.
pub fn dense_ewise<T: Scalar>(a: &DenseMatrix<T>, b: &DenseMatrix<T>, s: &Semiring<T>) -> Result<DenseMatrix<T>> {
    if (a.nrows, a.ncols) != (b.nrows, b.ncols) {
        return Err(Error::DimensionMismatch(format!(
            "dense_ewise: {}x{} and {}x{}",
            a.nrows, a.ncols, b.nrows, b.ncols
        )));
    }
    let mut c = DenseMatrix::filled(a.nrows, a.ncols, s.zero());
    for (k, out) in c.values.iter_mut().enumerate() {
        *out = s.mul(a.values[k], b.values[k]);
    }
    Ok(c)
}

/// Fold of every row (`Axis::Rows`) or column with `m`, in index order.
pub fn dense_reduce<T: Scalar>(a: &DenseMatrix<T>, m: &Monoid<T>, axis: Axis) -> Vec<T> {
    match axis {
        Axis::Rows => (0..a.nrows)
            .map(|i| (0..a.ncols).fold(m.identity(), |acc, j| m.eval(acc, a.get(i, j))))
            .collect(),
        Axis::Cols => (0..a.ncols)
            .map(|j| (0..a.nrows).fold(m.identity(), |acc, i| m.eval(acc, a.get(i, j))))
            .collect(),
    }
}
