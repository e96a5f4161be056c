use super::{assemble, scatter};
use crate::algebra::BinaryOp;
use crate::domain::Scalar;
use crate::error::{Error, Result};
use crate::sparse::{Axis, CompressedMatrix, Orientation, SparseVector};

/// Intersection-patterned `C(i, j) = op(A(i, j), B(i, j))`, kept in A's
/// orientation.
pub fn ewise_mult<T: Scalar>(
    a: &CompressedMatrix<T>,
    b: &CompressedMatrix<T>,
    op: &BinaryOp<T>,
) -> Result<CompressedMatrix<T>> {
    if a.dims() != b.dims() {
        return Err(Error::dims(format!(
            "ewise_mult: {}x{} vs {}x{}",
            a.nrows(),
            a.ncols(),
            b.nrows(),
            b.ncols()
        )));
    }
    let b = b.in_orientation(a.orientation());
    let lanes = (0..a.major_dim())
        .map(|k| {
            let (ai, av) = a.raw_lane(k);
            let (bi, bv) = b.raw_lane(k);
            intersect(ai, av, bi, bv, op)
        })
        .collect();
    Ok(assemble(a.nrows(), a.ncols(), a.orientation(), lanes))
}

/// `v ∩ w` with value `op(v(i), w(i))`. With a boolean `∧` this is masking.
pub fn scale_vector<T: Scalar>(
    v: &SparseVector<T>,
    w: &SparseVector<T>,
    op: &BinaryOp<T>,
) -> Result<SparseVector<T>> {
    if v.len() != w.len() {
        return Err(Error::dims(format!(
            "scale_vector: lengths {} and {}",
            v.len(),
            w.len()
        )));
    }
    let (idx, vals) = intersect(v.indices(), v.values(), w.indices(), w.values(), op);
    SparseVector::from_entries(v.len(), idx.into_iter().zip(vals))
}

/// Multiplies every entry by a per-row (`Axis::Rows`, factor `d(i)`) or
/// per-column (`Axis::Cols`, factor `d(j)`) factor: `op(A(i, j), factor)`.
/// Entries whose factor is absent from `d` are dropped.
pub fn scale_matrix<T: Scalar>(
    a: &CompressedMatrix<T>,
    d: &SparseVector<T>,
    op: &BinaryOp<T>,
    axis: Axis,
) -> Result<CompressedMatrix<T>> {
    let expected = match axis {
        Axis::Rows => a.nrows(),
        Axis::Cols => a.ncols(),
    };
    if d.len() != expected {
        return Err(Error::dims(format!(
            "scale_matrix: {axis:?} scaling of a {}x{} matrix needs length {expected}, got {}",
            a.nrows(),
            a.ncols(),
            d.len()
        )));
    }
    let factors = scatter(d.len(), d.iter());
    // Whether the factor is indexed by the lane or by the minor index.
    let by_lane = matches!(
        (a.orientation(), axis),
        (Orientation::Csr, Axis::Rows) | (Orientation::Csc, Axis::Cols)
    );
    let lanes = (0..a.major_dim())
        .map(|k| {
            let (idx, vals) = a.raw_lane(k);
            let mut out_i = Vec::with_capacity(idx.len());
            let mut out_v = Vec::with_capacity(idx.len());
            for (&m, &x) in idx.iter().zip(vals) {
                let f = if by_lane { factors[k] } else { factors[m] };
                if let Some(f) = f {
                    out_i.push(m);
                    out_v.push(op.eval(x, f));
                }
            }
            (out_i, out_v)
        })
        .collect();
    Ok(assemble(a.nrows(), a.ncols(), a.orientation(), lanes))
}

fn intersect<T: Scalar>(
    ai: &[usize],
    av: &[T],
    bi: &[usize],
    bv: &[T],
    op: &BinaryOp<T>,
) -> (Vec<usize>, Vec<T>) {
    let mut idx = Vec::new();
    let mut vals = Vec::new();
    let (mut p, mut q) = (0, 0);
    while p < ai.len() && q < bi.len() {
        match ai[p].cmp(&bi[q]) {
            std::cmp::Ordering::Less => p += 1,
            std::cmp::Ordering::Greater => q += 1,
            std::cmp::Ordering::Equal => {
                idx.push(ai[p]);
                vals.push(op.eval(av[p], bv[q]));
                p += 1;
                q += 1;
            }
        }
    }
    (idx, vals)
}
