use crate::algebra::Monoid;
use crate::domain::Scalar;
use crate::error::Result;
use crate::sparse::{Axis, CompressedMatrix, Orientation, SparseVector};

/// Folds each row (`Axis::Rows`, result length `nrows`) or column
/// (`Axis::Cols`, length `ncols`) with `m`, in increasing index order.
/// Empty slices and folds equal to the identity produce no entry.
pub fn reduce<T: Scalar>(a: &CompressedMatrix<T>, m: &Monoid<T>, axis: Axis) -> Result<SparseVector<T>> {
    let len = match axis {
        Axis::Rows => a.nrows(),
        Axis::Cols => a.ncols(),
    };
    let along_lanes = matches!(
        (a.orientation(), axis),
        (Orientation::Csr, Axis::Rows) | (Orientation::Csc, Axis::Cols)
    );
    let mut folded: Vec<Option<T>> = vec![None; len];
    if along_lanes {
        for (k, slot) in folded.iter_mut().enumerate() {
            let (_, vals) = a.raw_lane(k);
            *slot = vals.iter().copied().reduce(|x, y| m.eval(x, y));
        }
    } else {
        // Lanes are visited in increasing order, so each fold is too.
        for k in 0..a.major_dim() {
            let (idx, vals) = a.raw_lane(k);
            for (&i, &v) in idx.iter().zip(vals) {
                folded[i] = Some(match folded[i] {
                    Some(acc) => m.eval(acc, v),
                    None => v,
                });
            }
        }
    }
    let identity = m.identity();
    let entries = folded
        .into_iter()
        .enumerate()
        .filter_map(|(i, v)| v.filter(|v| *v != identity).map(|v| (i, v)));
    SparseVector::from_entries(len, entries)
}
