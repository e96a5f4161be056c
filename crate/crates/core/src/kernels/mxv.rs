use super::mxm::Accumulator;
use super::scatter;
use crate::algebra::Semiring;
use crate::domain::Scalar;
use crate::error::{Error, Result};
use crate::sparse::{CompressedMatrix, Orientation, SparseVector};

/// `w(i) = ⊕_j A'(i, j) ⊗ v(j)` where `A'` is `A`, or `Aᵀ` when `transpose`
/// is set. With the row-is-source convention, `transpose = true` advances a
/// frontier `v` to its successors.
///
/// Products are always formed as `A-value ⊗ v-value` and accumulated in
/// increasing `j`.
pub fn mxv<T: Scalar>(
    a: &CompressedMatrix<T>,
    v: &SparseVector<T>,
    s: &Semiring<T>,
    transpose: bool,
) -> Result<SparseVector<T>> {
    let (out_len, in_len) = if transpose {
        (a.ncols(), a.nrows())
    } else {
        (a.nrows(), a.ncols())
    };
    if v.len() != in_len {
        return Err(Error::dims(format!(
            "mxv: effective matrix is {out_len}x{in_len}, vector has length {}",
            v.len()
        )));
    }
    let zero = s.zero();
    // Output indices are the major dimension exactly when the lanes of the
    // stored orientation are the rows of A'.
    let pull = matches!(
        (a.orientation(), transpose),
        (Orientation::Csr, false) | (Orientation::Csc, true)
    );
    if pull {
        let dense = scatter(v.len(), v.iter());
        let mut out = Vec::new();
        for i in 0..out_len {
            let (idx, vals) = a.raw_lane(i);
            let mut acc: Option<T> = None;
            for (&j, &aij) in idx.iter().zip(vals) {
                if let Some(x) = dense[j] {
                    let p = s.mul(aij, x);
                    acc = Some(match acc {
                        Some(sum) => s.add(sum, p),
                        None => p,
                    });
                }
            }
            if let Some(w) = acc.filter(|w| *w != zero) {
                out.push((i, w));
            }
        }
        SparseVector::from_entries(out_len, out)
    } else {
        let mut acc = Accumulator::new(out_len, zero);
        for (j, x) in v.iter() {
            let (idx, vals) = a.raw_lane(j);
            for (&i, &aji) in idx.iter().zip(vals) {
                acc.accumulate(0, i, s.mul(aji, x), s);
            }
        }
        let (idx, vals) = acc.drain(zero);
        SparseVector::from_entries(out_len, idx.into_iter().zip(vals))
    }
}
