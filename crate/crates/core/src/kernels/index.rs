use super::{assemble, index_map, UNSET};
use crate::domain::Scalar;
use crate::error::{Error, Result};
use crate::sparse::{CompressedMatrix, Orientation};

/// `B(p, q) = A(rows[p], cols[q])`. Lists may be in any order, which makes
/// this a relabeling primitive as well as sub-graph selection.
pub fn subref<T: Scalar>(a: &CompressedMatrix<T>, rows: &[usize], cols: &[usize]) -> Result<CompressedMatrix<T>> {
    index_map(rows, a.nrows())?;
    let col_map = index_map(cols, a.ncols())?;
    let a = a.in_orientation(Orientation::Csr);
    let lanes = rows
        .iter()
        .map(|&r| {
            let (idx, vals) = a.raw_lane(r);
            let mut picked: Vec<(usize, T)> = idx
                .iter()
                .zip(vals)
                .filter(|(&j, _)| col_map[j] != UNSET)
                .map(|(&j, &v)| (col_map[j], v))
                .collect();
            picked.sort_unstable_by_key(|e| e.0);
            picked.into_iter().unzip()
        })
        .collect();
    Ok(assemble(rows.len(), cols.len(), Orientation::Csr, lanes))
}

/// Replaces the block `rows x cols` of `c` with `b`: every position
/// `(rows[p], cols[q])` takes `B(p, q)`, or becomes empty where `b` has no
/// entry. Positions outside the block are untouched.
pub fn subassign<T: Scalar>(
    c: &CompressedMatrix<T>,
    rows: &[usize],
    cols: &[usize],
    b: &CompressedMatrix<T>,
) -> Result<CompressedMatrix<T>> {
    if rows.len() != b.nrows() || cols.len() != b.ncols() {
        return Err(Error::dims(format!(
            "subassign: block is {}x{} but index lists select {}x{}",
            b.nrows(),
            b.ncols(),
            rows.len(),
            cols.len()
        )));
    }
    let row_map = index_map(rows, c.nrows())?;
    let col_map = index_map(cols, c.ncols())?;
    let c_rows = c.in_orientation(Orientation::Csr);
    let b = b.in_orientation(Orientation::Csr);
    let lanes = (0..c.nrows())
        .map(|i| {
            let (idx, vals) = c_rows.raw_lane(i);
            if row_map[i] == UNSET {
                return (idx.to_vec(), vals.to_vec());
            }
            let mut merged: Vec<(usize, T)> = idx
                .iter()
                .zip(vals)
                .filter(|(&j, _)| col_map[j] == UNSET)
                .map(|(&j, &v)| (j, v))
                .collect();
            let (b_idx, b_vals) = b.raw_lane(row_map[i]);
            merged.extend(b_idx.iter().zip(b_vals).map(|(&q, &v)| (cols[q], v)));
            merged.sort_unstable_by_key(|e| e.0);
            merged.into_iter().unzip()
        })
        .collect();
    let out = assemble(c.nrows(), c.ncols(), Orientation::Csr, lanes);
    Ok(if c.orientation() == Orientation::Csr {
        out
    } else {
        out.reorient(c.orientation())
    })
}
