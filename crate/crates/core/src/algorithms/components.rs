use super::{pattern, require_graph, with_diagonal};
use crate::algebra::{registry_get, BinaryOp};
use crate::domain::Scalar;
use crate::error::{Error, Result};
use crate::kernels::{mxv, scale_vector};
use crate::sparse::{CompressedMatrix, SparseVector};

/// Connected components of an undirected graph by min-label propagation.
///
/// Every vertex starts with its own index as label and repeatedly takes the
/// minimum label over its closed neighbourhood (`min_select2nd` product with
/// self-loops added). At the fixed point each label is the smallest vertex
/// index of its component.
pub fn connected_components<T: Scalar>(a: &CompressedMatrix<T>) -> Result<SparseVector<i64>> {
    let n = require_graph(a)?;
    let structure = pattern(a, true);
    if !structure.is_symmetric()? {
        return Err(Error::NotSymmetric);
    }
    let or_and = registry_get::<bool>("or_and")?;
    let closed = pattern(&with_diagonal(&structure, true, &or_and)?, 1i64);
    let min_select2nd = registry_get::<i64>("min_select2nd")?;
    let min = BinaryOp::min();

    let initial: Vec<i64> = (0..n as i64).collect();
    let mut labels = SparseVector::from_dense(&initial);
    for _ in 0..n.max(1) {
        let spread = mxv(&closed, &labels, &min_select2nd, false)?;
        let next = scale_vector(&spread, &labels, &min)?;
        if next == labels {
            return Ok(labels);
        }
        labels = next;
    }
    Err(Error::IterationCap {
        algorithm: "connected_components",
        cap: n,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_disjoint_edges() {
        let a = CompressedMatrix::from_entries(4, 4, [(0, 1, 1i64), (1, 0, 1), (2, 3, 1), (3, 2, 1)]).unwrap();
        assert_eq!(connected_components(&a).unwrap().to_dense(-1), vec![0, 0, 2, 2]);
    }

    #[test]
    fn isolated_vertices_keep_their_label() {
        let a = CompressedMatrix::from_entries(3, 3, [(2, 1, 1.0), (1, 2, 1.0)]).unwrap();
        assert_eq!(connected_components(&a).unwrap().to_dense(-1), vec![0, 1, 1]);
    }

    #[test]
    fn directed_input_is_rejected() {
        let a = CompressedMatrix::from_entries(2, 2, [(0, 1, 1i64)]).unwrap();
        assert!(matches!(connected_components(&a), Err(Error::NotSymmetric)));
    }

    #[test]
    fn empty_graph() {
        let a = CompressedMatrix::<bool>::empty(0, 0, crate::sparse::Orientation::Csr);
        assert_eq!(connected_components(&a).unwrap().len(), 0);
    }
}
