use super::{require_graph, require_vertex, with_diagonal};
use crate::algebra::{registry_get, UnaryOp};
use crate::domain::Numeric;
use crate::error::{Error, Result};
use crate::kernels::{apply_unary, mxv};
use crate::sparse::{CompressedMatrix, SparseVector};

/// Single-source shortest paths by Bellman-Ford relaxation over `min_plus`.
///
/// A zero-weight self-loop on every vertex makes each product
/// `d ← (A ⊕ I)ᵀ d` keep the current distance as one of its candidates, so
/// the iteration is monotone and stops at the first repeated vector.
/// Unreachable vertices are absent.
pub fn sssp_minplus<T: Numeric>(a: &CompressedMatrix<T>, source: usize) -> Result<SparseVector<T>> {
    let n = require_graph(a)?;
    require_vertex(source, n)?;
    let negative = apply_unary(a, &UnaryOp::new("is_negative", |w: T| w < T::ZERO), Some(false));
    if negative.nvals() > 0 {
        return Err(Error::NegativeWeight);
    }
    let min_plus = registry_get::<T>("min_plus")?;
    let relax = with_diagonal(a, T::ZERO, &min_plus)?;

    let mut dist = SparseVector::from_entries(n, [(source, T::ZERO)])?;
    // n - 1 relaxations reach every shortest path; one more confirms it.
    for _ in 0..n {
        let next = mxv(&relax, &dist, &min_plus, true)?;
        if next == dist {
            return Ok(dist);
        }
        dist = next;
    }
    Err(Error::IterationCap {
        algorithm: "sssp",
        cap: n.saturating_sub(1),
    })
}
