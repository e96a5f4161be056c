use super::{degrees, pattern, require_graph, Direction};
use crate::algebra::{registry_get, BinaryOp, Monoid, UnaryOp};
use crate::domain::Scalar;
use crate::error::{Error, Result};
use crate::kernels::{apply_unary, mxv, reduce, scale_matrix, scale_vector, subassign, subref};
use crate::sparse::{Axis, CompressedMatrix, Orientation, SparseVector};

#[derive(Debug, Clone, PartialEq)]
pub struct PageRankResult {
    pub ranks: SparseVector<f64>,
    pub iterations: usize,
    /// L1 change of the last iteration; infinite when no iteration ran.
    pub residual: f64,
}

/// Power iteration `v ← α Pᵀ v + (1 - α)/n` on the row-stochastic pattern
/// matrix `P`.
///
/// The teleport term is folded into the product: the iterate carries an
/// extra coordinate fixed at 1, and the augmented matrix
///
/// ```text
/// G = [ αP              0 ]
///     [ (1-α)/n ... (1-α)/n  1 ]
/// ```
///
/// gives `Gᵀ [v; 1] = [α Pᵀ v + (1 - α)/n; 1]` with one `plus_times` mxv.
/// Stops once the L1 change is at most `tol` or after `max_iters` steps;
/// running out of steps is reported through `residual`, not as an error.
pub fn pagerank<T: Scalar>(a: &CompressedMatrix<T>, alpha: f64, max_iters: usize, tol: f64) -> Result<PageRankResult> {
    if !(alpha > 0.0 && alpha < 1.0) {
        return Err(Error::AlphaOutOfRange(alpha));
    }
    let n = require_graph(a)?;
    if n == 0 {
        return Ok(PageRankResult {
            ranks: SparseVector::empty(0),
            iterations: 0,
            residual: 0.0,
        });
    }
    let out = degrees(a, Direction::Out)?;
    if let Some(&v) = out.structural_complement(true).indices().first() {
        return Err(Error::DanglingVertex(v));
    }

    let inv = apply_unary(&out, &UnaryOp::new("reciprocal", |d: i64| 1.0 / d as f64), None);
    let stochastic = scale_matrix(&pattern(a, 1.0f64), &inv, &BinaryOp::times(), Axis::Rows)?;
    let damped = apply_unary(&stochastic, &UnaryOp::new("damp", move |x: f64| alpha * x), None);
    let teleport = SparseVector::full(n, (1.0 - alpha) / n as f64).to_column().transpose();

    let body: Vec<usize> = (0..n).collect();
    let g = CompressedMatrix::empty(n + 1, n + 1, Orientation::Csr);
    let g = subassign(&g, &body, &body, &damped)?;
    let g = subassign(&g, &[n], &body, &teleport)?;
    let g = subassign(&g, &[n], &[n], &CompressedMatrix::diagonal(1, 1.0))?;

    let plus_times = registry_get::<f64>("plus_times")?;
    let abs_diff = BinaryOp::new("abs_diff", |x: f64, y: f64| (x - y).abs());
    let mut start = vec![1.0 / n as f64; n + 1];
    start[n] = 1.0;
    let mut v = SparseVector::from_dense(&start);

    let mut iterations = 0;
    let mut residual = f64::INFINITY;
    while iterations < max_iters {
        let next = mxv(&g, &v, &plus_times, true)?;
        let change = scale_vector(&next, &v, &abs_diff)?;
        residual = reduce(&change.to_column(), &Monoid::plus(), Axis::Cols)?
            .get(0)
            .unwrap_or(0.0);
        v = next;
        iterations += 1;
        if residual <= tol {
            break;
        }
    }
    let ranks = SparseVector::from_column(&subref(&v.to_column(), &body, &[0])?)?;
    Ok(PageRankResult {
        ranks,
        iterations,
        residual,
    })
}
