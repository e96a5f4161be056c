use super::{degrees, pattern, require_graph, Direction};
use crate::algebra::{registry_get, BinaryOp, Monoid, UnaryOp};
use crate::domain::Scalar;
use crate::error::{Error, Result};
use crate::kernels::{apply_unary, ewise_mult, mxm, reduce, scale_vector};
use crate::sparse::{Axis, CompressedMatrix, SparseVector};

/// Pattern of a simple undirected graph, or the reason it is not one.
fn simple_pattern<T: Scalar>(a: &CompressedMatrix<T>) -> Result<CompressedMatrix<i64>> {
    let n = require_graph(a)?;
    let p = pattern(a, 1i64);
    if !p.is_symmetric()? {
        return Err(Error::NotSymmetric);
    }
    let loops = ewise_mult(&p, &CompressedMatrix::diagonal(n, 1), &BinaryOp::times())?;
    if loops.nvals() > 0 {
        return Err(Error::SelfLoop);
    }
    Ok(p)
}

/// Row sums of `A .× (A·A)`: twice the number of triangles through each
/// vertex. Vertices on no triangle are absent.
fn closed_wedges(p: &CompressedMatrix<i64>) -> Result<SparseVector<i64>> {
    let plus_times = registry_get::<i64>("plus_times")?;
    let paths = mxm(p, p, &plus_times)?;
    let closed = ewise_mult(p, &paths, &BinaryOp::times())?;
    reduce(&closed, &Monoid::plus(), Axis::Rows)
}

/// Number of triangles in a simple undirected graph.
pub fn triangle_count<T: Scalar>(a: &CompressedMatrix<T>) -> Result<u64> {
    let p = simple_pattern(a)?;
    let per_vertex = closed_wedges(&p)?;
    let total = reduce(&per_vertex.to_column(), &Monoid::plus(), Axis::Cols)?;
    Ok(total.get(0).unwrap_or(0) as u64 / 6)
}

/// Local clustering coefficient `tri(i) / (d(i)(d(i) - 1) / 2)`.
///
/// Vertices with degree below 2 are absent, and so are vertices on no
/// triangle (their coefficient is an implicit 0).
pub fn clustering_coefficients<T: Scalar>(a: &CompressedMatrix<T>) -> Result<SparseVector<f64>> {
    let p = simple_pattern(a)?;
    let to_f64 = UnaryOp::new("to_f64", |x: i64| x as f64);
    let closed = apply_unary(&closed_wedges(&p)?, &to_f64, None);
    let wedges = UnaryOp::new("ordered_wedges", |d: i64| (d * (d - 1)) as f64);
    let possible = apply_unary(&degrees(&p, Direction::Out)?, &wedges, Some(0.0));
    // Both counts are doubled, so the halves cancel.
    scale_vector(&closed, &possible, &BinaryOp::new("div", |x: f64, y: f64| x / y))
}
