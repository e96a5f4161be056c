use super::assemble;
use crate::algebra::UnaryOp;
use crate::domain::Scalar;
use crate::sparse::{CompressedMatrix, SparseVector};

/// Containers that [`apply_unary`] can map.
pub trait ApplyUnary<I: Scalar, O: Scalar> {
    type Output;

    fn apply_unary(&self, f: &UnaryOp<I, O>, drop: Option<O>) -> Self::Output;
}

/// Replaces every stored value `x` by `f(x)`, keeping the pattern except for
/// results equal to `drop` when one is given.
pub fn apply_unary<I, O, C>(container: &C, f: &UnaryOp<I, O>, drop: Option<O>) -> C::Output
where
    I: Scalar,
    O: Scalar,
    C: ApplyUnary<I, O>,
{
    container.apply_unary(f, drop)
}

fn map_lane<I: Scalar, O: Scalar>(
    idx: &[usize],
    vals: &[I],
    f: &UnaryOp<I, O>,
    drop: Option<O>,
) -> (Vec<usize>, Vec<O>) {
    let mut out_i = Vec::with_capacity(idx.len());
    let mut out_v = Vec::with_capacity(idx.len());
    for (&i, &x) in idx.iter().zip(vals) {
        let y = f.eval(x);
        if drop != Some(y) {
            out_i.push(i);
            out_v.push(y);
        }
    }
    (out_i, out_v)
}

impl<I: Scalar, O: Scalar> ApplyUnary<I, O> for CompressedMatrix<I> {
    type Output = CompressedMatrix<O>;

    fn apply_unary(&self, f: &UnaryOp<I, O>, drop: Option<O>) -> CompressedMatrix<O> {
        let lanes = (0..self.major_dim())
            .map(|k| {
                let (idx, vals) = self.raw_lane(k);
                map_lane(idx, vals, f, drop)
            })
            .collect();
        assemble(self.nrows(), self.ncols(), self.orientation(), lanes).with_descriptor(self.descriptor())
    }
}

impl<I: Scalar, O: Scalar> ApplyUnary<I, O> for SparseVector<I> {
    type Output = SparseVector<O>;

    fn apply_unary(&self, f: &UnaryOp<I, O>, drop: Option<O>) -> SparseVector<O> {
        let (idx, vals) = map_lane(self.indices(), self.values(), f, drop);
        SparseVector::from_entries(self.len(), idx.into_iter().zip(vals))
            .expect("mapping keeps indices sorted")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sparse::Orientation;

    #[test]
    fn constant_map_gives_pattern() {
        let a = CompressedMatrix::from_entries(2, 2, [(0, 1, 2.5f64), (1, 1, -4.0)]).unwrap();
        let p = apply_unary(&a, &UnaryOp::constant(1i64), None);
        assert_eq!(p.iter().collect::<Vec<_>>(), vec![(0, 1, 1), (1, 1, 1)]);
        assert_eq!(apply_unary(&a, &UnaryOp::identity(), None), a);
    }

    #[test]
    fn drop_removes_matching_results() {
        let a = CompressedMatrix::from_entries(2, 2, [(0, 0, 1i32), (0, 1, -1), (1, 0, 3)])
            .unwrap()
            .reorient(Orientation::Csc);
        let pos = apply_unary(&a, &UnaryOp::new("is_pos", |x: i32| x > 0), Some(false));
        assert_eq!(pos.nvals(), 2);
        assert_eq!(pos.get(0, 1), None);

        let v = SparseVector::from_entries(3, [(0, 0.5), (2, 2.0)]).unwrap();
        let w = apply_unary(&v, &UnaryOp::new("affine", |x: f64| 2.0 * x - 1.0), Some(0.0));
        assert_eq!(w, SparseVector::from_entries(3, [(2, 3.0)]).unwrap());
    }
}
