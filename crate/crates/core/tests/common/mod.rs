#![allow(dead_code)]

use sgk_core::generate::{random_digraph, random_undirected};
use sgk_core::{CompressedMatrix, Scalar, SparseVector};
use rand::{Rng, RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn arcs<T: Scalar>(a: &CompressedMatrix<T>) -> Vec<(usize, usize)> {
    a.iter().map(|(i, j, _)| (i, j)).collect()
}

pub fn weighted_arcs<T: Scalar>(a: &CompressedMatrix<T>) -> Vec<(usize, usize, T)> {
    a.iter().collect()
}

/// Undirected edges `i < j` of a symmetric matrix.
pub fn edges<T: Scalar>(a: &CompressedMatrix<T>) -> Vec<(usize, usize)> {
    a.iter().filter(|&(i, j, _)| i < j).map(|(i, j, _)| (i, j)).collect()
}

/// Random boolean digraph with `n` in `1..=max_n` and an average degree
/// between 1 and 4.
pub fn digraph<R: Rng>(rng: &mut R, max_n: usize) -> CompressedMatrix<bool> {
    let n = rng.random_range(1..=max_n);
    let p = rng.random_range(1.0..4.0) / n as f64;
    random_digraph(rng, n, p.min(1.0), |_| true)
}

pub fn undirected<R: Rng>(rng: &mut R, min_n: usize, max_n: usize, degree: f64) -> CompressedMatrix<i64> {
    let n = rng.random_range(min_n..=max_n);
    let p = rng.random_range(0.2 * degree..degree) / n as f64;
    random_undirected(rng, n, p.min(1.0), |_| 1)
}

/// Relative closeness with exact agreement required for infinities.
pub fn close(a: f64, b: f64, rel: f64) -> bool {
    if a == b {
        return true;
    }
    if !a.is_finite() || !b.is_finite() {
        return false;
    }
    (a - b).abs() <= rel * a.abs().max(b.abs())
}

/// Partition of `0..n` induced by a label vector, as sorted blocks.
pub fn partition(labels: &[usize]) -> Vec<Vec<usize>> {
    let mut blocks: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for (v, &l) in labels.iter().enumerate() {
        blocks.entry(l).or_default().push(v);
    }
    let mut out: Vec<Vec<usize>> = blocks.into_values().collect();
    out.sort();
    out
}

pub fn sparse_partition(labels: &SparseVector<i64>) -> Vec<Vec<usize>> {
    let dense: Vec<usize> = labels.to_dense(-1).into_iter().map(|l| l as usize).collect();
    partition(&dense)
}

/// Value comparison used against the dense oracle: exact, or relative for
/// floating domains.
pub trait OracleEq: Scalar {
    fn oracle_eq(self, other: Self) -> bool {
        self == other
    }
}

impl OracleEq for bool {}
impl OracleEq for i32 {}
impl OracleEq for i64 {}
impl OracleEq for u32 {}
impl OracleEq for u64 {}

impl OracleEq for f64 {
    fn oracle_eq(self, other: Self) -> bool {
        close(self, other, 1e-12)
    }
}

fn random_orientation<R: Rng>(rng: &mut R) -> sgk_core::Orientation {
    if rng.random_bool(0.5) {
        sgk_core::Orientation::Csr
    } else {
        sgk_core::Orientation::Csc
    }
}

fn dense_eq<T: OracleEq>(got: &[T], want: &[T]) -> bool {
    got.len() == want.len() && got.iter().zip(want).all(|(&a, &b)| a.oracle_eq(b))
}

/// One random instance of mxm, mxv (both flags), ewise_mult and reduce (both
/// axes) against the dense oracle. Also checks structural validity, that no
/// product-kernel output stores 0̄, and that inputs are left unchanged.
pub fn kernel_instance<T, R>(rng: &mut R, s: &sgk_core::Semiring<T>) -> Result<(), String>
where
    T: OracleEq + sgk_core::generate::RandomValue,
    R: Rng,
{
    use sgk_core::generate::random_matrix;
    use sgk_core::kernels::{ewise_mult, mxm, mxv, reduce};
    use sgk_core::oracle::{dense_ewise, dense_mxm, dense_mxv, dense_reduce, DenseMatrix};
    use sgk_core::Axis;

    let z = s.zero();
    let (m, k, p) = (rng.random_range(1..=50), rng.random_range(1..=50), rng.random_range(1..=50));
    let mut density = || rng.random_range(0.0..=0.2);
    let (da, db, dc, dv) = (density(), density(), density(), density());
    let a = random_matrix(rng, m, k, da, T::random_value).reorient(random_orientation(rng));
    let b = random_matrix(rng, k, p, db, T::random_value).reorient(random_orientation(rng));
    let c = random_matrix(rng, m, k, dc, T::random_value).reorient(random_orientation(rng));
    let vk = random_matrix(rng, k, 1, dv, T::random_value);
    let vm = random_matrix(rng, m, 1, dv, T::random_value);
    let (vk, vm) = (
        SparseVector::from_column(&vk).unwrap(),
        SparseVector::from_column(&vm).unwrap(),
    );
    let prints = [a.fingerprint(), b.fingerprint(), c.fingerprint(), vk.fingerprint(), vm.fingerprint()];
    let (ad, bd, cd) = (DenseMatrix::from_sparse(&a, z), DenseMatrix::from_sparse(&b, z), DenseMatrix::from_sparse(&c, z));
    let tag = format!("{} on {m}x{k}x{p}", s.name());

    let no_zero = |vals: &[T], what: &str| -> Result<(), String> {
        if vals.contains(&z) {
            return Err(format!("{what} stores 0̄ ({tag})"));
        }
        Ok(())
    };

    let got = mxm(&a, &b, s).map_err(|e| e.to_string())?;
    got.validate().map_err(|e| e.to_string())?;
    no_zero(got.raw_values(), "mxm")?;
    let want = dense_mxm(&ad, &bd, s).unwrap();
    if !dense_eq(&DenseMatrix::from_sparse(&got, z).values, &want.values) {
        return Err(format!("mxm differs from oracle ({tag})"));
    }

    for (v, transpose) in [(&vk, false), (&vm, true)] {
        let got = mxv(&a, v, s, transpose).map_err(|e| e.to_string())?;
        got.validate().map_err(|e| e.to_string())?;
        no_zero(got.values(), "mxv")?;
        let want = dense_mxv(&ad, &v.to_dense(z), s, transpose).unwrap();
        if !dense_eq(&got.to_dense(z), &want) {
            return Err(format!("mxv (transpose={transpose}) differs from oracle ({tag})"));
        }
    }

    let got = ewise_mult(&a, &c, s.mul_op()).map_err(|e| e.to_string())?;
    got.validate().map_err(|e| e.to_string())?;
    if got.iter().any(|(i, j, _)| a.get(i, j).is_none() || c.get(i, j).is_none()) {
        return Err(format!("ewise_mult pattern exceeds the intersection ({tag})"));
    }
    let want = dense_ewise(&ad, &cd, s).unwrap();
    if !dense_eq(&DenseMatrix::from_sparse(&got, z).values, &want.values) {
        return Err(format!("ewise_mult differs from oracle ({tag})"));
    }

    let monoid = s.add_monoid();
    for axis in [Axis::Rows, Axis::Cols] {
        let got = reduce(&a, monoid, axis).map_err(|e| e.to_string())?;
        got.validate().map_err(|e| e.to_string())?;
        no_zero(got.values(), "reduce")?;
        let want = dense_reduce(&ad, monoid, axis);
        if !dense_eq(&got.to_dense(monoid.identity()), &want) {
            return Err(format!("reduce {axis:?} differs from oracle ({tag})"));
        }
    }

    let after = [a.fingerprint(), b.fingerprint(), c.fingerprint(), vk.fingerprint(), vm.fingerprint()];
    PURITY_CHECKS.fetch_add(1, std::sync::atomic::Ordering::Relaxed);
    if prints != after {
        PURITY_VIOLATIONS.fetch_add(1, std::sync::atomic::Ordering::Relaxed);
        return Err(format!("kernel inputs changed ({tag})"));
    }
    Ok(())
}

/// Containers whose structure and values can be fingerprinted.
pub trait Fingerprinted {
    fn print(&self) -> u64;
}

impl<T: Scalar> Fingerprinted for CompressedMatrix<T> {
    fn print(&self) -> u64 {
        self.fingerprint()
    }
}

impl<T: Scalar> Fingerprinted for SparseVector<T> {
    fn print(&self) -> u64 {
        self.fingerprint()
    }
}

pub static PURITY_CHECKS: std::sync::atomic::AtomicUsize = std::sync::atomic::AtomicUsize::new(0);
pub static PURITY_VIOLATIONS: std::sync::atomic::AtomicUsize = std::sync::atomic::AtomicUsize::new(0);

/// Runs `f` and records whether any of `inputs` changed across the call.
pub fn guarded<R>(inputs: &[&dyn Fingerprinted], f: impl FnOnce() -> R) -> R {
    use std::sync::atomic::Ordering::Relaxed;
    let before: Vec<u64> = inputs.iter().map(|c| c.print()).collect();
    let out = f();
    let after: Vec<u64> = inputs.iter().map(|c| c.print()).collect();
    PURITY_CHECKS.fetch_add(1, Relaxed);
    if before != after {
        PURITY_VIOLATIONS.fetch_add(1, Relaxed);
    }
    out
}
