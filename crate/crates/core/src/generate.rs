//! Seeded random matrices and graphs for tests and benchmarks.

use crate::domain::{Complex64, OpaqueHandle, Scalar};
use crate::sparse::CompressedMatrix;
use rand::seq::SliceRandom;
use rand::{Rng, RngExt};

/// Scalars with a default random distribution.
///
/// Integers are small (|x| < 50) so products and short sums stay exact and
/// clear of the encoded infinities; reals and complex parts are drawn from
/// `[0.5, 10)`.
pub trait RandomValue: Scalar {
    fn random_value<R: Rng + ?Sized>(rng: &mut R) -> Self;
}

macro_rules! random_signed {
    ($($t:ty),*) => {$(
        impl RandomValue for $t {
            fn random_value<R: Rng + ?Sized>(rng: &mut R) -> Self {
                rng.random_range(-49..50)
            }
        }
    )*};
}

macro_rules! random_unsigned {
    ($($t:ty),*) => {$(
        impl RandomValue for $t {
            fn random_value<R: Rng + ?Sized>(rng: &mut R) -> Self {
                rng.random_range(0..50)
            }
        }
    )*};
}

random_signed!(i8, i16, i32, i64);
random_unsigned!(u8, u16, u32, u64);

impl RandomValue for f32 {
    fn random_value<R: Rng + ?Sized>(rng: &mut R) -> Self {
        rng.random_range(0.5..10.0)
    }
}

impl RandomValue for f64 {
    fn random_value<R: Rng + ?Sized>(rng: &mut R) -> Self {
        rng.random_range(0.5..10.0)
    }
}

impl RandomValue for bool {
    fn random_value<R: Rng + ?Sized>(rng: &mut R) -> Self {
        rng.random_bool(0.5)
    }
}

impl RandomValue for Complex64 {
    fn random_value<R: Rng + ?Sized>(rng: &mut R) -> Self {
        Complex64::new(rng.random_range(0.5..10.0), rng.random_range(0.5..10.0))
    }
}

impl RandomValue for OpaqueHandle {
    fn random_value<R: Rng + ?Sized>(rng: &mut R) -> Self {
        OpaqueHandle(rng.random())
    }
}

/// `nrows x ncols` CSR matrix in which each position is stored with
/// probability `density`.
pub fn random_matrix<T, R, F>(rng: &mut R, nrows: usize, ncols: usize, density: f64, mut value: F) -> CompressedMatrix<T>
where
    T: Scalar,
    R: Rng + ?Sized,
    F: FnMut(&mut R) -> T,
{
    let mut entries = Vec::new();
    for i in 0..nrows {
        for j in 0..ncols {
            if rng.random_bool(density) {
                entries.push((i, j, value(rng)));
            }
        }
    }
    CompressedMatrix::from_entries(nrows, ncols, entries).expect("entries are generated in order")
}

/// Directed graph without self-loops; each arc present with probability `p`.
pub fn random_digraph<T, R, F>(rng: &mut R, n: usize, p: f64, mut weight: F) -> CompressedMatrix<T>
where
    T: Scalar,
    R: Rng + ?Sized,
    F: FnMut(&mut R) -> T,
{
    let mut entries = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i != j && rng.random_bool(p) {
                entries.push((i, j, weight(rng)));
            }
        }
    }
    CompressedMatrix::from_entries(n, n, entries).expect("entries are generated in order")
}

/// Simple undirected graph: symmetric, no self-loops, each edge present with
/// probability `p` and carrying the same weight in both directions.
pub fn random_undirected<T, R, F>(rng: &mut R, n: usize, p: f64, mut weight: F) -> CompressedMatrix<T>
where
    T: Scalar,
    R: Rng + ?Sized,
    F: FnMut(&mut R) -> T,
{
    let mut entries = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.random_bool(p) {
                let w = weight(rng);
                entries.push((i, j, w));
                entries.push((j, i, w));
            }
        }
    }
    entries.sort_by_key(|&(i, j, _)| (i, j));
    CompressedMatrix::from_entries(n, n, entries).expect("edges are distinct")
}

/// Strongly connected digraph: a random Hamiltonian cycle plus arcs added
/// with probability `p`. Needs `n >= 2` for the cycle to exist; `n == 1`
/// gives a single self-loop.
pub fn random_strongly_connected<T, R, F>(rng: &mut R, n: usize, p: f64, mut weight: F) -> CompressedMatrix<T>
where
    T: Scalar,
    R: Rng + ?Sized,
    F: FnMut(&mut R) -> T,
{
    if n == 1 {
        return CompressedMatrix::from_entries(1, 1, [(0, 0, weight(rng))]).expect("one entry");
    }
    let order = random_permutation(rng, n);
    let mut arcs = vec![false; n * n];
    for k in 0..n {
        arcs[order[k] * n + order[(k + 1) % n]] = true;
    }
    let mut entries = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i != j && (arcs[i * n + j] || rng.random_bool(p)) {
                entries.push((i, j, weight(rng)));
            }
        }
    }
    CompressedMatrix::from_entries(n, n, entries).expect("entries are generated in order")
}

/// Uniform random permutation of `0..n`.
pub fn random_permutation<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}
