//! Seeded inputs shared by the kernel and algorithm benchmarks in `benches/`.

use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sgk_core::generate::{random_digraph, random_matrix, random_strongly_connected, random_undirected};
use sgk_core::{CompressedMatrix, SparseVector};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Square matrix with about `degree` stored entries per row.
pub fn matrix(n: usize, degree: f64, seed: u64) -> CompressedMatrix<f64> {
    let mut r = rng(seed);
    random_matrix(&mut r, n, n, (degree / n as f64).min(1.0), |r| r.random_range(0.5..2.0))
}

/// Vector with about `fill * n` stored entries.
pub fn vector(n: usize, fill: f64, seed: u64) -> SparseVector<f64> {
    let mut r = rng(seed);
    let mut entries = Vec::new();
    for i in 0..n {
        if r.random_bool(fill) {
            entries.push((i, r.random_range(0.5..2.0)));
        }
    }
    SparseVector::from_entries(n, entries).expect("indices are increasing")
}

/// Directed graph with integer weights in `1..100`.
pub fn weighted_digraph(n: usize, degree: f64, seed: u64) -> CompressedMatrix<i64> {
    let mut r = rng(seed);
    random_digraph(&mut r, n, (degree / n as f64).min(1.0), |r| r.random_range(1..100))
}

pub fn undirected(n: usize, degree: f64, seed: u64) -> CompressedMatrix<bool> {
    let mut r = rng(seed);
    random_undirected(&mut r, n, (degree / n as f64).min(1.0), |_| true)
}

/// Digraph with no dangling vertices.
pub fn strongly_connected(n: usize, degree: f64, seed: u64) -> CompressedMatrix<bool> {
    let mut r = rng(seed);
    random_strongly_connected(&mut r, n, (degree / n as f64).min(1.0), |_| true)
}
