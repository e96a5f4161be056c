//! Brute-force reference implementations.
//!
//! Dense triple loops over the semiring formulas and textbook graph
//! algorithms on adjacency lists. Nothing here calls the sparse kernels or
//! the graph algorithms; the only shared pieces are the containers (read
//! through their public iterators) and the semiring operators themselves.

mod dense;
mod graph;

pub use dense::{dense_ewise, dense_mxm, dense_mxv, dense_reduce, DenseMatrix};
pub use graph::{
    adjacency_lists, oracle_bfs, oracle_clustering, oracle_components, oracle_pagerank, oracle_sssp,
    oracle_triangles, weighted_adjacency_lists,
};
