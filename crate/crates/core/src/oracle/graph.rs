use std::cmp::Ordering;
use std::collections::{BinaryHeap, VecDeque};
use std::ops::Add;

/// Out-neighbour lists of an edge list on vertices `0..n`.
pub fn adjacency_lists(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u].push(v);
    }
    adj
}

pub fn weighted_adjacency_lists<W: Copy>(n: usize, edges: &[(usize, usize, W)]) -> Vec<Vec<(usize, W)>> {
    let mut adj = vec![Vec::new(); n];
    for &(u, v, w) in edges {
        adj[u].push((v, w));
    }
    adj
}

/// Queue-based multi-source BFS; `None` for unreachable vertices.
pub fn oracle_bfs(adj: &[Vec<usize>], sources: &[usize]) -> Vec<Option<usize>> {
    let mut level = vec![None; adj.len()];
    let mut queue = VecDeque::new();
    for &s in sources {
        level[s] = Some(0);
        queue.push_back(s);
    }
    while let Some(u) = queue.pop_front() {
        let next = level[u].unwrap() + 1;
        for &v in &adj[u] {
            if level[v].is_none() {
                level[v] = Some(next);
                queue.push_back(v);
            }
        }
    }
    level
}

struct Pending<W> {
    dist: W,
    vertex: usize,
}

impl<W: PartialOrd> PartialEq for Pending<W> {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl<W: PartialOrd> Eq for Pending<W> {}

impl<W: PartialOrd> PartialOrd for Pending<W> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<W: PartialOrd> Ord for Pending<W> {
    // Reversed so the max-heap pops the smallest distance.
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .dist
            .partial_cmp(&self.dist)
            .expect("weights are comparable")
            .then_with(|| other.vertex.cmp(&self.vertex))
    }
}

/// Dijkstra with a binary heap. Weights must be non-negative.
pub fn oracle_sssp<W>(adj: &[Vec<(usize, W)>], source: usize, zero: W) -> Vec<Option<W>>
where
    W: Copy + PartialOrd + Add<Output = W>,
{
    let mut dist: Vec<Option<W>> = vec![None; adj.len()];
    let mut done = vec![false; adj.len()];
    let mut heap = BinaryHeap::new();
    dist[source] = Some(zero);
    heap.push(Pending { dist: zero, vertex: source });
    while let Some(Pending { dist: d, vertex: u }) = heap.pop() {
        if done[u] {
            continue;
        }
        done[u] = true;
        for &(v, w) in &adj[u] {
            let candidate = d + w;
            if dist[v].is_none() || dist[v].is_some_and(|cur| candidate < cur) {
                dist[v] = Some(candidate);
                heap.push(Pending { dist: candidate, vertex: v });
            }
        }
    }
    dist
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// Union-find components, each labelled by its smallest vertex.
pub fn oracle_components(n: usize, edges: &[(usize, usize)]) -> Vec<usize> {
    let mut parent: Vec<usize> = (0..n).collect();
    for &(u, v) in edges {
        let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
        // Keeping the smaller root makes every root its component's minimum.
        if ru < rv {
            parent[rv] = ru;
        } else {
            parent[ru] = rv;
        }
    }
    (0..n).map(|v| find(&mut parent, v)).collect()
}

fn adjacency_matrix(n: usize, edges: &[(usize, usize)]) -> Vec<bool> {
    let mut adj = vec![false; n * n];
    for &(u, v) in edges {
        adj[u * n + v] = true;
        adj[v * n + u] = true;
    }
    adj
}

/// Triangles of an undirected graph by enumerating all vertex triples.
pub fn oracle_triangles(n: usize, edges: &[(usize, usize)]) -> u64 {
    let adj = adjacency_matrix(n, edges);
    let mut count = 0;
    for i in 0..n {
        for j in i + 1..n {
            if !adj[i * n + j] {
                continue;
            }
            for k in j + 1..n {
                if adj[i * n + k] && adj[j * n + k] {
                    count += 1;
                }
            }
        }
    }
    count
}

/// Fraction of closed wedges at each vertex; `None` below degree 2.
pub fn oracle_clustering(n: usize, edges: &[(usize, usize)]) -> Vec<Option<f64>> {
    let adj = adjacency_matrix(n, edges);
    (0..n)
        .map(|i| {
            let nbrs: Vec<usize> = (0..n).filter(|&j| j != i && adj[i * n + j]).collect();
            let d = nbrs.len();
            if d < 2 {
                return None;
            }
            let mut closed = 0u64;
            for (a, &u) in nbrs.iter().enumerate() {
                for &v in &nbrs[a + 1..] {
                    if adj[u * n + v] {
                        closed += 1;
                    }
                }
            }
            Some(closed as f64 / (d * (d - 1) / 2) as f64)
        })
        .collect()
}

/// Dense power iteration on the column-stochastic Google matrix, run until
/// the L1 change is at most `tol` or `max_iters` steps are taken.
pub fn oracle_pagerank(n: usize, arcs: &[(usize, usize)], alpha: f64, tol: f64, max_iters: usize) -> Vec<f64> {
    let mut out = vec![0usize; n];
    let mut link = vec![false; n * n];
    for &(u, v) in arcs {
        if !link[u * n + v] {
            link[u * n + v] = true;
            out[u] += 1;
        }
    }
    let mut google = vec![0.0; n * n];
    for i in 0..n {
        for j in 0..n {
            let p = if link[j * n + i] { 1.0 / out[j] as f64 } else { 0.0 };
            google[i * n + j] = alpha * p + (1.0 - alpha) / n as f64;
        }
    }
    let mut v = vec![1.0 / n as f64; n];
    for _ in 0..max_iters {
        let next: Vec<f64> = (0..n)
            .map(|i| (0..n).map(|j| google[i * n + j] * v[j]).sum())
            .collect();
        let change: f64 = next.iter().zip(&v).map(|(a, b)| (a - b).abs()).sum();
        v = next;
        if change <= tol {
            break;
        }
    }
    v
}
