use super::{pattern, require_graph, require_vertex};
use crate::algebra::{registry_get, BinaryOp};
use crate::domain::Scalar;
use crate::error::{Error, Result};
use crate::kernels::{mxv, scale_vector};
use crate::sparse::{CompressedMatrix, SparseVector};

#[derive(Debug, Clone, PartialEq)]
pub struct BfsResult {
    /// Hop distance from the nearest source; unreached vertices are absent.
    pub levels: SparseVector<i64>,
    pub reached: usize,
}

/// Level-synchronous breadth-first search from one or more sources.
///
/// Each level is one `or_and` product `Aᵀ f` of the frontier `f`, masked
/// with the explicit set of still-unvisited vertices.
pub fn bfs<T: Scalar>(a: &CompressedMatrix<T>, sources: &[usize]) -> Result<BfsResult> {
    let n = require_graph(a)?;
    if sources.is_empty() {
        return Err(Error::EmptySources);
    }
    for &s in sources {
        require_vertex(s, n)?;
    }
    let adjacency = pattern(a, true);
    let or_and = registry_get::<bool>("or_and")?;
    let land = BinaryOp::land();

    let mut frontier = SparseVector::from_unsorted(n, sources.iter().map(|&s| (s, true)))?;
    let mut unvisited = frontier.structural_complement(true);
    let mut levels: Vec<(usize, i64)> = sources.iter().map(|&s| (s, 0)).collect();

    let mut depth = 0i64;
    loop {
        if depth as usize >= n {
            return Err(Error::IterationCap { algorithm: "bfs", cap: n });
        }
        let reached = mxv(&adjacency, &frontier, &or_and, true)?;
        frontier = scale_vector(&reached, &unvisited, &land)?;
        if frontier.nvals() == 0 {
            break;
        }
        depth += 1;
        unvisited = scale_vector(&unvisited, &frontier.structural_complement(true), &land)?;
        levels.extend(frontier.indices().iter().map(|&v| (v, depth)));
    }
    let levels = SparseVector::from_unsorted(n, levels)?;
    Ok(BfsResult {
        reached: levels.nvals(),
        levels,
    })
}
