use super::AnyCoo;
use crate::algebra::Monoid;
use crate::domain::Numeric;
use crate::error::{Error, Result};
use crate::sparse::{CooMatrix, MatrixDescriptor};
use std::io::BufRead;

/// Reads `u<TAB>v[<TAB>w]` lines with 0-based vertex indices. Blank lines
/// and lines starting with `#` are skipped.
///
/// Weighted lists give `f64` values, unweighted ones `i64` 1 (a third column
/// is then ignored). With `undirected` every edge is stored in both
/// directions. The vertex count is one more than the largest index seen.
pub fn read_edge_list<R: BufRead>(input: R, weighted: bool, undirected: bool) -> Result<AnyCoo> {
    let mut edges: Vec<(usize, usize, f64)> = Vec::new();
    for (k, line) in input.lines().enumerate() {
        let line_no = k + 1;
        let line = line?;
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let parse_err = |reason: String| Error::Parse { line: line_no, reason };
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() < 2 || fields.len() > 3 {
            return Err(parse_err(format!("expected 2 or 3 fields, found {}", fields.len())));
        }
        let index = |s: &str| -> Result<usize> {
            let v: i64 = s.parse().map_err(|_| parse_err(format!("bad vertex index {s:?}")))?;
            usize::try_from(v).map_err(|_| Error::NegativeIndex { line: line_no })
        };
        let (u, v) = (index(fields[0])?, index(fields[1])?);
        let w = if weighted {
            let Some(text) = fields.get(2) else {
                return Err(parse_err("missing weight".into()));
            };
            text.parse::<f64>()
                .map_err(|_| parse_err(format!("bad weight {text:?}")))?
        } else {
            1.0
        };
        edges.push((u, v, w));
    }
    let n = edges.iter().map(|&(u, v, _)| u.max(v) + 1).max().unwrap_or(0);
    if weighted {
        build(n, edges.into_iter(), undirected).map(AnyCoo::Float64)
    } else {
        build(n, edges.into_iter().map(|(u, v, _)| (u, v, 1i64)), undirected).map(AnyCoo::Int64)
    }
}

fn build<T, I>(n: usize, edges: I, undirected: bool) -> Result<CooMatrix<T>>
where
    T: Numeric,
    I: Iterator<Item = (usize, usize, T)>,
{
    let mut triples = Vec::new();
    for (u, v, w) in edges {
        triples.push((u, v, w));
        if undirected && u != v {
            triples.push((v, u, w));
        }
    }
    let m = CooMatrix::build_from_triples(n, n, triples, &Monoid::plus())?;
    Ok(m.with_descriptor(MatrixDescriptor { symmetric: undirected }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_and_its_undirected_form() {
        let m = read_edge_list("0\t1\n1\t2\n".as_bytes(), false, false).unwrap();
        assert_eq!((m.dims(), m.nvals()), ((3, 3), 2));
        let m = read_edge_list("# path\n0\t1\n\n1\t2\n".as_bytes(), false, true).unwrap();
        assert_eq!(m.nvals(), 4);
        assert!(m.descriptor().symmetric);
    }

    #[test]
    fn weights_and_errors() {
        let AnyCoo::Float64(m) = read_edge_list("0\t1\t2.5\n".as_bytes(), true, false).unwrap() else {
            panic!("weighted lists are float64")
        };
        assert_eq!(m.get(0, 1), Some(2.5));
        assert!(matches!(
            read_edge_list("0\t-1\n".as_bytes(), false, false),
            Err(Error::NegativeIndex { line: 1 })
        ));
        assert!(matches!(
            read_edge_list("0\t1\n2\n".as_bytes(), false, false),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            read_edge_list("0\t1\n".as_bytes(), true, false),
            Err(Error::Parse { line: 1, .. })
        ));
    }
}
