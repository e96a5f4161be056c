use crate::{Failure, GlobalOpts};
use sgk_core::io::{read_edge_list, read_matrix_market, AnyCoo};
use sgk_core::Error;
use std::fs;
use std::path::Path;

/// How an input file was recognized.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Source {
    MatrixMarket,
    EdgeList,
}

impl Source {
    pub fn name(self) -> &'static str {
        match self {
            Source::MatrixMarket => "matrix-market",
            Source::EdgeList => "edge-list",
        }
    }
}

/// Prefixes data errors with the offending file; precondition errors keep
/// their bare message.
pub fn in_file(path: &Path, e: Error) -> Failure {
    match Failure::from(e) {
        Failure::Data(m) => Failure::Data(format!("{}: {m}", path.display())),
        other => other,
    }
}

pub fn load(path: &Path, opts: &GlobalOpts) -> Result<(Source, AnyCoo), Failure> {
    let bytes = fs::read(path).map_err(|e| in_file(path, e.into()))?;
    let banner = b"%%matrixmarket";
    let is_mm = bytes.len() >= banner.len() && bytes[..banner.len()].eq_ignore_ascii_case(banner);
    if is_mm {
        let (_, m) = read_matrix_market(bytes.as_slice()).map_err(|e| in_file(path, e))?;
        Ok((Source::MatrixMarket, m))
    } else {
        let m = read_edge_list(bytes.as_slice(), opts.weighted, opts.undirected).map_err(|e| in_file(path, e))?;
        Ok((Source::EdgeList, m))
    }
}
