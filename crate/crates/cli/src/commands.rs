use crate::input::{in_file, load, Source};
use crate::report::{vector_json, vector_rows, Cell, Report};
use crate::{Command, Dir, Failure, GlobalOpts};
use serde_json::json;
use sgk_core::algorithms::{
    bfs, clustering_coefficients, connected_components, degrees, pagerank, sssp_minplus, triangle_count, Direction,
};
use sgk_core::io::{write_matrix_market, AnyCoo};
use sgk_core::kernels::{mxm, mxv};
use sgk_core::{registry_get, BuiltinSemiring, CooMatrix, Error, Orientation, SparseVector};
use std::collections::BTreeSet;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

/// Runs `$body` with `$m` bound to the CSR form of whichever domain `$any`
/// holds.
macro_rules! on_matrix {
    ($any:expr, |$m:ident| $body:expr) => {
        match $any {
            AnyCoo::Int64(c) => {
                let $m = c.to_compressed(Orientation::Csr);
                $body
            }
            AnyCoo::Float64(c) => {
                let $m = c.to_compressed(Orientation::Csr);
                $body
            }
            AnyCoo::Complex64(c) => {
                let $m = c.to_compressed(Orientation::Csr);
                $body
            }
        }
    };
}

/// Flag checks that need no file access.
pub fn validate(cmd: &Command) -> Result<(), Failure> {
    match cmd {
        Command::Pagerank { alpha, .. } if !(*alpha > 0.0 && *alpha < 1.0) => {
            Err(Error::AlphaOutOfRange(*alpha).into())
        }
        Command::Mxm { semiring, .. } | Command::Mxv { semiring, .. }
            if !BuiltinSemiring::ALL.iter().any(|s| s.name() == semiring) =>
        {
            let known: Vec<_> = BuiltinSemiring::ALL.iter().map(|s| s.name()).collect();
            Err(Failure::Usage(format!(
                "unknown semiring `{semiring}` (expected one of {})",
                known.join(", ")
            )))
        }
        Command::Mxm { a, b, output: Some(out), .. } => distinct_output(out, &[a, b]),
        Command::Convert { input, output } => distinct_output(output, &[input]),
        _ => Ok(()),
    }
}

fn distinct_output(out: &Path, inputs: &[&PathBuf]) -> Result<(), Failure> {
    let same = |p: &Path| match (out.canonicalize(), p.canonicalize()) {
        (Ok(x), Ok(y)) => x == y,
        _ => out == p,
    };
    if inputs.iter().any(|p| same(p)) {
        return Err(Failure::Usage(format!("output {} would overwrite an input", out.display())));
    }
    Ok(())
}

pub fn execute(cmd: &Command, opts: &GlobalOpts) -> Result<Report, Failure> {
    match cmd {
        Command::Info { input } => {
            let (source, m) = load(input, opts)?;
            Ok(info(source, &m))
        }
        Command::Degrees { dir, input } => {
            let direction = match dir {
                Dir::In => Direction::In,
                Dir::Out => Direction::Out,
            };
            let (_, m) = load(input, opts)?;
            let d = on_matrix!(m, |a| degrees(&a, direction))?;
            Ok(Report::new(vector_json(&d), vector_rows(&d)))
        }
        Command::Bfs { source, input } => {
            let (_, m) = load(input, opts)?;
            let r = on_matrix!(m, |a| bfs(&a, source))?;
            let result = json!({ "levels": vector_json(&r.levels), "reached": r.reached });
            Ok(Report::new(result, vector_rows(&r.levels)))
        }
        Command::Sssp { source, input } => {
            let (_, m) = load(input, opts)?;
            match m {
                AnyCoo::Int64(c) => distances(&c, *source),
                AnyCoo::Float64(c) => distances(&c, *source),
                AnyCoo::Complex64(_) => Err(Error::UnsupportedDomain(sgk_core::ValueDomain::Complex64).into()),
            }
        }
        Command::Cc { input } => {
            let (_, m) = load(input, opts)?;
            let labels = on_matrix!(m, |a| connected_components(&a))?;
            let count = labels.values().iter().collect::<BTreeSet<_>>().len();
            let result = json!({ "labels": vector_json(&labels), "components": count });
            Ok(Report::new(result, vector_rows(&labels)))
        }
        Command::Triangles { input } => {
            let (_, m) = load(input, opts)?;
            let t = on_matrix!(m, |a| triangle_count(&a))?;
            Ok(Report::new(json!(t), vec![t.to_string()]))
        }
        Command::Clustering { input } => {
            let (_, m) = load(input, opts)?;
            let c = on_matrix!(m, |a| clustering_coefficients(&a))?;
            Ok(Report::new(vector_json(&c), vector_rows(&c)))
        }
        Command::Pagerank { alpha, tol, max_iters, input } => {
            let (_, m) = load(input, opts)?;
            let r = on_matrix!(m, |a| pagerank(&a, *alpha, *max_iters, *tol))?;
            let result = json!({
                "ranks": vector_json(&r.ranks),
                "iterations": r.iterations,
                "residual": r.residual,
            });
            Ok(Report::new(result, vector_rows(&r.ranks)))
        }
        Command::Mxm { semiring, a, b, output } => {
            let (_, ma) = load(a, opts)?;
            let (_, mb) = load(b, opts)?;
            match (ma, mb) {
                (AnyCoo::Int64(x), AnyCoo::Int64(y)) => product(&x, &y, semiring, output.as_deref()),
                (AnyCoo::Float64(x), AnyCoo::Float64(y)) => product(&x, &y, semiring, output.as_deref()),
                (AnyCoo::Complex64(x), AnyCoo::Complex64(y)) => product(&x, &y, semiring, output.as_deref()),
                (x, y) => Err(mismatch(&x, &y)),
            }
        }
        Command::Mxv { semiring, transpose, a, v } => {
            let (_, ma) = load(a, opts)?;
            let (_, mv) = load(v, opts)?;
            let vector_err = |e| in_file(v, e);
            match (ma, mv) {
                (AnyCoo::Int64(x), AnyCoo::Int64(y)) => apply(&x, &y, semiring, *transpose, vector_err),
                (AnyCoo::Float64(x), AnyCoo::Float64(y)) => apply(&x, &y, semiring, *transpose, vector_err),
                (AnyCoo::Complex64(x), AnyCoo::Complex64(y)) => apply(&x, &y, semiring, *transpose, vector_err),
                (x, y) => Err(mismatch(&x, &y)),
            }
        }
        Command::Convert { input, output } => {
            let (_, m) = load(input, opts)?;
            write_file(output, |w| m.write_matrix_market(w))?;
            let (nrows, ncols) = m.dims();
            let result = json!({
                "output": output.display().to_string(),
                "nrows": nrows,
                "ncols": ncols,
                "nvals": m.nvals(),
                "domain": m.domain().name(),
            });
            Ok(Report::new(result, vec![output.display().to_string()]))
        }
    }
}

fn info(source: Source, m: &AnyCoo) -> Report {
    let (nrows, ncols) = m.dims();
    let symmetric = nrows == ncols && on_matrix!(m, |a| a.is_symmetric().unwrap_or(false));
    let result = json!({
        "nrows": nrows,
        "ncols": ncols,
        "nvals": m.nvals(),
        "symmetric": symmetric,
        "declared_symmetric": m.descriptor().symmetric,
        "domain": m.domain().name(),
        "format": source.name(),
    });
    let rows = result
        .as_object()
        .into_iter()
        .flatten()
        .map(|(k, v)| format!("{k}\t{}", v.as_str().map_or_else(|| v.to_string(), str::to_string)))
        .collect();
    Report::new(result, rows)
}

fn distances<T: Cell + sgk_core::Numeric>(c: &CooMatrix<T>, source: usize) -> Result<Report, Failure> {
    let d = sssp_minplus(&c.to_compressed(Orientation::Csr), source)?;
    Ok(Report::new(vector_json(&d), vector_rows(&d)))
}

fn mismatch(x: &AnyCoo, y: &AnyCoo) -> Failure {
    Error::DomainMismatch { expected: x.domain(), found: y.domain() }.into()
}

fn product<T: Cell>(a: &CooMatrix<T>, b: &CooMatrix<T>, name: &str, output: Option<&Path>) -> Result<Report, Failure> {
    let s = registry_get::<T>(name)?;
    let c = mxm(&a.to_compressed(Orientation::Csr), &b.to_compressed(Orientation::Csr), &s)?;
    let coo = c.to_tuples();
    let mut result = json!({ "nrows": c.nrows(), "ncols": c.ncols(), "nvals": c.nvals() });
    let rows = match output {
        Some(path) => {
            write_file(path, |w| write_matrix_market(&coo, w))?;
            result["output"] = json!(path.display().to_string());
            vec![path.display().to_string()]
        }
        None => {
            let entries: Vec<_> = coo.triples().iter().map(|t| json!([t.row, t.col, t.val.json()])).collect();
            result["entries"] = json!(entries);
            coo.triples().iter().map(|t| format!("{}\t{}\t{}", t.row, t.col, t.val.text())).collect()
        }
    };
    Ok(Report::new(result, rows))
}

fn apply<T: Cell>(
    a: &CooMatrix<T>,
    v: &CooMatrix<T>,
    name: &str,
    transpose: bool,
    vector_err: impl Fn(Error) -> Failure,
) -> Result<Report, Failure> {
    let s = registry_get::<T>(name)?;
    let column = match v.dims() {
        (_, 1) => v.to_compressed(Orientation::Csc),
        (1, _) => v.to_compressed(Orientation::Csr).transpose(),
        (r, c) => return Err(vector_err(Error::DimensionMismatch(format!("expected a vector, found {r}x{c}")))),
    };
    let x = SparseVector::from_column(&column).map_err(&vector_err)?;
    let w = mxv(&a.to_compressed(Orientation::Csr), &x, &s, transpose)?;
    let result = json!({ "length": w.len(), "values": vector_json(&w) });
    Ok(Report::new(result, vector_rows(&w)))
}

fn write_file(path: &Path, f: impl FnOnce(&mut BufWriter<File>) -> sgk_core::Result<()>) -> Result<(), Failure> {
    let file = File::create(path).map_err(|e| in_file(path, e.into()))?;
    let mut w = BufWriter::new(file);
    f(&mut w).map_err(|e| in_file(path, e))?;
    w.flush().map_err(|e| in_file(path, e.into()))
}
