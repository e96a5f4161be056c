//! `sgk`: run sparse graph kernels and algorithms on Matrix Market files and
//! edge lists.

mod commands;
mod input;
mod report;

use clap::{Args, Parser, Subcommand, ValueEnum};
use sgk_core::Error;
use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

const AFTER_HELP: &str = "\
Vertex indices on the command line and in all output are 0-based, even though
Matrix Market files number rows and columns from 1.

Inputs starting with a %%MatrixMarket banner are read as Matrix Market; anything
else is read as a whitespace-separated edge list `src dst [weight]`.

Exit status: 0 success, 1 usage error, 2 data or parse error, 3 algorithm
precondition failure. SGK_THREADS=N limits kernel parallelism to N threads.";

#[derive(Debug, Parser)]
#[command(name = "sgk", version, about = "Sparse graph kernels over semirings", after_help = AFTER_HELP)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub opts: GlobalOpts,
}

#[derive(Debug, Args)]
pub struct GlobalOpts {
    /// Output encoding.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Edge lists carry a third weight column.
    #[arg(long, global = true)]
    pub weighted: bool,
    /// Edge lists describe undirected edges (each line adds both directions).
    #[arg(long, global = true)]
    pub undirected: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Tsv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Dir {
    In,
    Out,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Dimensions, stored entries, symmetry and value domain.
    Info { input: PathBuf },
    /// In- or out-degree of every vertex.
    Degrees {
        #[arg(long, value_enum, default_value_t = Dir::Out)]
        dir: Dir,
        input: PathBuf,
    },
    /// Breadth-first levels from one or more sources.
    Bfs {
        /// Comma-separated source vertices.
        #[arg(long, value_delimiter = ',', required = true)]
        source: Vec<usize>,
        input: PathBuf,
    },
    /// Shortest path distances (non-negative weights).
    Sssp {
        #[arg(long)]
        source: usize,
        input: PathBuf,
    },
    /// Connected component labels (smallest vertex in each component).
    Cc { input: PathBuf },
    /// Number of triangles in an undirected simple graph.
    Triangles { input: PathBuf },
    /// Local clustering coefficients.
    Clustering { input: PathBuf },
    /// PageRank by power iteration.
    Pagerank {
        #[arg(long, default_value_t = 0.85, allow_negative_numbers = true)]
        alpha: f64,
        #[arg(long, default_value_t = 1e-8)]
        tol: f64,
        #[arg(long = "max-iters", default_value_t = 100)]
        max_iters: usize,
        input: PathBuf,
    },
    /// Matrix-matrix product over a named semiring.
    Mxm {
        #[arg(long)]
        semiring: String,
        a: PathBuf,
        b: PathBuf,
        /// Write the product here as Matrix Market instead of printing it.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Matrix-vector product over a named semiring. The vector is an n x 1
    /// or 1 x n Matrix Market file.
    Mxv {
        #[arg(long)]
        semiring: String,
        /// Multiply by the transpose of A.
        #[arg(long)]
        transpose: bool,
        a: PathBuf,
        v: PathBuf,
    },
    /// Re-encode a matrix as general Matrix Market.
    Convert {
        input: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Info { .. } => "info",
            Command::Degrees { .. } => "degrees",
            Command::Bfs { .. } => "bfs",
            Command::Sssp { .. } => "sssp",
            Command::Cc { .. } => "cc",
            Command::Triangles { .. } => "triangles",
            Command::Clustering { .. } => "clustering",
            Command::Pagerank { .. } => "pagerank",
            Command::Mxm { .. } => "mxm",
            Command::Mxv { .. } => "mxv",
            Command::Convert { .. } => "convert",
        }
    }
}

/// Failure of one invocation, carrying its exit status.
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Data(String),
    Precondition(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 1,
            Failure::Data(_) => 2,
            Failure::Precondition(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Data(m) | Failure::Precondition(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let msg = e.to_string().replace('\n', " ");
        match e {
            Error::UnknownSemiring(_) => Failure::Usage(msg),
            e if e.is_precondition() => Failure::Precondition(msg),
            _ => Failure::Data(msg),
        }
    }
}

fn configure_threads() -> Result<(), Failure> {
    let Some(raw) = std::env::var_os("SGK_THREADS") else { return Ok(()) };
    let n: usize = raw
        .to_str()
        .and_then(|s| s.trim().parse().ok())
        .filter(|&n| n > 0)
        .ok_or_else(|| Failure::Usage(format!("SGK_THREADS must be a positive integer, got {raw:?}")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| Failure::Usage(format!("SGK_THREADS: {e}")))
}

fn run<I: IntoIterator<Item = OsString>>(argv: I) -> Result<String, Failure> {
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            // --help and --version
            return Ok(e.to_string());
        }
        Err(e) => {
            let text = e.to_string();
            let summary: Vec<_> = text.lines().map(str::trim).take_while(|l| !l.is_empty()).collect();
            return Err(Failure::Usage(summary.join(" ").trim_start_matches("error: ").to_string()));
        }
    };
    configure_threads()?;
    commands::validate(&cli.command)?;
    let start = Instant::now();
    let report = commands::execute(&cli.command, &cli.opts)?;
    let elapsed_ms = start.elapsed().as_secs_f64() * 1e3;
    Ok(report.render(cli.command.name(), cli.opts.format, elapsed_ms))
}

fn main() -> ExitCode {
    match run(std::env::args_os()) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(out.as_bytes());
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("{}", f.message());
            ExitCode::from(f.code())
        }
    }
}
