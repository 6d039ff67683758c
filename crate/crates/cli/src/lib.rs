//! The `unigraph` command line: argument parsing, input files, dispatch to
//! unigraph-core and the JSON run report. [`run`] does everything except
//! touch the process's stdout, stderr and exit status, so tests drive it
//! in-process.

mod commands;
pub mod io;
pub mod report;

use clap::{Args, Parser, Subcommand, ValueEnum};
use std::ffi::OsString;
use std::path::PathBuf;
use std::time::Instant;
use unigraph_core::membership::SolverConfig;

pub use report::{exit, RunReport, SCHEMA_VERSION};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] unigraph_core::Error),
    #[error("cannot read {path}: {source}")]
    Read {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("cannot write {path}: {source}")]
    Write {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(unigraph_core::Error::Capacity { .. }) => exit::CAPACITY,
            _ => exit::USAGE,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Parser)]
#[command(name = "unigraph", version, about = "Decide and certify whether a digraph supports a unitary matrix")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Seed for every random choice; recorded in the report.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Report format on standard output.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Debug, Args)]
struct Input {
    /// Digraph file, JSON or plain text.
    #[arg(long = "in", value_name = "PATH")]
    input: PathBuf,
}

#[derive(Debug, Args)]
struct Solver {
    /// Unitarity residual pass threshold.
    #[arg(long, default_value_t = 1e-8)]
    tol: f64,
    /// Smallest modulus allowed on a required entry.
    #[arg(long, default_value_t = 1e-6)]
    delta: f64,
    #[arg(long, default_value_t = 50)]
    restarts: usize,
    #[arg(long = "max-iter", default_value_t = 10_000)]
    max_iter: usize,
}

impl Solver {
    fn config(&self, seed: u64) -> SolverConfig {
        SolverConfig {
            tol: self.tol,
            min_magnitude: self.delta,
            max_iter: self.max_iter,
            restarts: self.restarts,
            seed,
        }
    }
}

#[derive(Debug, Args)]
struct GroupArgs {
    /// Z:n, Z2^k, D:n, S:n, prod:Z:a,Z:b,... or table:PATH
    #[arg(long)]
    group: String,
    /// Comma-separated elements, e.g. 1,5 or (1 2),(1 2 3).
    #[arg(long)]
    gens: String,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run the necessary conditions and report structure.
    Analyze(Input),
    /// Certify membership with a construction or a numerical realization.
    Certify {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        solver: Solver,
    },
    /// Build a Cayley digraph and evaluate the group conditions.
    Cayley {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build the line digraph of the input, or recognize one.
    Linedigraph {
        #[command(flatten)]
        input: Input,
        /// Recognize the input and recover a base instead.
        #[arg(long)]
        recognize: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build and verify the weighing matrix on the k-cube.
    Hypercube {
        #[arg(long)]
        k: u32,
        /// Add a loop at every vertex (weight k+1).
        #[arg(long)]
        loops: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// From two generators, the coset connection set whose Cayley digraph
    /// is a line digraph, with its DFT-block certificate.
    #[command(name = "coset-gens", alias = "theorem1")]
    CosetGens {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Eigenvalues of a circulant, given as Z:n with residues or as a file.
    Spectrum {
        #[arg(long = "in", value_name = "PATH", conflicts_with_all = ["group", "gens"])]
        input: Option<PathBuf>,
        #[arg(long, requires = "gens")]
        group: Option<String>,
        #[arg(long, requires = "group")]
        gens: Option<String>,
    },
    /// Minimum edge entropy of a graph's edge family.
    Sperner {
        #[command(flatten)]
        input: Input,
        /// Search for a better distribution than the uniform one.
        #[arg(long)]
        optimize: bool,
    },
    /// Certify every small connected graph and compare with hamiltonicity.
    Survey {
        #[arg(long = "max-n", default_value_t = 6)]
        max_n: usize,
        #[command(flatten)]
        solver: Solver,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Analyze(_) => "analyze",
            Command::Certify { .. } => "certify",
            Command::Cayley { .. } => "cayley",
            Command::Linedigraph { .. } => "linedigraph",
            Command::Hypercube { .. } => "hypercube",
            Command::CosetGens { .. } => "coset-gens",
            Command::Spectrum { .. } => "spectrum",
            Command::Sperner { .. } => "sperner",
            Command::Survey { .. } => "survey",
        }
    }
}

/// Everything a finished invocation produced.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
    /// Absent when argument parsing failed or help was requested.
    pub report: Option<RunReport>,
}

/// Runs one command line; `argv[0]` is the program name.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let argv: Vec<OsString> = argv.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: exit::USAGE,
                    stdout: String::new(),
                    stderr: text,
                    report: None,
                }
            } else {
                Outcome {
                    code: exit::OK,
                    stdout: text,
                    stderr: String::new(),
                    report: None,
                }
            };
        }
    };

    let start = Instant::now();
    let mut digest = None;
    let outcome = commands::execute(&cli.command, cli.seed, &mut digest);
    let timing_ms = start.elapsed().as_secs_f64() * 1e3;
    let (exit_code, result, error) = match outcome {
        Ok((code, value)) => (code, Some(value), None),
        Err(e) => (e.exit_code(), None, Some(e.to_string())),
    };
    let report = RunReport {
        schema: SCHEMA_VERSION,
        tool: report::TOOL.into(),
        version: env!("CARGO_PKG_VERSION").into(),
        command: cli.command.name().into(),
        args: argv.iter().skip(1).map(|a| a.to_string_lossy().into_owned()).collect(),
        seed: cli.seed,
        input_digest: digest,
        exit_code,
        timing_ms,
        result,
        error: error.clone(),
    };
    Outcome {
        code: exit_code,
        stdout: match cli.format {
            Format::Json => report.to_json(),
            Format::Text => report.to_text(),
        },
        stderr: error.map(|e| format!("error: {e}\n")).unwrap_or_default(),
        report: Some(report),
    }
}
