//! `tbounds`: bounds tables, exact search, constructions, verification,
//! counting and asymptotic curves for ternary codes under the d1 distance.

mod commands;
mod output;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use output::Format;

#[derive(Debug, Parser)]
#[command(name = "tbounds", version, about = "Bounds on ternary codes under the d1 distance")]
struct Cli {
    /// Output format (default: csv for `asym`, text otherwise).
    #[arg(long, value_enum, global = true)]
    format: Option<Format>,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Seed for randomized strategies.
    #[arg(long, default_value_t = 0, global = true)]
    seed: u64,
    /// Worker threads (default: available cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Lower and upper bounds on T(n,d) with provenance.
    Table(TableArgs),
    /// Maximum-clique search for T(n,d) or A_q(n,d).
    Exact(ExactArgs),
    /// Build an explicit code and report its size and distance.
    Construct(ConstructArgs),
    /// Check the minimum distance of a codebook file.
    Verify(VerifyArgs),
    /// Pair counts, shell spheres and average ball volumes.
    Counts(CountsArgs),
    /// Asymptotic rate curves.
    Asym(AsymArgs),
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[arg(long)]
    pub nmax: usize,
    #[arg(long)]
    pub dmax: u32,
    /// Also run clique search on T(n,d) where 3^n fits the vertex limit.
    #[arg(long)]
    pub search: bool,
    /// Node budget for each search.
    #[arg(long, default_value_t = 20_000)]
    pub budget: u64,
    /// Only closed forms, bundled values and GV/Singleton for A_q(n,d).
    #[arg(long)]
    pub no_hamming_search: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MetricArg {
    D1,
    Hamming,
}

#[derive(Debug, Args)]
pub struct ExactArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub d: u32,
    #[arg(long, value_enum, default_value_t = MetricArg::D1)]
    pub metric: MetricArg,
    /// Alphabet size for the Hamming metric.
    #[arg(long, default_value_t = 2)]
    pub q: u8,
    /// Restrict to the shell of words with this many nonzeros (d1 only).
    #[arg(long)]
    pub weight: Option<usize>,
    #[arg(long, default_value_t = ternary_bounds::search::DEFAULT_BUDGET)]
    pub budget: u64,
    /// Search the whole graph without orbit representatives.
    #[arg(long)]
    pub no_symmetry: bool,
    /// Write the best code found to this codebook file.
    #[arg(long)]
    pub witness: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    EvenZeros,
    Greedy,
    SignedBinary,
    Support,
    CosetScan,
    PhiShift,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OrderArg {
    Lex,
    Shuffled,
}

#[derive(Debug, Args)]
pub struct ConstructArgs {
    #[arg(long, value_enum)]
    pub family: Family,
    #[arg(long)]
    pub n: usize,
    /// Target d1 distance.
    #[arg(long, default_value_t = 2)]
    pub d: u32,
    /// Word order for the greedy family.
    #[arg(long, value_enum, default_value_t = OrderArg::Lex)]
    pub order: OrderArg,
    /// Binary codebook used as input (signed-binary, phi-shift) or outer
    /// code (support, coset-scan).
    #[arg(long)]
    pub input: Option<PathBuf>,
    /// Random shifts to try for phi-shift; 0 means exhaustive.
    #[arg(long, default_value_t = 0)]
    pub trials: usize,
    /// Write the constructed code to this codebook file.
    #[arg(long)]
    pub witness: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long)]
    pub code: PathBuf,
    /// Required minimum distance in the codebook's metric.
    #[arg(long)]
    pub d: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CountKind {
    /// m(n,w), ordered pairs at distance w.
    Pairs,
    /// Shell words at each distance from a fixed shell word (needs --w).
    Shell,
    /// Average ball volume and the GV bound per radius.
    Ball,
}

#[derive(Debug, Args)]
pub struct CountsArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, value_enum, default_value_t = CountKind::Pairs)]
    pub kind: CountKind,
    /// Shell weight for `--kind shell`.
    #[arg(long)]
    pub w: Option<usize>,
}

#[derive(Debug, Args)]
pub struct AsymArgs {
    #[arg(long, default_value_t = 0.01)]
    pub from: f64,
    #[arg(long, default_value_t = 0.99)]
    pub to: f64,
    #[arg(long, default_value_t = 0.01)]
    pub step: f64,
    /// Comma-separated family names (default: all).
    #[arg(long, value_delimiter = ',')]
    pub families: Vec<String>,
    /// Compare closed-form optimizers with grid suprema and report.
    #[arg(long)]
    pub verify_optimizers: bool,
}

/// A report plus the process status it implies.
pub struct Outcome {
    pub table: output::Table,
    /// Set when the run completed but the check it performed failed.
    pub failure: Option<String>,
}

fn run(cli: Cli) -> Result<Option<String>> {
    if let Some(t) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()
            .context("configuring the worker pool")?;
    }
    let (outcome, default_format) = match &cli.command {
        Command::Table(a) => (commands::table(a)?, Format::Text),
        Command::Exact(a) => (commands::exact(a)?, Format::Text),
        Command::Construct(a) => (commands::construct(a, cli.seed)?, Format::Text),
        Command::Verify(a) => (commands::verify(a)?, Format::Text),
        Command::Counts(a) => (commands::counts(a)?, Format::Text),
        Command::Asym(a) => (commands::asym(a)?, Format::Csv),
    };
    let format = cli.format.unwrap_or(default_format);
    match &cli.out {
        Some(path) => {
            let file = File::create(path)
                .with_context(|| format!("cannot create {}", path.display()))?;
            let mut w = BufWriter::new(file);
            outcome.table.write(format, &mut w)?;
            w.flush()?;
        }
        None => {
            let stdout = io::stdout();
            let mut w = stdout.lock();
            outcome.table.write(format, &mut w)?;
            w.flush()?;
        }
    }
    Ok(outcome.failure)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(None) => ExitCode::SUCCESS,
        Ok(Some(msg)) => {
            eprintln!("check failed: {msg}");
            ExitCode::from(1)
        }
        // a closed pipe (`tbounds ... | head`) is not an error
        Err(e)
            if e
                .downcast_ref::<io::Error>()
                .is_some_and(|io| io.kind() == io::ErrorKind::BrokenPipe) =>
        {
            ExitCode::SUCCESS
        }
        // clap exits with 2 on usage errors
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(3)
        }
    }
}
