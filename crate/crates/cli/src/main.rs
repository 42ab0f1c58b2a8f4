//! `opuc`: batch front end for measures, Schur parameters and orthogonal
//! polynomials on the unit circle.
//!
//! Exit codes: 0 success, 1 verification failure, 2 input error,
//! 3 mass normalization error, 4 depth or resolution error.

mod commands;
mod error;
mod output;
mod source;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};

use crate::error::CliError;
use crate::source::Source;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Command {
    Moments,
    SchurParams,
    Opuc,
    Wall,
    Associated,
    Verify,
    Recover,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(
    name = "opuc",
    version,
    about = "Schur parameters, OPUC and measure recovery"
)]
struct Args {
    command: Command,

    /// Measure spec, `{"coefficients": [..]}` or `{"moments": [..]}` JSON file.
    #[arg(long, conflicts_with = "preset")]
    input: Option<PathBuf>,

    /// lebesgue | mixture[:t] | geronimus:a | bernstein-szego:a0,a1,.. | atom[:theta]
    #[arg(long)]
    preset: Option<String>,

    /// Truncation order: F and the moments are kept up to index N.
    #[arg(long = "N", default_value_t = 64)]
    n: usize,

    /// Number of parameters or polynomial degree; defaults to min(20, N - 1).
    #[arg(long)]
    depth: Option<usize>,

    #[arg(long, default_value_t = 1)]
    k: usize,

    /// Inversion radius for `recover`.
    #[arg(long, default_value_t = 0.999)]
    r: f64,

    /// Number of CDF intervals for `recover`; a power of two, at least 64.
    #[arg(long, default_value_t = 2048)]
    grid: usize,

    /// Defaults to csv for `recover` and json otherwise.
    #[arg(long, value_enum)]
    format: Option<Format>,

    /// Seed of the random coefficients `verify` uses when no source is given.
    #[arg(long, default_value_t = 42)]
    seed: u64,

    #[arg(long)]
    out: Option<PathBuf>,
}

/// Validated run parameters.
pub struct Config {
    command: Command,
    pub n: usize,
    pub depth: usize,
    pub k: usize,
    pub r: f64,
    pub grid: usize,
    format: Option<Format>,
}

impl Config {
    pub fn format(&self) -> Format {
        self.format.unwrap_or(if self.command == Command::Recover {
            Format::Csv
        } else {
            Format::Json
        })
    }
}

fn validate(args: &Args) -> Result<Config, CliError> {
    let depth = args.depth.unwrap_or(args.n.saturating_sub(1).min(20));
    if args.n < depth + 1 {
        return Err(CliError::Resolution(format!(
            "N = {} must be at least depth + 1 = {}",
            args.n,
            depth + 1
        )));
    }
    if !(args.r > 0.0 && args.r < 1.0) {
        return Err(CliError::Schema(format!(
            "r = {} must lie in (0, 1)",
            args.r
        )));
    }
    if args.grid < 64 || !args.grid.is_power_of_two() {
        return Err(CliError::Schema(format!(
            "grid = {} must be a power of two >= 64",
            args.grid
        )));
    }
    Ok(Config {
        command: args.command,
        n: args.n,
        depth,
        k: args.k,
        r: args.r,
        grid: args.grid,
        format: args.format,
    })
}

fn source(args: &Args, cfg: &Config) -> Result<Source, CliError> {
    match (&args.input, &args.preset) {
        (Some(path), _) => Source::from_file(path),
        (None, Some(name)) => Source::preset(name),
        (None, None) if args.command == Command::Verify => Source::random(args.seed, cfg.depth),
        (None, None) => Err(CliError::Schema(
            "one of --input or --preset is required".into(),
        )),
    }
}

fn run(args: &Args) -> Result<bool, CliError> {
    let cfg = validate(args)?;
    let src = source(args, &cfg)?;
    let outcome = match cfg.command {
        Command::Moments => commands::moments(&cfg, &src),
        Command::SchurParams => commands::schur_params(&cfg, &src),
        Command::Opuc => commands::opuc(&cfg, &src),
        Command::Wall => commands::wall(&cfg, &src),
        Command::Associated => commands::associated(&cfg, &src),
        Command::Verify => commands::verify(&cfg, &src),
        Command::Recover => commands::recover(&cfg, &src),
    }?;
    output::emit(&outcome.bytes, args.out.as_deref())?;
    Ok(outcome.pass)
}

fn main() -> ExitCode {
    let args = Args::parse();
    match run(&args) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => {
            eprintln!("opuc: verification failed");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("opuc: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
