//! Batch command-line front end: argument parsing, desk-scale limits and report rendering.
//!
//! Every command builds a [`Report`]: a JSON document, a flat table for CSV/table output and a
//! pass/fail flag. Rationals are always written as `"p/q"` strings.

mod commands;
mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::Value;

use crate::amplitude::Backend;
use crate::error::Error;

pub use commands::{cmd_amplitude, cmd_fixed_points, cmd_polytope, cmd_verify, limits_table};
pub use render::render;

#[derive(Parser, Debug)]
#[command(name = "pk", version, about = "Exact CEGM amplitudes, tropical integrals and polytopes at planar kinematics")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,
    #[command(subcommand)]
    pub command: Option<Command>,
}

#[derive(Args, Debug, Clone)]
pub struct GlobalOpts {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    /// Worker threads for the parallel fan-outs.
    #[arg(long, env = "PK_WORKERS", global = true)]
    pub workers: Option<usize>,
    /// Seed for randomized oracle checks.
    #[arg(long, default_value_t = 0, global = true)]
    pub seed: u64,
    /// Print recommended (k, n) bounds and runtimes per command, then exit.
    #[arg(long, global = true)]
    pub limits: bool,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Lyndon count, aperiodic classes, defective classes and solutions of the PK equations.
    FixedPoints(KnArgs),
    /// m^(k)_n at planar kinematics, by summing over solutions or by the tropical integral.
    Amplitude(AmplitudeArgs),
    /// Π_{k,n} or the root polytope R_{k,n}.
    Polytope(PolytopeArgs),
    /// Cross-ratio, involution, gauge and cross-module checks.
    Verify(VerifyArgs),
}

#[derive(Args, Debug, Clone, Copy)]
pub struct KnArgs {
    #[arg(short = 'k')]
    pub k: usize,
    #[arg(short = 'n')]
    pub n: usize,
}

#[derive(Args, Debug, Clone)]
pub struct AmplitudeArgs {
    #[command(flatten)]
    pub kn: KnArgs,
    #[arg(long, value_enum, default_value_t = Method::Solutions)]
    pub method: Method,
    /// Arithmetic for the solution sum; defaults to exact at desk scale.
    #[arg(long, value_enum)]
    pub backend: Option<BackendArg>,
    /// Kinematic point as JSON (tropical method only); defaults to PK.
    #[arg(long)]
    pub kinematics: Option<PathBuf>,
    /// Include the value of every linearity region.
    #[arg(long)]
    pub breakdown: bool,
}

#[derive(Args, Debug, Clone)]
pub struct PolytopeArgs {
    #[command(flatten)]
    pub kn: KnArgs,
    #[arg(long, value_enum, default_value_t = Which::Root)]
    pub which: Which,
    /// Also run the duality and Newton-polytope checks.
    #[arg(long)]
    pub checks: bool,
}

#[derive(Args, Debug, Clone)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub kn: KnArgs,
    /// Force the solution-sum amplitude check even above desk scale.
    #[arg(long)]
    pub amplitude: bool,
    /// Number of random points for the oracle checks.
    #[arg(long, default_value_t = 3)]
    pub samples: usize,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Table,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Solutions,
    Tropical,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum BackendArg {
    Exact,
    Float,
}

impl From<BackendArg> for Backend {
    fn from(b: BackendArg) -> Backend {
        match b {
            BackendArg::Exact => Backend::Exact,
            BackendArg::Float => Backend::Float,
        }
    }
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Which {
    Pi,
    Root,
}

/// Outcome of one command.
#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub json: Value,
    /// Header and rows for CSV and table output.
    pub table: (Vec<String>, Vec<Vec<String>>),
    /// All requested checks passed.
    pub ok: bool,
}

pub const EXIT_OK: u8 = 0;
pub const EXIT_CHECK_FAILED: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_RESOURCE: u8 = 3;

/// Exit status for a library error.
pub fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::ResourceLimit(_) => EXIT_RESOURCE,
        Error::InvalidInput(_) | Error::Parse(_) => EXIT_USAGE,
        _ => EXIT_CHECK_FAILED,
    }
}

/// Validate `2 ≤ k ≤ n - 2`.
pub fn check_kn(kn: KnArgs) -> Result<(), Error> {
    if kn.k < 2 || kn.n < kn.k + 2 {
        return Err(Error::InvalidInput(format!("need 2 ≤ k ≤ n-2, got k = {}, n = {}", kn.k, kn.n)));
    }
    Ok(())
}

/// Run one parsed command line.
pub fn run(cli: &Cli) -> Result<Report, Error> {
    match &cli.command {
        _ if cli.global.limits => Ok(limits_table()),
        None => Err(Error::InvalidInput("no command given; see --help".into())),
        Some(Command::FixedPoints(a)) => cmd_fixed_points(*a),
        Some(Command::Amplitude(a)) => cmd_amplitude(a),
        Some(Command::Polytope(a)) => cmd_polytope(a),
        Some(Command::Verify(a)) => cmd_verify(a, cli.global.seed),
    }
}

/// Entry point of the `pk` binary.
pub fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { EXIT_OK });
        }
    };
    if let Some(w) = cli.global.workers {
        if w == 0 {
            eprintln!("error: --workers must be positive");
            return ExitCode::from(EXIT_USAGE);
        }
        // fails only if a pool already exists, in which case the existing one is used
        let _ = rayon::ThreadPoolBuilder::new().num_threads(w).build_global();
    }
    let report = match run(&cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(exit_code_for(&e));
        }
    };
    let text = render(&report, cli.global.format);
    match &cli.global.output {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &text) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(EXIT_USAGE);
            }
        }
        None => print!("{text}"),
    }
    ExitCode::from(if report.ok { EXIT_OK } else { EXIT_CHECK_FAILED })
}
