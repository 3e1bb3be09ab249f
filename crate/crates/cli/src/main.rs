//! `su2-strata`: batch front end for stratum classification, trace invariants,
//! symbolic reduction, radical checks and lattice computations.
//!
//! Every run prints one JSON document on standard output. Failures print an
//! error object `{"error", "detail", "location"}` instead, with a one-line
//! diagnostic on standard error, and exit with 1 (domain error) or 2 (I/O,
//! parse or usage error).

mod commands;
mod error;
mod schema;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::CliError;

/// Environment variable overriding the default tolerance.
pub const TOL_ENV: &str = "SU2STRATA_TOL";

#[derive(Debug, Parser)]
#[command(name = "su2-strata", version, about = "Orbit-type strata and trace invariants for SU(2) lattice gauge models")]
#[command(subcommand_required = false, arg_required_else_help = true)]
pub struct Cli {
    /// Print the JSON schema of a subcommand's output and exit.
    #[arg(long, value_name = "SUBCOMMAND")]
    schema: Option<SchemaName>,

    #[command(subcommand)]
    command: Option<Command>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SchemaName {
    Classify,
    Witness,
    Invariants,
    Sample,
    Reduce,
    RadicalCheck,
    GaugeFix,
    Energy,
    MeasureDensity,
    Error,
}

/// Float tolerance shared by all subcommands.
#[derive(Debug, Clone, Args)]
pub struct TolArgs {
    /// Float tolerance (> 0); defaults to $SU2STRATA_TOL, else 1e-10 for matrix
    /// residuals and 1e-9 for scalar comparisons.
    #[arg(long, env = TOL_ENV, allow_negative_numbers = true)]
    pub tol: Option<f64>,
}

#[derive(Debug, Clone, Args)]
pub struct TupleInput {
    /// JSON file with an array of matrices or {"tuple": [...]}.
    #[arg(long)]
    pub input: PathBuf,
    /// Read entries as exact Gaussian rationals.
    #[arg(long)]
    pub exact: bool,
    #[command(flatten)]
    pub tol: TolArgs,
}

#[derive(Debug, Clone, Args)]
pub struct LatticeArgs {
    /// "LxW", "LxW,periodic" or a lattice JSON file.
    #[arg(long)]
    pub lattice: String,
    /// JSON file {"links": [...], "electric": [...]}; random links when absent.
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Seed for the random configuration.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[command(flatten)]
    pub tol: TolArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SampleKind {
    Su2,
    Su2Algebra,
    Sl2c,
    ExactSl2c,
    Mu0,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Sector {
    Generic,
    Diagonal,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Smallest stratum closure containing a tuple or phase point.
    Classify {
        #[command(flatten)]
        input: TupleInput,
        /// Input is a phase point {"a": [...], "A": [...]}.
        #[arg(long, conflicts_with = "exact")]
        phase_point: bool,
    },
    /// Conjugator and diagonal limit for a tuple in the torus closure.
    Witness {
        #[command(flatten)]
        input: TupleInput,
    },
    /// Table of trace invariants t and defining relations pT.
    Invariants {
        #[command(flatten)]
        input: TupleInput,
    },
    /// Seeded random group, algebra or phase-space samples.
    Sample {
        #[arg(long, value_enum)]
        kind: SampleKind,
        #[arg(long, default_value_t = 1)]
        count: usize,
        /// Master seed; per-sample seeds are drawn from it.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Algebra-norm bound (su2-algebra) or entry bound (sl2c).
        #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
        bound: f64,
        /// Number of entries of a mu0 phase point.
        #[arg(long, default_value_t = 2)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Sector::Generic)]
        sector: Sector,
    },
    /// Adapted-basis coordinates and ideal membership of a trace polynomial.
    Reduce {
        /// Text file holding the polynomial.
        #[arg(long)]
        poly: PathBuf,
        /// Number of matrices; every index must be at most N.
        #[arg(long)]
        n: usize,
    },
    /// Randomized falsification of the radical property.
    RadicalCheck {
        #[arg(long)]
        n: usize,
        /// Degree vector such as 2,1,1.
        #[arg(long, value_delimiter = ',', required = true)]
        mu: Vec<usize>,
        #[arg(long, default_value_t = 200)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Maximal-tree gauge fixing of a lattice configuration.
    GaugeFix {
        #[command(flatten)]
        lattice: LatticeArgs,
    },
    /// Kogut-Susskind energy of a lattice configuration.
    Energy {
        #[command(flatten)]
        lattice: LatticeArgs,
        #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
        coupling: f64,
        #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
        spacing: f64,
    },
    /// Kähler measure density e^{-κ/ħ} η of SL(2,C) entries.
    MeasureDensity {
        #[command(flatten)]
        input: TupleInput,
        /// Input is a phase point, complexified entrywise.
        #[arg(long, conflicts_with = "exact")]
        phase_point: bool,
        #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
        hbar: f64,
    },
}

/// Writes one line to standard output; a closed pipe is not an error.
fn emit(value: &serde_json::Value) {
    let mut out = std::io::stdout().lock();
    let _ = writeln!(out, "{value}");
}

fn fail(err: &CliError) -> ExitCode {
    eprintln!("su2-strata: {}: {}", err.kind(), err.detail());
    emit(&err.to_json());
    ExitCode::from(err.exit_code() as u8)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            // --help and --version
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let rendered = e.render().to_string();
            let first = rendered.lines().next().unwrap_or_default();
            let detail = first.trim_start_matches("error: ").to_string();
            return fail(&CliError::Usage(detail));
        }
    };
    let result = match (cli.schema, cli.command) {
        (Some(name), None) => Ok(schema::schema(name)),
        (None, Some(command)) => commands::run(command),
        _ => Err(CliError::Usage(
            "give exactly one of --schema or a subcommand".into(),
        )),
    };
    match result {
        Ok(value) => {
            emit(&value);
            ExitCode::SUCCESS
        }
        Err(err) => fail(&err),
    }
}
