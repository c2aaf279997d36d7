//! Command-line driver: parse a problem description, run the
//! construction, and emit human- and machine-readable certificates.

mod config;
mod moore;
mod parametrize;
mod pipeline;
mod report;
mod style;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(
    name = "noname",
    version,
    about = "Exact transcendence bases for invariant fields of (signed) permutation actions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ConstructionArg {
    Auto,
    Permutation,
    Signed,
}

impl ConstructionArg {
    fn to_construction(self) -> noname::Construction {
        match self {
            ConstructionArg::Auto => noname::Construction::Auto,
            ConstructionArg::Permutation => noname::Construction::Permutation,
            ConstructionArg::Signed => noname::Construction::Signed,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Build the invariant generators for a problem description and emit
    /// a certificate report.
    Parametrize {
        config: PathBuf,
        /// Write the JSON report here.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Output format on stdout.
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Overrides the config seed for the normal-element search.
        #[arg(long)]
        seed: Option<u64>,
        /// Search for alpha even when the config provides one.
        #[arg(long)]
        find_alpha: bool,
        /// Overrides the config construction.
        #[arg(long, value_enum)]
        construction: Option<ConstructionArg>,
    },
    /// Re-check a previously emitted report against its config from
    /// scratch.
    Verify { report: PathBuf, config: PathBuf },
    /// Print the Moore matrix of a tuple over F_(p^e) with its
    /// determinant and independence verdict.
    Moore {
        /// Characteristic (prime).
        #[arg(long)]
        p: u64,
        /// Extension degree.
        #[arg(long)]
        e: u32,
        /// Comma-separated tuple of polynomial expressions in t,
        /// e.g. "t,1" or "t^2+1,t,1".
        #[arg(long, conflicts_with = "random")]
        tuple: Option<String>,
        /// Draw this many random tuples instead and cross-check
        /// invertibility against independence.
        #[arg(long)]
        random: Option<u64>,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Tuple length for --random (defaults to e).
        #[arg(long)]
        n: Option<usize>,
    },
}

/// Stage-tagged CLI failure with the documented exit code.
#[derive(Debug)]
pub struct CliError {
    code: u8,
    stage: &'static str,
    message: String,
}

impl CliError {
    pub fn input(message: String) -> CliError {
        CliError { code: 2, stage: "parse", message }
    }

    pub fn verify(check: &'static str, message: String) -> CliError {
        CliError { code: 5, stage: check, message }
    }

    pub fn internal(message: String) -> CliError {
        CliError { code: 4, stage: "internal", message }
    }

    pub fn exit_code(&self) -> u8 {
        self.code
    }
}

impl From<noname::Error> for CliError {
    fn from(e: noname::Error) -> CliError {
        use noname::Error::*;
        let (code, stage) = match &e {
            DivisionByZero => (4, "arithmetic"),
            Internal(_) => (4, "internal"),
            SingularMatrix => (4, "internal"),
            NotPrime(_) => (3, "base"),
            ReducibleModulus { .. } | IrreducibilityUnverified => (3, "irreducibility"),
            NotSignedPermutation(_) => (3, "classification"),
            ClosureCapExceeded { .. } => (3, "closure"),
            PresentationInvalid(_) => (3, "presentation"),
            IsoInvalid(_) => (3, "iso"),
            NotNormal => (3, "normality"),
            SearchFailed { .. } => (3, "search"),
            BaseMismatch(_) | Usage(_) => (3, "usage"),
        };
        CliError { code, stage, message: e.to_string() }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "error[stage={}]: {}", self.stage, self.message)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Parametrize { config, out, format, seed, find_alpha, construction } => {
            parametrize::run(
                &config,
                out.as_deref(),
                matches!(format, Format::Json),
                seed,
                find_alpha,
                construction.map(ConstructionArg::to_construction),
            )
        }
        Command::Verify { report, config } => verify::run(&report, &config),
        Command::Moore { p, e, tuple, random, seed, n } => {
            moore::run(p, e, tuple.as_deref(), random, seed, n)
        }
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(e.exit_code())
        }
    }
}
