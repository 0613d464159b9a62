//! `spin-nh`: command-line front end for the spin nilHecke toolkit.
//!
//! Exit status: 0 when every requested check passes, 1 when a check fails or
//! a computation cannot be completed, 2 for usage errors.

mod commands;

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "spin-nh",
    version,
    about = "Exact computations in spin nilHecke algebras of types A, B and D"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Emit the JSON report (same as `--format json`).
    #[arg(long, global = true)]
    pub json: bool,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Seed for randomized suites.
    #[arg(long, global = true, default_value_t = 20_240_601)]
    pub seed: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Args, Debug, Clone)]
pub struct Target {
    #[arg(long, default_value = "spin")]
    pub variant: String,
    #[arg(long = "type", default_value = "b")]
    pub ty: String,
    #[arg(long, default_value_t = 2)]
    pub rank: usize,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check every defining relation on all monomials up to a degree.
    Verify {
        #[command(flatten)]
        target: Target,
        #[arg(long, default_value_t = 8)]
        max_degree: u32,
    },
    /// Schubert polynomials and the constants ∂_w(𝔰_w).
    Schubert {
        #[command(flatten)]
        target: Target,
        /// One element, as a window `[2,-1]` or a word `s1 s2`.
        #[arg(long)]
        element: Option<String>,
        /// All elements (the default when no element is given).
        #[arg(long)]
        all: bool,
    },
    /// Symmetric rings: membership, generator expressions, graded rank.
    Lambda {
        #[command(flatten)]
        target: Target,
        #[arg(long, value_enum, default_value_t = LambdaOp::Series)]
        op: LambdaOp,
        /// Polynomial for `member` and `express`, e.g. `x1^2*x2^2`.
        #[arg(long)]
        poly: Option<String>,
        #[arg(long, default_value_t = 20)]
        truncate: i64,
    },
    /// PBW normal form of an operator expression such as `d1 x1 + x1 d1`.
    Pbw {
        #[command(flatten)]
        target: Target,
        #[arg(long)]
        expr: String,
    },
    /// Matrix over the symmetric ring of an operator expression.
    Matrix {
        #[command(flatten)]
        target: Target,
        #[arg(long)]
        expr: String,
        /// Scalar domain: int, dyadic or rational (default: int for A/B,
        /// dyadic for D).
        #[arg(long)]
        domain: Option<String>,
    },
    /// Solve every constant matrix unit.
    MatrixUnits {
        #[command(flatten)]
        target: Target,
        #[arg(long)]
        domain: Option<String>,
    },
    /// Compare the center with the symmetric polynomials in squares.
    Center {
        #[command(flatten)]
        target: Target,
        #[arg(long, default_value_t = 8)]
        degree_cap: u32,
    },
    /// Graded rank by enumeration against the closed form.
    RankSeries {
        #[command(flatten)]
        target: Target,
        #[arg(long, default_value = "nh")]
        what: String,
        #[arg(long, default_value_t = 20)]
        truncate: i64,
    },
    /// Run every acceptance criterion.
    CheckAll {
        #[arg(long, value_enum, default_value_t = ProfileArg::Quick)]
        profile: ProfileArg,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum LambdaOp {
    Member,
    Express,
    Series,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ProfileArg {
    Quick,
    Full,
}

fn configure_threads() -> Result<(), String> {
    if let Ok(v) = std::env::var("SPIN_NH_THREADS") {
        let n: usize = v
            .trim()
            .parse()
            .map_err(|_| format!("SPIN_NH_THREADS must be a positive integer, got `{v}`"))?;
        if n == 0 {
            return Err("SPIN_NH_THREADS must be positive".into());
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| e.to_string())?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = configure_threads() {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    let json = cli.json || cli.format == Format::Json;
    match commands::run(&cli) {
        Ok(out) => {
            let body = if json {
                format!("{}\n", out.report.to_json())
            } else {
                format!("{}{}", out.text, out.report.to_text())
            };
            // a closed pipe (e.g. `| head`) is not an error
            let _ = std::io::stdout().lock().write_all(body.as_bytes());
            if out.report.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(commands::CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(commands::CliError::Failed(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
