//! Command-line front end: a text format for structures and operators,
//! verification and construction commands, and human or machine reports.

pub mod commands;
pub mod error;
pub mod format;
pub mod report;
pub mod resolve;

use std::path::PathBuf;
use std::time::Instant;

use baxter_core::rota_baxter::{RbSide, SearchOptions, DEFAULT_BUDGET};
use clap::{Parser, Subcommand};

use crate::commands::{Construction, RbCheckSide};
pub use crate::error::{CliError, CliResult};
pub use crate::format::{parse, to_text, Kind, Object};
pub use crate::report::{Report, ReportMode, Status};

#[derive(Debug, Parser)]
#[command(
    name = "baxter",
    version,
    about = "Exact checks and constructions for Rota-Baxter (co/bi)algebras"
)]
pub struct Cli {
    /// Report format: free-form `human` or line-oriented `machine`.
    #[arg(long, global = true, default_value = "human")]
    pub report: ReportMode,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run axiom checks on a file or builtin.
    Verify {
        input: String,
        /// Comma-separated check names; defaults to every check that applies.
        #[arg(long, value_delimiter = ',')]
        checks: Vec<String>,
    },
    /// Check the Rota-Baxter identity of one or two operators.
    RbCheck {
        structure: String,
        #[arg(long)]
        side: RbCheckSide,
        /// Operator file or builtin; repeat for the bialgebra side (P, then Q).
        #[arg(long = "op", required = true)]
        operators: Vec<String>,
        /// Weight such as `-1` or `1/2`; repeat for the bialgebra side (λ, then γ).
        #[arg(long = "weight", required = true, allow_hyphen_values = true)]
        weights: Vec<String>,
    },
    /// Build a structure or operator and write it to a directory.
    Construct {
        what: Construction,
        /// smash, projection-*: a yd (or Hopf module) file; prelie: a
        /// coalgebra; pi-operator: C H i π.
        #[arg(required = true)]
        inputs: Vec<String>,
        /// Operator for `prelie`.
        #[arg(long = "op")]
        operator: Option<String>,
        /// Weight for `prelie` (-1 or 0).
        #[arg(long, allow_hyphen_values = true)]
        weight: Option<String>,
        /// Output directory.
        #[arg(short = 'o', long = "out")]
        out: PathBuf,
    },
    /// Enumerate every Rota-Baxter operator over a prime field.
    Search {
        structure: String,
        #[arg(long)]
        side: RbSide,
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
        /// Maximum number of candidate matrices.
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u128,
        /// Skip candidates with P∘P ≠ P.
        #[arg(long)]
        idempotent_only: bool,
        /// Worker threads; defaults to the available parallelism.
        #[arg(long)]
        threads: Option<usize>,
        /// Directory for one operator file per result.
        #[arg(short = 'o', long = "out")]
        out: Option<PathBuf>,
    },
    /// List builtin names usable as `builtin:<name>`.
    BuiltinList,
}

/// Runs a parsed command line; `echo` is the command as typed.
pub fn run(cli: &Cli, echo: &str) -> Report {
    let start = Instant::now();
    let mut report = Report::new(echo);
    let result = match &cli.command {
        Command::Verify { input, checks } => commands::verify(&mut report, input, checks),
        Command::RbCheck {
            structure,
            side,
            operators,
            weights,
        } => commands::rb_check(&mut report, structure, *side, operators, weights),
        Command::Construct {
            what,
            inputs,
            operator,
            weight,
            out,
        } => commands::construct(
            &mut report,
            &commands::ConstructArgs {
                what: *what,
                inputs,
                operator: operator.as_deref(),
                weight: weight.as_deref(),
                out_dir: out,
            },
        ),
        Command::Search {
            structure,
            side,
            weight,
            budget,
            idempotent_only,
            threads,
            out,
        } => {
            let mut options = SearchOptions {
                idempotent_only: *idempotent_only,
                budget: *budget,
                ..SearchOptions::default()
            };
            if let Some(t) = threads {
                options.threads = *t;
            }
            commands::search(
                &mut report,
                &commands::SearchArgs {
                    structure,
                    side: *side,
                    weight,
                    options,
                    out_dir: out.as_deref(),
                },
            )
        }
        Command::BuiltinList => {
            commands::builtin_list(&mut report);
            Ok(())
        }
    };
    if let Err(e) = result {
        report.fail_with(e);
    }
    report.elapsed = start.elapsed();
    report
}
