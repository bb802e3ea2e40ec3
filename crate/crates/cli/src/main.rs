//! `glider-ring`: command-line front end for the glider engine.

mod commands;
mod text;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use glider_core::Error;

/// Exit status for data errors (bad group file, unparsable key, invalid input).
pub const EXIT_DATA: u8 = 65;
/// Exit status for usage errors.
pub const EXIT_USAGE: u8 = 64;
/// Exit status for internal invariant violations.
pub const EXIT_INTERNAL: u8 = 70;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Clone, Args)]
pub struct Options {
    /// Output format.
    #[arg(long, value_enum, default_value = "json", global = true)]
    pub format: Format,
    /// Seed for all randomized sampling.
    #[arg(long, default_value_t = 0, global = true)]
    pub seed: u64,
    /// Cap on the number of powers computed in semigroup orbits.
    #[arg(long, default_value_t = glider_core::glider_ring::DEFAULT_MAX_ITER, global = true)]
    pub max_iter: usize,
    /// Number of random samples (probe: 200; decompose: 50 multiplicativity pairs).
    #[arg(long, global = true)]
    pub samples: Option<usize>,
    /// Largest group order accepted for subgroup enumeration.
    #[arg(long, default_value_t = glider_core::group_core::DEFAULT_SUBGROUP_BOUND, global = true)]
    pub subgroup_bound: usize,
}

#[derive(Debug, Parser)]
#[command(name = "glider-ring", version, about = "Exact computations in the reduced glider representation ring of a finite group")]
pub struct Cli {
    #[command(flatten)]
    pub options: Options,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Basic invariants and the multiplication table of a group.
    Group { group: String },
    /// Character table.
    Chartable { group: String },
    /// Operations on glider keys.
    Glider {
        group: String,
        #[command(subcommand)]
        op: GliderOp,
    },
    /// Restriction chain of an idempotent key (or of the idempotent in its orbit).
    Chain { group: String, key: String },
    /// Verify the decomposition through the idempotents attached to Sub(G).
    Decompose { group: String },
    /// Obstruction probes, tensor-power linearization and nilpotency witnesses.
    Probe { group: String },
    /// Compare two groups by representation and glider invariants.
    Distinguish { left: String, right: String },
}

#[derive(Debug, Subcommand)]
pub enum GliderOp {
    /// Parse a key and print its canonical form.
    Show { key: String },
    /// Product of two keys.
    Mul { left: String, right: String },
    /// Powers of a key up to the first repetition.
    Orbit { key: String },
    /// Induce a key of a subgroup to the group.
    Induce {
        /// Generators of the subgroup, comma separated element names.
        #[arg(long)]
        subgroup: String,
        key: String,
    },
    /// Restrict a key of the group to a subgroup.
    Restrict {
        /// Generators of the subgroup, comma separated element names.
        #[arg(long)]
        subgroup: String,
        key: String,
    },
}

/// Maps engine errors to exit statuses.
pub fn exit_status(error: &Error) -> u8 {
    match error {
        Error::Unresolved(_) => 2,
        Error::DivisionByZero | Error::DimensionMismatch(_) => EXIT_INTERNAL,
        _ => EXIT_DATA,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match commands::run(&cli) {
        Ok(outcome) => {
            println!("{}", outcome.output);
            ExitCode::from(outcome.status)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_status(&e))
        }
    }
}
