//! `linf`: verify L∞ bracket systems and Δ operators from the command line.
//!
//! Exit codes: 0 when the check passes, 1 when it runs and fails, 2 on usage
//! or input errors.

mod commands;
mod source;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use source::{BuiltinOptions, Side};

#[derive(Parser)]
#[command(name = "linf", version, about = "Exact verification of L-infinity algebras and BV-type operators")]
struct Cli {
    /// Print a JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the generalized Jacobi identities of a bracket system.
    Verify {
        /// `example1`, `example2`, or a path to a system document.
        input: String,
        #[arg(long, default_value_t = 8)]
        max_arity: usize,
        #[command(flatten)]
        builtin: BuiltinOptions,
    },
    /// Check that Δ squares to zero and report the nilpotency residuals.
    DeltaCheck {
        input: String,
        /// Highest total degree of the monomials Δ² is applied to.
        #[arg(long, default_value_t = 10)]
        degree: usize,
        #[command(flatten)]
        builtin: BuiltinOptions,
    },
    /// Rebuild the bracket table from Δ and diff it against the declared one.
    Compare {
        input: String,
        #[arg(long, default_value_t = 8)]
        max_arity: usize,
        #[command(flatten)]
        builtin: BuiltinOptions,
    },
    /// Print coefficient sequences of the examples.
    Coefficients {
        which: Sequence,
        n_max: usize,
        /// Cross-check against an independent computation.
        #[arg(long)]
        check: bool,
    },
    /// Write a built-in system as a JSON document.
    Export {
        name: String,
        /// Which bracket table to include.
        #[arg(long, value_enum, default_value_t = Side::V)]
        side: Side,
        #[arg(long, default_value_t = 8)]
        max_arity: usize,
        #[command(flatten)]
        builtin: BuiltinOptions,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Sequence {
    /// First example, closed form (checked against the recursion).
    C1,
    /// Second example, Daily recursion (checked against (2-n)^(n-2)).
    C2,
    /// `B_M = (1-M)^(M-1)` (checked against the ODE solution).
    B,
    /// `n!` times the Lambert series coefficients (checked against (-n)^(n-1)).
    Lambert,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Verify { input, max_arity, builtin } => commands::verify(&input, max_arity, &builtin),
        Command::DeltaCheck { input, degree, builtin } => commands::delta_check(&input, degree, &builtin),
        Command::Compare { input, max_arity, builtin } => commands::compare(&input, max_arity, &builtin),
        Command::Coefficients { which, n_max, check } => commands::coefficients(which, n_max, check),
        Command::Export { name, side, max_arity, builtin } => commands::export(&name, side, max_arity, &builtin),
    };
    match result {
        Ok(report) => {
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&report.json).expect("serializable report"));
            } else {
                print!("{}", report.text);
            }
            if report.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
