//! `linespace` — convert between oriented-line coordinates and Euclidean
//! points, sample surface congruences over sphere grids, and run the
//! numerical verification suites.

mod convert;
mod grid;
mod parse;
mod sample;
mod verify;

use std::process::ExitCode;

use clap::{Parser, Subcommand};

const EXIT_CODES_HELP: &str = "Exit codes:
  0  success
  1  verification failure (one or more checks exceeded tolerance)
  2  usage or parameter error
  3  I/O error";

#[derive(Parser)]
#[command(
    name = "linespace",
    version,
    about = "Oriented lines in R^3 as tangent-bundle coordinates on the direction sphere",
    after_help = EXIT_CODES_HELP
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Convert a line (xi, eta, r) to a Euclidean point, or a point plus a
    /// direction to the (eta, r) of the line through it
    Convert(convert::ConvertArgs),
    /// Evaluate a surface section over a grid and export CSV (and OBJ)
    Sample(sample::SampleArgs),
    /// Run the seeded numerical verification suites
    Verify(verify::VerifyArgs),
}

/// Runtime failures after argument parsing. Clap itself exits with 2 on
/// malformed flags; these cover the rest, keeping verification failures and
/// usage errors on distinct, documented status codes.
#[derive(Debug, thiserror::Error)]
enum AppError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Io(#[from] std::io::Error),
}

impl AppError {
    fn exit_code(&self) -> ExitCode {
        match self {
            AppError::Usage(_) => ExitCode::from(2),
            AppError::Io(_) => ExitCode::from(3),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Convert(args) => convert::run(&args),
        Command::Sample(args) => sample::run(&args),
        Command::Verify(args) => verify::run(&args),
    };
    match result {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            err.exit_code()
        }
    }
}
