//! Command-line front end.
//!
//! Every command returns an exit code: [`EXIT_OK`] on success,
//! [`EXIT_FAIL`] when a verification fails, [`EXIT_INVALID`] for bad input.
//! Commands write to caller-supplied streams so they can be driven
//! in-process as well as from the `jacobi-gaps` binary.

pub mod commands;
pub mod config;
pub mod format;
pub mod sweep;

use std::ffi::OsString;
use std::fmt;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use crate::error::Error;

pub use commands::{cmd_oracle4, cmd_sample, cmd_spectrum, cmd_sweep, cmd_verify};
pub use config::{MatrixConfig, SweepConfig};

pub const EXIT_OK: u8 = 0;
pub const EXIT_FAIL: u8 = 1;
pub const EXIT_INVALID: u8 = 2;

/// A command that could not produce its normal output.
#[derive(Debug, Clone, PartialEq)]
pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl CliError {
    pub fn invalid(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_INVALID,
            message: message.into(),
        }
    }

    pub fn failed(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_FAIL,
            message: message.into(),
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl std::error::Error for CliError {}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        if e.is_input_error() {
            Self::invalid(e.to_string())
        } else {
            Self::failed(e.to_string())
        }
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        Self::invalid(format!("i/o error: {e}"))
    }
}

pub type CliResult = std::result::Result<u8, CliError>;

#[derive(Debug, Parser)]
#[command(
    name = "jacobi-gaps",
    version,
    about = "Band/gap structure of periodic Jacobi matrices and checks of the gap/oscillation bounds"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Band edges, bands, gaps, M and the discriminant zeros.
    Spectrum {
        /// JSON config {"a": [...], "b": [...], "label": ...}.
        config: PathBuf,
        /// Also write one CSV row per band and gap.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Run every inequality check and print one line per record.
    Verify {
        config: PathBuf,
        /// Use the 1e-12 tolerance instead of 1e-9.
        #[arg(long)]
        strict: bool,
    },
    /// Sample the discriminant on an equally spaced grid as CSV.
    Sample {
        config: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        from: f64,
        #[arg(long, allow_hyphen_values = true)]
        to: f64,
        #[arg(long, default_value_t = 201)]
        points: usize,
    },
    /// Seeded random sweep; one CSV row per sample.
    Sweep {
        /// JSON sweep config.
        config: PathBuf,
        /// Write the CSV here instead of stdout.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Closed-form spectrum of a 4-periodic matrix with zero diagonal.
    Oracle4 {
        #[arg(allow_hyphen_values = true)]
        a1: f64,
        #[arg(allow_hyphen_values = true)]
        a2: f64,
        #[arg(allow_hyphen_values = true)]
        a3: f64,
        #[arg(allow_hyphen_values = true)]
        a4: f64,
    },
}

/// Dispatch a parsed command.
pub fn dispatch(cmd: &Command, out: &mut dyn Write, err: &mut dyn Write) -> CliResult {
    match cmd {
        Command::Spectrum { config, csv } => cmd_spectrum(config, csv.as_deref(), out),
        Command::Verify { config, strict } => cmd_verify(config, *strict, out),
        Command::Sample {
            config,
            from,
            to,
            points,
        } => cmd_sample(config, *from, *to, *points, out),
        Command::Sweep { config, csv } => cmd_sweep(config, csv.as_deref(), out, err),
        Command::Oracle4 { a1, a2, a3, a4 } => cmd_oracle4([*a1, *a2, *a3, *a4], out),
    }
}

/// Parse `args` (including the program name), run, and report errors on `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // --help and --version are not errors.
            if e.use_stderr() {
                let _ = write!(err, "{}", e.render());
                return EXIT_INVALID;
            }
            let _ = write!(out, "{}", e.render());
            return EXIT_OK;
        }
    };
    match dispatch(&cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.code
        }
    }
}

/// Entry point of the binary.
pub fn main() -> ExitCode {
    let code = run(
        std::env::args_os(),
        &mut io::stdout().lock(),
        &mut io::stderr().lock(),
    );
    ExitCode::from(code)
}
