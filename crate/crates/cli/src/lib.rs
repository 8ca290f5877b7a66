//! Command-line front end for `dyingrabbits-core`.
//!
//! Subcommands: `compute`, `table`, `verify`, `bench`. Every command writes
//! to caller-supplied streams so the whole surface can be driven in-process.

pub mod args;
pub mod commands;
pub mod error;
pub mod format;

use std::io::Write;

pub use args::{Cli, Command};
pub use error::CliError;
pub use format::OutputFormat;

/// Runs one parsed invocation.
pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), CliError> {
    match &cli.command {
        Command::Compute(a) => commands::compute::run(a, out, err),
        Command::Table(a) => commands::table::run(a, out),
        Command::Verify(a) => commands::verify::run(a, out),
        Command::Bench(a) => commands::bench::run(a, out),
    }
}
