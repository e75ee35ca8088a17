//! Command-line front end of `pairopt`: solve single problems, regenerate the
//! reference tables, run the brute-force oracle and export depth orbits.

pub mod args;
pub mod design_file;
mod error;
pub mod export;
pub mod render;
pub mod solve;
pub mod table;
pub mod verify;

use std::io::Write;

pub use error::{exit, CliError, CliResult};
pub use pairopt::oracle::DEFAULT_CAP;

use args::{Cli, Command};

/// Environment variable overriding the default enumeration cap.
pub const CAP_ENV: &str = "PAIROPT_CAP";

/// Enumeration cap: the flag if given, then `PAIROPT_CAP`, then the default.
pub fn resolve_cap(flag: Option<u64>) -> CliResult<u64> {
    if let Some(cap) = flag {
        return Ok(cap);
    }
    match std::env::var(CAP_ENV) {
        Ok(text) => text
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("{CAP_ENV}={text:?} is not a pair count"))),
        Err(_) => Ok(DEFAULT_CAP),
    }
}

pub fn run(cli: &Cli, out: &mut dyn Write) -> CliResult<()> {
    match &cli.command {
        Command::Solve(a) => solve::run(a, out),
        Command::Table(a) => table::run(a, out),
        Command::Verify(a) => verify::run(a, out),
        Command::Export(a) => export::run(a, out),
    }
}
