//! `logcert`: compute Sun's numbers, run single checks, or certify every claim.

mod args;
mod commands;

use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;

use args::{Cli, Command};

/// Exit status for malformed invocations (BSD `EX_USAGE`).
pub const EXIT_USAGE: u8 = 64;
/// A check could not run on the given inputs (`EX_DATAERR`).
pub const EXIT_DATA: u8 = 65;
/// Output could not be written (`EX_IOERR`).
pub const EXIT_IO: u8 = 74;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(EXIT_USAGE),
            };
        }
    };
    let result = match cli.command {
        Command::Seq(a) => commands::seq(a),
        Command::Check(a) => commands::check(a),
        Command::Certify(a) => commands::certify(a),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("logcert: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
