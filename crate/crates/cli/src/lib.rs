//! The `dickson` command-line tool as a library, so it can be driven in
//! tests without spawning a process.

use std::ffi::OsString;
use std::io::{self, Write};

use clap::error::ErrorKind;
use clap::Parser;

mod args;
mod bench;
mod numtheory;
mod polys;
mod ring_choice;
mod verify;

pub use args::Cli;
pub use bench::BenchRecord;

use args::Command;

/// Why a command did not succeed.
#[derive(Debug)]
pub enum CliError {
    /// Malformed or out-of-range input; exit code 2.
    Usage(String),
    /// A check ran and found a disagreement; exit code 1.
    Failed(String),
    Io(io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Failed(_) => 1,
            CliError::Usage(_) | CliError::Io(_) => 2,
        }
    }
}

impl From<dickson_core::Error> for CliError {
    fn from(e: dickson_core::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Io(e.into())
    }
}

/// Parse `args` (including the program name) and run the command. Results
/// go to `out`, diagnostics to `err`; the return value is the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            let _ = write!(out, "{e}");
            return 0;
        }
        Err(e) => {
            // clap's first paragraph, folded onto one line
            let text = e.to_string();
            let summary: Vec<&str> = text
                .lines()
                .take_while(|l| !l.trim().is_empty())
                .map(str::trim)
                .collect();
            let _ = writeln!(err, "{}", summary.join(" "));
            return 2;
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(()) => 0,
        Err(e) => {
            let _ = match &e {
                CliError::Usage(msg) => writeln!(err, "error: {msg}"),
                CliError::Failed(msg) => writeln!(err, "{msg}"),
                CliError::Io(io) => writeln!(err, "error: {io}"),
            };
            e.exit_code()
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), CliError> {
    match command {
        Command::Eval(a) => polys::eval(&a, out),
        Command::Table(a) => polys::table(&a, out),
        Command::Verify(a) => verify::verify(&a, out, err),
        Command::Brewer(a) => numtheory::brewer(&a, out),
        Command::Permcheck(a) => numtheory::permcheck(&a, out),
        Command::Bench(a) => bench::bench(&a, out),
    }
}
