//! File formats, JSON reports, the threaded search driver and the
//! `ramsey-workbench` command line on top of `ramsey-core`.

pub mod checkpoint;
pub mod cli;
pub mod commands;
pub mod driver;
pub mod error;
pub mod formats;
pub mod report;

use std::io::Write;

use clap::Parser;

pub use error::{exit, WorkbenchError};

/// Parses `args`, runs the command and writes the summary or the JSON
/// report to `out` and errors to `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match cli::Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{e}");
                return exit::USAGE;
            }
            let _ = write!(out, "{e}");
            return exit::OK;
        }
    };
    match commands::execute(&cli) {
        Ok(o) => {
            let json = o.report.to_json();
            if let Some(path) = &cli.report {
                if let Err(e) = formats::write_file(path, &json) {
                    let _ = writeln!(err, "error: {e}");
                    return e.exit_code();
                }
            }
            let _ = if cli.json { write!(out, "{json}") } else { writeln!(out, "{}", o.summary) };
            o.exit_code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
