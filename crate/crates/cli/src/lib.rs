//! Command-line front end: `build-dict`, `link`, `evaluate` and `bench`.

pub mod args;
pub mod commands;
pub mod config;
pub mod error;

use std::ffi::OsString;
use std::io::Write;
use std::sync::OnceLock;

use clap::{CommandFactory, FromArgMatches};

pub use args::{Cli, Command};
pub use config::{ConfigFile, RunConfig};
pub use error::CliError;

pub fn version_string() -> &'static str {
    static VERSION: OnceLock<String> = OnceLock::new();
    VERSION.get_or_init(|| {
        format!(
            "{} (dictionary format {})",
            env!("CARGO_PKG_VERSION"),
            centilink_core::DICT_FORMAT_VERSION
        )
    })
}

/// Parses `argv` (including the program name) and runs the subcommand.
/// Returns the process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let command = Cli::command().version(version_string());
    let cli = match command
        .try_get_matches_from(argv)
        .and_then(|m| Cli::from_arg_matches(&m))
    {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 1 } else { 0 };
        }
    };
    match commands::dispatch(cli) {
        Ok(()) => 0,
        Err(e) => {
            let _ = std::io::stdout().flush();
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
