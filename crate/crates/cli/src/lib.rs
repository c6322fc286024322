//! Library side of the `groupkit` command-line tool, so the commands can be
//! driven in-process by tests.

pub mod args;
pub mod commands;
pub mod report;
pub mod verify;

pub use args::Cli;
pub use commands::{run, CliError, Outcome};
pub use report::RunReport;
