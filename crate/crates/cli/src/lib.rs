//! Library side of the `extsq` binary: argument handling, subcommands and the acceptance suite.

pub mod checks;
pub mod commands;
pub mod sample;

pub use commands::{run, Cli, Command};
