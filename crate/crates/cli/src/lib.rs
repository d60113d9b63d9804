//! Command-line front end for `regdet-core`: text grammars for complex
//! numbers and polynomials, deterministic JSON/CSV output, and the
//! subcommand implementations behind the `regdet` binary.

pub mod cli;
pub mod commands;
pub mod format;
pub mod parse;

pub use commands::{run, CliError};
