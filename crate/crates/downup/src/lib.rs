//! Command-line front end for `downup-core`.
//!
//! Every subcommand prints one JSON document (or readable text with
//! `--pretty`). See `downup --help`.

pub mod cli;
pub mod json;

pub use cli::{run, run_with_stdin, Outcome};
