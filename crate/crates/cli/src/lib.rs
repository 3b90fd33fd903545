//! File formats, JSON schemas and subcommand implementations behind the
//! `knotcolor` binary.

pub mod commands;
pub mod error;
pub mod formats;
pub mod schema;

pub use error::CliError;
