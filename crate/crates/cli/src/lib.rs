//! Command-line front end for the `hirzebruch` engine.

pub mod args;
pub mod commands;
pub mod error;
pub mod input;
pub mod records;
pub mod render;

pub use args::{Cli, Command, Format};
pub use commands::run;
pub use error::{CliError, CliResult};
