//! Library side of the command-line front end. The verification suites
//! live here so the integration tests and the `verify` subcommand run the
//! same code.

pub mod commands;
pub mod config;
pub mod error;
pub mod verify;

pub use config::{RunConfig, HEAVY_LEVEL};
pub use error::{CliError, EXIT_GATE, EXIT_INPUT, EXIT_MATH};
