//! Command-line driver for `baxter-core`: verification suites, open chains and
//! spectra, reported as JSON.

pub mod boundary;
pub mod chain_cmd;
pub mod cli;
pub mod config;
pub mod error;
pub mod json;
pub mod report;
pub mod runner;
pub mod suites;

pub use cli::{execute, run};
pub use error::{CliError, Result};
pub use report::{Record, Report, Status};
