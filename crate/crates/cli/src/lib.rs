//! Command-line driver for `spindual-core`: verification suites, tables and
//! centralizer dimension counts, with JSON, CSV and text output.

pub mod config;
pub mod fft;
pub mod output;
pub mod suites;
pub mod tables;

pub use config::{Cli, Command, ConfigError, OutputFormat, QMode, RunConfig, Suite, TableKind};
pub use suites::{run_suite, CheckLine, SuiteReport};
