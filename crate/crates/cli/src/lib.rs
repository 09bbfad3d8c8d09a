//! Command-line front end for the closed-form optimal control benchmark:
//! config ingestion, subcommand dispatch, CSV/JSON reports and the oracle
//! suite that `verify` and the acceptance tests share.

pub mod commands;
pub mod config;
pub mod error;
pub mod report;
pub mod suite;

pub use commands::{run, verify_rows, Cli, Command, Options, Outcome};
pub use config::BenchConfig;
pub use error::CliError;
pub use report::{ReportRow, Summary, Verdict};
