//! Command-line front end for `qmacd-core`.

pub mod app;
pub mod output;

pub use app::{execute, run_from, Cli, EXIT_FAIL, EXIT_PASS, EXIT_USAGE};
