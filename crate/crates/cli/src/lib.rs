//! Command-line front end for `rotmatch-core`: JSON schemas for every result
//! type and an in-process [`cli::run`] entry point used by the binary and the
//! tests.

pub mod cli;
pub mod schema;

pub use cli::{run, Outcome, EXIT_DOMAIN, EXIT_USAGE};
