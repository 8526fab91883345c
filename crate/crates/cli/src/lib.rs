//! Command implementations behind the `ktwist` binary.

pub mod args;
pub mod commands;
pub mod range;
pub mod report;

pub use args::Cli;
pub use commands::{run, Outcome};
