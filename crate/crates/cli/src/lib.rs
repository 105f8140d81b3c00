//! Command-line front end for `sjplane`: parses module descriptions, runs
//! one analysis command and renders a deterministic report.

mod commands;
mod error;
mod input;
mod report;

pub use commands::{run_command, Command, DEFAULT_BMAX, DEFAULT_CMAX, DEFAULT_NMAX};
pub use error::CliError;
pub use input::{load_document, parse_input, parse_input_from, InputDocument};
pub use report::Report;
