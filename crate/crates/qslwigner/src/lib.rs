//! Command-line front end for the qslwigner numerics: experiment catalog,
//! `key = value` configuration and CSV export.
//!
//! [`run`] is what the binary calls; it is public so the same code path can
//! be driven from tests or other programs.

pub mod config;
pub mod error;
pub mod experiments;
pub mod output;

pub use config::{Experiment, RunConfig};
pub use error::CliError;
pub use output::Table;

/// Computes the experiment and renders its CSV artifact.
pub fn run(config: &RunConfig) -> Result<(Table, String), CliError> {
    let table = experiments::run(config)?;
    let text = output::render(config, &table);
    Ok((table, text))
}

/// One catalog line per experiment.
pub fn list_experiments() -> String {
    Experiment::ALL.iter().map(|e| format!("{:<26}{}\n", e.name(), e.description())).collect()
}
