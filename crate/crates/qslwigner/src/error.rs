use std::path::PathBuf;

use thiserror::Error;

use crate::config::catalog_names;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("unknown experiment `{0}`; available experiments: {}", catalog_names())]
    UnknownExperiment(String),
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("numerical failure: {source}{}", describe_last_good(.source, *.last_good_time))]
    Numerical {
        #[source]
        source: qslwigner_core::Error,
        last_good_time: Option<f64>,
    },
    #[error("cannot access {}: {source}", .path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

fn describe_last_good(source: &qslwigner_core::Error, t: Option<f64>) -> String {
    match (source, t) {
        (qslwigner_core::Error::IntegrationFailure { .. }, _) | (_, None) => String::new(),
        (_, Some(t)) => format!(" (last good time {t})"),
    }
}

impl CliError {
    /// Process exit status: 2 for configuration problems, 3 for numerical
    /// failures, 1 for I/O.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::UnknownExperiment(_) | CliError::Config(_) => 2,
            CliError::Numerical { .. } => 3,
            CliError::Io { .. } => 1,
        }
    }

    /// Wraps a core error raised while validating parameters.
    pub fn invalid(context: &str, e: qslwigner_core::Error) -> Self {
        CliError::Config(format!("{context}: {e}"))
    }

    /// Wraps a core error raised during computation. Failures that carry
    /// their own time take precedence over `last_good_time`.
    pub fn numerical(e: qslwigner_core::Error, last_good_time: Option<f64>) -> Self {
        let last_good_time = match e {
            qslwigner_core::Error::IntegrationFailure { last_good_time } => Some(last_good_time),
            _ => last_good_time,
        };
        CliError::Numerical { source: e, last_good_time }
    }
}
