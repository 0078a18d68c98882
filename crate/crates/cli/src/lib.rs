//! File formats, base-knot specs, grid sweeps and the subcommands behind the
//! `cable-slopes` binary. Every command returns its full output as a string so
//! that runs are byte-for-byte reproducible.

pub mod base;
pub mod commands;
pub mod formats;
pub mod sweep;

/// Input that cannot be acted on. Exit status 2.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Invalid(String),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
}

impl CliError {
    pub fn invalid(msg: impl Into<String>) -> Self {
        CliError::Invalid(msg.into())
    }
}

/// A finished command. `failure` maps to exit status 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub output: String,
    pub failure: Option<String>,
}

impl Outcome {
    pub fn success(output: String) -> Self {
        Outcome { output, failure: None }
    }

    pub fn exit_code(&self) -> u8 {
        if self.failure.is_some() {
            1
        } else {
            0
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
    Csv,
}
