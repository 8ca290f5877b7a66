use std::io;

use thiserror::Error;

pub const EXIT_FAILURE: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

#[derive(Debug, Error)]
pub enum CliError {
    /// Bad arguments; exit code 2.
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Compute(#[from] dyingrabbits_core::Error),
    /// A verification or benchmark cross-check failed.
    #[error("{0}")]
    Mismatch(String),
    #[error(transparent)]
    Io(#[from] io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            _ => EXIT_FAILURE,
        }
    }
}
