//! Command implementations for the `subres` binary, kept in a library so
//! integration tests can drive them without spawning processes.

pub mod commands;
pub mod system_file;

use std::fmt;

/// A command failure, carrying the process exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    /// Exit 1: I/O, parsing, or a failed computation/check.
    Failure(String),
    /// Exit 2: invalid arguments or values.
    Usage(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Failure(_) => 1,
            CliError::Usage(_) => 2,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Failure(m) | CliError::Usage(m) => f.write_str(m),
        }
    }
}

impl std::error::Error for CliError {}
