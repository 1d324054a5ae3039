//! Library half of the `toricdeg` binary: problem-file plumbing, report
//! rendering, the subcommand implementations, and the acceptance suite
//! (shared with the integration tests).

pub mod accept;
pub mod commands;
pub mod problem;
pub mod random;
pub mod render;
pub mod report;

/// Errors split by exit code: usage and parse problems exit 2, failed
/// computations and failed verifications exit 1.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Failure(String),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Failure(m) => f.write_str(m),
        }
    }
}

impl From<toricdeg::Error> for CliError {
    fn from(e: toricdeg::Error) -> Self {
        CliError::Failure(e.to_string())
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;
