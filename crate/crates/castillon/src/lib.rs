//! File formats, figures and commands on top of `castillon-core`.

use std::fmt;

use castillon_core::Error;

pub mod commands;
pub mod output;
pub mod problem;
pub mod svg;
pub mod sweep;

/// Process exit codes.
pub mod exit {
    pub const OK: u8 = 0;
    pub const CLAIM_FAILED: u8 = 1;
    pub const INPUT: u8 = 2;
    pub const NO_SOLUTION: u8 = 3;
    pub const DEGENERATE: u8 = 4;
}

#[derive(Debug, Clone, PartialEq)]
pub enum CliError {
    Input(String),
    Io(String),
    Degenerate(String),
    NoSolution,
    ClaimFailed(usize),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) | CliError::Io(_) => exit::INPUT,
            CliError::Degenerate(_) => exit::DEGENERATE,
            CliError::NoSolution => exit::NO_SOLUTION,
            CliError::ClaimFailed(_) => exit::CLAIM_FAILED,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input(m) => write!(f, "invalid input: {m}"),
            CliError::Io(m) => write!(f, "i/o error: {m}"),
            CliError::Degenerate(m) => write!(f, "degenerate configuration: {m}"),
            CliError::NoSolution => f.write_str("no real solution"),
            CliError::ClaimFailed(n) => write!(f, "{n} claim(s) failed"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidInput(_) | Error::NonEllipse | Error::OutOfRange | Error::UnknownCenter(_) => {
                CliError::Input(e.to_string())
            }
            Error::NotTritangent => CliError::Input(e.to_string()),
            Error::NoRealIntersection => CliError::NoSolution,
            _ => CliError::Degenerate(e.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e.to_string())
    }
}

/// `x` rounded to 15 significant digits.
pub fn round15(x: f64) -> f64 {
    if !x.is_finite() {
        return x;
    }
    format!("{x:.14e}").parse().unwrap_or(x)
}
