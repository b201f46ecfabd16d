//! Verification front end: each subcommand produces a list of
//! [`VerificationReport`](hilbert_strip::VerificationReport) rows.

pub mod commands;
pub mod figure;
pub mod spec;

use std::fmt;

/// Process exit codes.
pub mod exit {
    pub const PASS: i32 = 0;
    pub const CHECK_FAILED: i32 = 1;
    pub const BAD_ARGUMENTS: i32 = 2;
    pub const IO_FAILURE: i32 = 3;
}

/// Why a subcommand could not produce its reports.
#[derive(Debug)]
pub enum CliError {
    BadArguments(String),
    Io(std::io::Error),
    Numeric(hilbert_strip::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        use hilbert_strip::Error as E;
        match self {
            CliError::BadArguments(_) => exit::BAD_ARGUMENTS,
            CliError::Io(_) => exit::IO_FAILURE,
            CliError::Numeric(E::NoConvergence { .. }) => exit::CHECK_FAILED,
            CliError::Numeric(_) => exit::BAD_ARGUMENTS,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::BadArguments(msg) => write!(f, "bad arguments: {msg}"),
            CliError::Io(e) => write!(f, "i/o failure: {e}"),
            CliError::Numeric(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

impl From<hilbert_strip::Error> for CliError {
    fn from(e: hilbert_strip::Error) -> Self {
        CliError::Numeric(e)
    }
}

/// Reads `VERIFY_TOL_SCALE`; unset means 1.
pub fn tolerance_scale_from_env() -> Result<f64, CliError> {
    match std::env::var("VERIFY_TOL_SCALE") {
        Err(_) => Ok(1.0),
        Ok(raw) => match raw.trim().parse::<f64>() {
            Ok(v) if v.is_finite() && v > 0.0 => Ok(v),
            _ => Err(CliError::BadArguments(format!(
                "VERIFY_TOL_SCALE must be a positive number, got {raw:?}"
            ))),
        },
    }
}
