//! File formats, a parallel session runner and the command-line front end
//! for the Ping-Pong simulator.

pub mod cli;
pub mod runner;
pub mod sweep_csv;
pub mod transcript;

use std::fmt;
use std::io;

/// Errors surfaced by the lab tools, each mapped to a process exit code.
#[derive(Debug)]
pub enum LabError {
    /// Invalid arguments or a simulation fault.
    Usage(String),
    Core(pingpong_core::Error),
    Io(io::Error),
    Csv(csv::Error),
    /// A CSV file that parsed but does not follow the schema.
    Format(String),
}

impl LabError {
    pub fn exit_code(&self) -> i32 {
        match self {
            LabError::Usage(_) | LabError::Core(_) => 2,
            LabError::Io(_) | LabError::Csv(_) | LabError::Format(_) => 3,
        }
    }
}

impl fmt::Display for LabError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LabError::Usage(m) => f.write_str(m),
            LabError::Core(e) => write!(f, "{e}"),
            LabError::Io(e) => write!(f, "i/o error: {e}"),
            LabError::Csv(e) => write!(f, "csv error: {e}"),
            LabError::Format(m) => write!(f, "malformed csv: {m}"),
        }
    }
}

impl std::error::Error for LabError {}

impl From<pingpong_core::Error> for LabError {
    fn from(e: pingpong_core::Error) -> Self {
        LabError::Core(e)
    }
}

impl From<io::Error> for LabError {
    fn from(e: io::Error) -> Self {
        LabError::Io(e)
    }
}

impl From<csv::Error> for LabError {
    fn from(e: csv::Error) -> Self {
        match e.kind() {
            csv::ErrorKind::Io(_) => match e.into_kind() {
                csv::ErrorKind::Io(io) => LabError::Io(io),
                _ => unreachable!(),
            },
            _ => LabError::Csv(e),
        }
    }
}

pub type LabResult<T> = Result<T, LabError>;
