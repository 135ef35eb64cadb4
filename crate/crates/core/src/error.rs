use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{function}: argument {arg} outside the supported domain")]
    Domain { function: &'static str, arg: f64 },

    #[error("invalid scenario: {0}")]
    InvalidConfig(String),

    #[error("invalid sweep: {0}")]
    InvalidSweep(String),

    #[error("invalid quadrature spec: {0}")]
    InvalidQuadrature(String),

    #[error(
        "quadrature did not converge after {subdivisions} subdivisions \
         (best estimate {value}, error estimate {error_estimate})"
    )]
    NonConvergence {
        value: f64,
        error_estimate: f64,
        subdivisions: usize,
    },

    #[error("monte carlo needs at least {min} samples, got {got}")]
    TooFewSamples { min: usize, got: usize },

    #[error("failed to parse {what}: {message}")]
    Parse { what: String, message: String },

    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    pub(crate) fn parse(what: impl Into<String>, message: impl ToString) -> Self {
        Error::Parse {
            what: what.into(),
            message: message.to_string(),
        }
    }
}
