use thiserror::Error;

/// Errors raised by the numerical routines and the harness.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument fell outside the domain of the routine.
    #[error("domain error in {routine}: {arg} = {value} ({reason})")]
    Domain {
        routine: &'static str,
        arg: &'static str,
        value: f64,
        reason: &'static str,
    },

    /// A computation produced a non-finite or otherwise invalid intermediate.
    #[error("numerical failure in {routine}: {detail}")]
    Numerical { routine: &'static str, detail: String },

    /// Malformed input file or record.
    #[error("parse error: {0}")]
    Parse(String),

    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn domain(
        routine: &'static str,
        arg: &'static str,
        value: f64,
        reason: &'static str,
    ) -> Self {
        Error::Domain {
            routine,
            arg,
            value,
            reason,
        }
    }

    pub(crate) fn numerical(routine: &'static str, detail: impl Into<String>) -> Self {
        Error::Numerical {
            routine,
            detail: detail.into(),
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<csv::Error> for Error {
    fn from(e: csv::Error) -> Self {
        Error::Parse(e.to_string())
    }
}

/// Checks `x > 0` and finite.
pub(crate) fn check_positive(routine: &'static str, arg: &'static str, x: f64) -> Result<()> {
    if x.is_finite() && x > 0.0 {
        Ok(())
    } else {
        Err(Error::domain(routine, arg, x, "must be positive and finite"))
    }
}
