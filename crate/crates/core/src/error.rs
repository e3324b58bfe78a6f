use thiserror::Error;

use crate::validate::Report;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u32),

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("degree {degree} is outside the stored range {lo}..={hi}")]
    DegreeOutOfRange { degree: i64, lo: i64, hi: i64 },

    #[error("invalid {what}: {report}")]
    Invalid { what: String, report: Report },

    #[error("differentials leaving degrees {degree} and {degree}+1 do not compose to zero")]
    NotAComplex { degree: i64 },

    #[error("structures are defined over different {0}")]
    Mismatch(String),

    #[error("internal degree {degree} lies outside the window {lo}..={hi}")]
    WindowOverflow { degree: i64, lo: i64, hi: i64 },

    #[error("input error: {0}")]
    Input(String),

    #[error("schema error: {0}")]
    Schema(String),

    #[error("unresolved reference {0:?}")]
    Unresolved(String),
}

pub type Result<T> = std::result::Result<T, Error>;
