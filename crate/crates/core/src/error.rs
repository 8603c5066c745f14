//! Error taxonomy shared across the crate.
//!
//! Three families matter operationally:
//! * structural errors (mismatched rings/fields, bad input text) — caller bugs or bad files,
//! * domain errors (empty scheme, zero polynomial, invalid chart data) — well-formed requests
//!   whose mathematical answer does not exist,
//! * resource errors (degree / basis-size / wall-clock guards) — the computation was cut off
//!   and the caller must decide how to proceed. The CLI maps these to exit code 3.

use thiserror::Error;

/// Which resource guard tripped during a Groebner-basis or dimension computation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GuardKind {
    MaxDegree,
    MaxBasis,
    Timeout,
    DimensionVars,
}

impl std::fmt::Display for GuardKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let name = match self {
            GuardKind::MaxDegree => "max_degree",
            GuardKind::MaxBasis => "max_basis",
            GuardKind::Timeout => "timeout",
            GuardKind::DimensionVars => "dimension_vars",
        };
        f.write_str(name)
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("ring mismatch: {0}")]
    RingMismatch(String),

    #[error("field mismatch: {0}")]
    FieldMismatch(String),

    #[error("invalid field spec `{0}`: expected `rat` or `fp:<odd prime < 2^31>`")]
    InvalidField(String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("resource guard `{guard}` exceeded: {detail}")]
    Resource { guard: GuardKind, detail: String },

    #[error("the ideal contains 1: empty scheme has no dimension")]
    EmptyScheme,

    #[error("the zero polynomial has no degree")]
    ZeroPolynomial,

    #[error("division by zero")]
    DivisionByZero,

    #[error("solve schedule failed at variable `{variable}`: {msg}")]
    Schedule { variable: String, msg: String },

    #[error("invalid chart data: {0}")]
    InvalidChart(String),

    #[error("maps do not satisfy f*g = g*f = s*Id: {0}")]
    NotLinkedPair(String),

    #[error("point does not lie on the scheme: generator `{generator}` evaluates to {value}")]
    PointNotOnScheme { generator: String, value: String },

    #[error("internal consistency error: {0}")]
    Internal(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
