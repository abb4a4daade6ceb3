use std::path::PathBuf;

use thiserror::Error;

/// Errors produced by the spectral and index computations.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("{name} = {value} is outside the domain {domain}")]
    OutOfDomain {
        name: &'static str,
        value: f64,
        domain: &'static str,
    },

    #[error("branches are identical (A = {a}, B = {b})")]
    IdenticalBranches { a: String, b: String },

    #[error("no sign change on [{lo}, {hi}]: f(lo) = {f_lo}, f(hi) = {f_hi}")]
    NoSignChange {
        lo: f64,
        hi: f64,
        f_lo: f64,
        f_hi: f64,
    },

    #[error("non-finite function value at {at}")]
    NonFinite { at: f64 },

    #[error("expected exactly {expected} sign changes on {domain}, found {found}")]
    RootCount {
        expected: usize,
        found: usize,
        domain: &'static str,
    },

    #[error(
        "Ric⊥ unsupported: ambient '{0}' is neither a hypersurface case nor of constant curvature"
    )]
    RicPerpUnsupported(String),

    #[error("adjunction right-hand side {0} is odd")]
    ParityViolation(i64),

    #[error("empty spectrum")]
    EmptySpectrum,

    #[error("spectrum truncated: largest shifted value {largest} does not exceed the zero tolerance {tolerance}")]
    Truncated { largest: f64, tolerance: f64 },

    #[error("{0} cannot be represented as an exact i128 rational")]
    Unrepresentable(f64),

    #[error("unsupported case: {0}")]
    UnsupportedCase(String),

    #[error("page constants rejected: {0}")]
    PageConstants(String),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("output: {0}")]
    Output(String),
}

pub type Result<T> = std::result::Result<T, Error>;
