use std::path::PathBuf;

use thiserror::Error;

/// Everything that can go wrong in this crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("valuation of zero undefined")]
    ValuationOfZero,

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("not a p-adic integer: denominator of {value} is divisible by {p}")]
    NotPAdicInteger { value: String, p: u64 },

    #[error("non-invertible series: constant term is zero")]
    NonInvertibleSeries,

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("hypothesis not satisfied: {0}")]
    HypothesisNotSatisfied(String),

    #[error("{path}: parse error at line {line}: {message}")]
    CacheParse {
        path: PathBuf,
        line: usize,
        message: String,
    },

    #[error("{path}: cache holds N={found_n} j={found_j}, expected N={want_n} j={want_j}")]
    CacheMismatch {
        path: PathBuf,
        found_n: u64,
        found_j: u64,
        want_n: u64,
        want_j: u64,
    },

    #[error("Newton iteration did not converge; last iterate {re}{im:+}i with |H| = {residual:e}")]
    NoConvergence { re: f64, im: f64, residual: f64 },

    #[error("range: {0}")]
    Range(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
