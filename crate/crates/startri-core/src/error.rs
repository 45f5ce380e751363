//! Error types shared across the crate.

use num_complex::Complex64;
use thiserror::Error;

/// Errors from special-function evaluation.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum FnError {
    /// Argument within tolerance of a pole.
    #[error("argument {0} is at (or within tolerance of) a pole")]
    Pole(Complex64),
    /// Input outside the domain of the chosen representation.
    #[error("domain error: {0}")]
    Domain(String),
}

/// Errors from quadrature and truncated summation.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum QuadError {
    /// Refinement budget exhausted before the tolerance was met.
    #[error("no convergence after {refinements} refinements (last delta {last_delta:.3e})")]
    NoConvergence { refinements: usize, last_delta: f64 },
    /// The integrand does not decay fast enough inside the probe window.
    #[error("integrand tail too fat: |f| at cutoff {cutoff} is {edge:.3e} (limit {limit:.3e})")]
    TailTooFat { cutoff: f64, edge: f64, limit: f64 },
    /// Integrand evaluation failed at a node.
    #[error("integrand evaluation failed: {0}")]
    Eval(#[from] FnError),
}

pub type FnResult<T> = Result<T, FnError>;
pub type QuadResult<T> = Result<T, QuadError>;
