//! Real-line and unit-circle quadrature plus truncated bilateral sums,
//! all with explicit error estimates and deterministic evaluation order.

mod real_line;
mod sums;
mod unit_circle;

pub use real_line::integrate_real_line;
pub use sums::{bilateral_sum, half_line_weighted_sum};
pub use unit_circle::integrate_unit_circle;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

/// Controls for adaptive quadrature.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuadratureSpec {
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub max_refinements: usize,
    /// Initial half-width of the truncation window (real-line rule); the
    /// decay probe may enlarge it.
    pub cutoff: f64,
}

impl QuadratureSpec {
    pub fn new(abs_tol: f64, rel_tol: f64, max_refinements: usize, cutoff: f64) -> Self {
        assert!(abs_tol > 0.0 && rel_tol > 0.0 && cutoff > 0.0 && max_refinements >= 1);
        Self { abs_tol, rel_tol, max_refinements, cutoff }
    }
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        Self { abs_tol: 1e-12, rel_tol: 1e-10, max_refinements: 12, cutoff: 8.0 }
    }
}

/// Controls for truncated bilateral / half-line sums.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SumSpec {
    pub initial_halfwidth: u64,
    pub tail_tol: f64,
    pub max_halfwidth: u64,
}

impl SumSpec {
    pub fn new(initial_halfwidth: u64, tail_tol: f64, max_halfwidth: u64) -> Self {
        assert!(initial_halfwidth >= 1 && tail_tol > 0.0);
        Self { initial_halfwidth, tail_tol, max_halfwidth }
    }
}

impl Default for SumSpec {
    fn default() -> Self {
        Self { initial_halfwidth: 4, tail_tol: 1e-10, max_halfwidth: 512 }
    }
}

/// Quadrature / summation outcome with an error estimate and diagnostics.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuadOutcome {
    pub value: Complex64,
    /// Estimated absolute error (refinement delta plus truncation tail).
    pub err: f64,
    pub diagnostics: QuadDiagnostics,
}

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct QuadDiagnostics {
    pub nodes: usize,
    pub refinements: usize,
    /// Final truncation half-width (real line) or node count (circle) or
    /// sum half-width.
    pub cutoff: f64,
    pub tail_bound: f64,
}
