//! Infinite q-Pochhammer products (z; q)_inf = prod_{j>=0} (1 - z q^j).

use crate::error::{FnError, FnResult};
use crate::types::QNome;
use num_complex::Complex64;

/// Truncation threshold: stop once |z q^j| drops below this.
const TRUNC_EPS: f64 = 1e-16;
/// Never truncate before this many factors.
const MIN_FACTORS: usize = 8;
const MAX_FACTORS: usize = 200_000;

/// Truncation record for an evaluated product.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PochhammerDiagnostics {
    /// Number of factors multiplied before truncation.
    pub factors: usize,
    /// Bound on |log tail| of the dropped factors.
    pub tail_bound: f64,
}

/// Log of (z; q)_inf as a sum of principal logs of the factors, plus the
/// truncation record. The exponential of the result is exactly the product
/// of the factors, so downstream ratios are branch-safe.
pub fn log_q_pochhammer(z: Complex64, q: &QNome) -> FnResult<(Complex64, PochhammerDiagnostics)> {
    let qv = q.value();
    let mut acc = Complex64::new(0.0, 0.0);
    let mut x = z;
    let mut j = 0usize;
    loop {
        if j >= MAX_FACTORS {
            return Err(FnError::Domain(format!(
                "q-Pochhammer did not truncate after {MAX_FACTORS} factors (|q| = {})",
                qv.norm()
            )));
        }
        if j >= MIN_FACTORS && x.norm() < TRUNC_EPS {
            break;
        }
        let factor = Complex64::new(1.0, 0.0) - x;
        if factor.norm() < 1e-250 {
            return Err(FnError::Pole(z));
        }
        acc += factor.ln();
        x *= qv;
        j += 1;
    }
    // |sum_{k>=j} log(1 - z q^k)| <= |z q^j| / ((1-|q|)(1-|z q^j|))
    let xr = x.norm();
    let tail = xr / ((1.0 - qv.norm()) * (1.0 - xr));
    Ok((acc, PochhammerDiagnostics { factors: j, tail_bound: tail }))
}

/// (z; q)_inf.
pub fn q_pochhammer(z: Complex64, q: &QNome) -> FnResult<Complex64> {
    match log_q_pochhammer(z, q) {
        Ok((lg, _)) => Ok(lg.exp()),
        // an exactly vanishing factor is a legitimate zero of the product
        Err(FnError::Pole(_)) => Ok(Complex64::new(0.0, 0.0)),
        Err(e) => Err(e),
    }
}
