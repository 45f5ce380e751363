//! Two-dimensional sphere one-loop blocks: Euler-gamma ratios in mixed
//! continuous/discrete variables.
//!
//! The atomic chiral ratio is F(x, N) = G(x + N/2) / G(1 - x + N/2); every
//! factor of the 2d family is a product of F's.

use crate::error::FnResult;
use crate::special::log_gamma_ratio;
use crate::types::{FugacitySet, MultipletData};
use num_complex::Complex64;

const I: Complex64 = Complex64::new(0.0, 1.0);

/// log F(x, n) = log G(x + n/2) - log G(1 - x + n/2).
pub fn log_f_pair(x: Complex64, n: i64) -> FnResult<Complex64> {
    let half = n as f64 / 2.0;
    log_gamma_ratio(&[x + half], &[Complex64::new(1.0, 0.0) - x + half])
}

/// One-multiplet chiral factor
///   G(D/2 - i r(z) - phi - (r(m) + n)/2) / G(1 - D/2 + i r(z) + phi + (r(m) + n)/2)
/// with r(z) = rho * z for gauge weight rho.
pub fn sphere2_chiral_factor(mult: &MultipletData, z: Complex64, m: i64) -> FnResult<Complex64> {
    let rho = mult.gauge_weight as f64;
    let x = Complex64::new(mult.delta / 2.0, 0.0) - I * rho * z - mult.flavor_charge;
    let n = -(mult.gauge_weight as i64 * m + mult.flavor_discrete);
    Ok(log_f_pair(x, n)?.exp())
}

/// Vector factor (-1)^m (a(m)^2/4 + a(z)^2) with a(z) = 2z, a(m) = 2m.
pub fn sphere2_vector_factor(z: Complex64, m: i64) -> Complex64 {
    let sign = if m.rem_euclid(2) == 0 { 1.0 } else { -1.0 };
    sign * (Complex64::new((m * m) as f64, 0.0) + 4.0 * z * z)
}

/// log of the full mixed-spin integrand at (m, z): vector measure
/// (m^2 + 4 z^2) (the gamma-ratio form of the vector block) times the six
/// flavor factors F(g_j + iz, n_j + m) F(g_j - iz, n_j - m).
pub fn sphere2_term_log(fug: &FugacitySet, m: i64, z: f64) -> FnResult<Complex64> {
    let zz = Complex64::new(z, 0.0);
    let mut acc = (Complex64::new((m * m) as f64 + 4.0 * z * z, 0.0)).ln();
    for j in 0..6 {
        acc += log_f_pair(fug.g[j] + I * zz, fug.n[j] + m)?;
        acc += log_f_pair(fug.g[j] - I * zz, fug.n[j] - m)?;
    }
    Ok(acc)
}

/// log of the product side: 2 * prod_{j<k} F(g_j + g_k, n_j + n_k).
/// The finite factor 2 is inherited from the parent sum/integral identity.
pub fn sphere2_rhs_log(fug: &FugacitySet) -> FnResult<Complex64> {
    let mut acc = Complex64::new(2f64.ln(), 0.0);
    for j in 0..6 {
        for k in (j + 1)..6 {
            acc += log_f_pair(fug.g[j] + fug.g[k], fug.n[j] + fug.n[k])?;
        }
    }
    Ok(acc)
}
