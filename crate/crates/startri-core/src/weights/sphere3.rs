//! Squashed three-sphere one-loop blocks: hyperbolic-gamma factors.

use crate::error::FnResult;
use crate::special::{hyperbolic_gamma, log_hyperbolic_gamma};
use crate::types::{FugacitySet, Moduli};
use num_complex::Complex64;

const I: Complex64 = Complex64::new(0.0, 1.0);

/// Chiral doublet factor g2(g + iz) g2(g - iz) (gauge weights +-1, the Weyl
/// weight absorbed into the combined fugacity g).
pub fn sphere3_chiral_factor(g: Complex64, z: Complex64, moduli: &Moduli) -> FnResult<Complex64> {
    Ok(hyperbolic_gamma(g + I * z, moduli)? * hyperbolic_gamma(g - I * z, moduli)?)
}

/// Vector factor 1 / (g2(2iz) g2(-2iz)) (positive root weight 2).
pub fn sphere3_vector_factor(z: Complex64, moduli: &Moduli) -> FnResult<Complex64> {
    let a = log_hyperbolic_gamma(2.0 * I * z, moduli)?;
    let b = log_hyperbolic_gamma(-2.0 * I * z, moduli)?;
    Ok((-a - b).exp())
}

/// log of the full integrand prod_j g2(g_j +- iz) / g2(+-2iz) at real z.
pub fn sphere3_term_log(fug: &FugacitySet, moduli: &Moduli, z: f64) -> FnResult<Complex64> {
    let zz = Complex64::new(z, 0.0);
    let mut acc = Complex64::new(0.0, 0.0);
    for j in 0..6 {
        acc += log_hyperbolic_gamma(fug.g[j] + I * zz, moduli)?;
        acc += log_hyperbolic_gamma(fug.g[j] - I * zz, moduli)?;
    }
    acc -= log_hyperbolic_gamma(2.0 * I * zz, moduli)?;
    acc -= log_hyperbolic_gamma(-2.0 * I * zz, moduli)?;
    Ok(acc)
}

/// log of the product side 2 sqrt(w1 w2) prod_{j<k} g2(g_j + g_k).
pub fn sphere3_rhs_log(fug: &FugacitySet, moduli: &Moduli) -> FnResult<Complex64> {
    let mut acc = (2.0 * (moduli.omega1 * moduli.omega2).sqrt()).ln();
    for j in 0..6 {
        for k in (j + 1)..6 {
            acc += log_hyperbolic_gamma(fug.g[j] + fug.g[k], moduli)?;
        }
    }
    Ok(acc)
}
