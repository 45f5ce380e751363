//! Orbifold (lens) one-loop blocks: Gamma_h factors with holonomies.

use crate::error::FnResult;
use crate::special::log_big_gamma_h;
use crate::types::{FugacitySet, OrbifoldParams};
use num_complex::Complex64;

/// Chiral doublet factor Gamma_h(g + z, n + m) Gamma_h(g - z, n - m).
pub fn orbifold_chiral_factor(
    g: Complex64,
    n: i64,
    z: Complex64,
    m: i64,
    params: &OrbifoldParams,
) -> FnResult<Complex64> {
    let a = log_big_gamma_h(g + z, n + m, params)?;
    let b = log_big_gamma_h(g - z, n - m, params)?;
    Ok((a + b).exp())
}

/// Vector factor 1 / (Gamma_h(2z, 2m) Gamma_h(-2z, -2m)).
pub fn orbifold_vector_factor(z: Complex64, m: i64, params: &OrbifoldParams) -> FnResult<Complex64> {
    let a = log_big_gamma_h(2.0 * z, 2 * m, params)?;
    let b = log_big_gamma_h(-2.0 * z, -2 * m, params)?;
    Ok((-a - b).exp())
}

/// log of the holonomy-m integrand prod_j Gamma_h(g_j +- z, n_j +- m) /
/// Gamma_h(+-2z, +-2m) at real z.
pub fn lens_term_log(
    fug: &FugacitySet,
    params: &OrbifoldParams,
    m: i64,
    z: f64,
) -> FnResult<Complex64> {
    let zz = Complex64::new(z, 0.0);
    let mut acc = Complex64::new(0.0, 0.0);
    for j in 0..6 {
        acc += log_big_gamma_h(fug.g[j] + zz, fug.n[j] + m, params)?;
        acc += log_big_gamma_h(fug.g[j] - zz, fug.n[j] - m, params)?;
    }
    acc -= log_big_gamma_h(2.0 * zz, 2 * m, params)?;
    acc -= log_big_gamma_h(-2.0 * zz, -2 * m, params)?;
    Ok(acc)
}

/// log of the product side prod_{j<k} Gamma_h(g_j + g_k, n_j + n_k).
pub fn lens_rhs_log(fug: &FugacitySet, params: &OrbifoldParams) -> FnResult<Complex64> {
    let mut acc = Complex64::new(0.0, 0.0);
    for j in 0..6 {
        for k in (j + 1)..6 {
            acc += log_big_gamma_h(fug.g[j] + fug.g[k], fug.n[j] + fug.n[k], params)?;
        }
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::special::{log_gamma_h, log_hyperbolic_gamma};
    use crate::types::{BalancingKind, Moduli};
    use num_complex::Complex64 as C;
    use std::f64::consts::PI;

    fn params(r: u32) -> OrbifoldParams {
        let m = Moduli::new(C::new(1.0, 0.0), C::from_polar(1.0, PI / 5.0)).unwrap();
        OrbifoldParams::new(r, m).unwrap()
    }

    #[test]
    fn zero_holonomy_sector_factorizes() {
        // m = 0: the chiral factor is the product of the two displayed
        // hyperbolic-gamma compositions (phi_h(0) = 0)
        let p = params(2);
        let g = C::new(0.35, 0.04);
        let z = C::new(0.22, 0.0);
        let got = orbifold_chiral_factor(g, 0, z, 0, &p).unwrap();
        let expect = (log_gamma_h(g + z, 0, &p).unwrap() + log_gamma_h(g - z, 0, &p).unwrap()).exp();
        assert!((got - expect).norm() < 1e-13 * expect.norm());
    }

    #[test]
    fn r1_term_matches_hyperbolic_structure() {
        // at r = 1 the assembled integrand collapses to the three-sphere one
        let p = params(1);
        let g = [C::new(0.32, 0.01); 6];
        let fug = FugacitySet::new(g, [0; 6], BalancingKind::Hyperbolic);
        let z = 0.4;
        let lens = lens_term_log(&fug, &p, 0, z).unwrap();
        let mut hyp = C::new(0.0, 0.0);
        let zz = C::new(z, 0.0);
        for gj in g {
            hyp += log_hyperbolic_gamma(gj + zz, &p.moduli).unwrap();
            hyp += log_hyperbolic_gamma(gj - zz, &p.moduli).unwrap();
        }
        hyp -= log_hyperbolic_gamma(2.0 * zz, &p.moduli).unwrap();
        hyp -= log_hyperbolic_gamma(-2.0 * zz, &p.moduli).unwrap();
        assert!((lens - hyp).norm() < 1e-11, "{lens} vs {hyp}");
    }

    #[test]
    fn vector_factor_at_midpoint_holonomy() {
        // r = 2, m = 1: the discrete slots 2m reduce to zero
        let p = params(2);
        let z = C::new(0.3, 0.0);
        let a = orbifold_vector_factor(z, 1, &p).unwrap();
        let b = orbifold_vector_factor(z, 0, &p).unwrap();
        assert!((a - b).norm() < 1e-13 * b.norm());
    }
}
