//! Continuous-spin model: Boltzmann weights built from Euler gammas.
//!
//! Vertical weight Wbar_a(x, z) = G(a +- ix +- iz) (four factors), horizontal
//! weight W_a(x, z) = G(-a + ix +- iz) / G(a + ix +- iz) (the first slot
//! keeps its + sign; the weight is not symmetric). Two normalization
//! conventions coexist: the classic one with S = 1/G(+-2 i sigma) and
//! R = 4 pi G(2a)G(2b)/G(2c), and the reduced one with S carrying 1/(2 pi)
//! and R = 2 w1 G(2a)G(2b)/G(2c) (default, with w1 = 1). Both satisfy the
//! star-triangle relation; the 2 pi factors compensate.

use crate::error::FnResult;
use crate::special::{log_gamma, log_gamma_ratio};
use crate::types::{SpectralTriple, Spin};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

const I: Complex64 = Complex64::new(0.0, 1.0);

/// Normalization convention for the continuous model.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub enum ConventionA {
    /// S = 1/G(+-2 i s), R = 4 pi G(2a)G(2b)/G(2c).
    Classic,
    /// S = 1/(2 pi G(+-2 i s)), R = 2 G(2a)G(2b)/G(2c) (w1 = 1).
    #[default]
    Reduced,
}

/// log Wbar_alpha(x, z).
pub fn log_weight_a_vertical(alpha: f64, x: &Spin, z: &Spin) -> FnResult<Complex64> {
    let a = Complex64::new(alpha, 0.0);
    let mut acc = Complex64::new(0.0, 0.0);
    for sx in [1.0, -1.0] {
        for sz in [1.0, -1.0] {
            acc += log_gamma(a + I * (sx * x.sigma) + I * (sz * z.sigma))?;
        }
    }
    Ok(acc)
}

/// Wbar_alpha(x, z).
pub fn weight_a_vertical(alpha: f64, x: &Spin, z: &Spin) -> FnResult<Complex64> {
    Ok(log_weight_a_vertical(alpha, x, z)?.exp())
}

/// log W_alpha(x, z); the x slot carries the fixed + sign.
pub fn log_weight_a_horizontal(alpha: f64, x: &Spin, z: &Spin) -> FnResult<Complex64> {
    let a = Complex64::new(alpha, 0.0);
    let ix = I * x.sigma;
    let mut num = Vec::with_capacity(2);
    let mut den = Vec::with_capacity(2);
    for sz in [1.0, -1.0] {
        num.push(-a + ix + I * (sz * z.sigma));
        den.push(a + ix + I * (sz * z.sigma));
    }
    log_gamma_ratio(&num, &den)
}

/// W_alpha(x, z).
pub fn weight_a_horizontal(alpha: f64, x: &Spin, z: &Spin) -> FnResult<Complex64> {
    Ok(log_weight_a_horizontal(alpha, x, z)?.exp())
}

/// log S(z) = -log G(+-2 i sigma) [- log 2 pi in the reduced convention].
pub fn log_self_a(z: &Spin, convention: ConventionA) -> FnResult<Complex64> {
    let s = z.sigma;
    let base = -(log_gamma(I * (2.0 * s))? + log_gamma(-I * (2.0 * s))?);
    Ok(match convention {
        ConventionA::Classic => base,
        ConventionA::Reduced => base - Complex64::new((2.0 * PI).ln(), 0.0),
    })
}

/// S(z).
pub fn self_a(z: &Spin, convention: ConventionA) -> FnResult<Complex64> {
    Ok(log_self_a(z, convention)?.exp())
}

/// Spin-independent factor R(alpha, beta, gamma).
pub fn r_factor_a(t: &SpectralTriple, convention: ConventionA) -> FnResult<Complex64> {
    let g = log_gamma(Complex64::new(2.0 * t.alpha, 0.0))?
        + log_gamma(Complex64::new(2.0 * t.beta, 0.0))?
        - log_gamma(Complex64::new(2.0 * t.gamma, 0.0))?;
    let pref = match convention {
        ConventionA::Classic => 4.0 * PI,
        ConventionA::Reduced => 2.0,
    };
    Ok(pref * g.exp())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64 as C;

    #[test]
    fn vertical_at_origin_is_gamma_half_fourth() {
        // alpha = 1/2, x = z = 0: G(1/2)^4 = pi^2
        let v = weight_a_vertical(0.5, &Spin::continuous(0.0), &Spin::continuous(0.0)).unwrap();
        assert!((v - PI * PI).norm() < 1e-12, "{v}");
    }

    #[test]
    fn vertical_frozen_value_and_symmetry() {
        let x = Spin::continuous(0.2);
        let z = Spin::continuous(0.7);
        let v = weight_a_vertical(0.3, &x, &z).unwrap();
        assert!((v - C::new(0.714_306_334_784_137, 0.0)).norm() < 1e-13, "{v}");
        let w = weight_a_vertical(0.3, &z, &x).unwrap();
        assert!((v - w).norm() < 1e-14);
    }

    #[test]
    fn horizontal_frozen_value_and_z_flip() {
        let x = Spin::continuous(0.2);
        let z = Spin::continuous(0.7);
        let v = weight_a_horizontal(0.3, &x, &z).unwrap();
        let want = C::new(1.170_906_811_106_323_8, 0.306_324_665_943_020_3);
        assert!((v - want).norm() < 1e-13, "{v}");
        let flipped = weight_a_horizontal(0.3, &x, &Spin::continuous(-0.7)).unwrap();
        assert!((v - flipped).norm() < 1e-14);
    }

    #[test]
    fn horizontal_is_one_at_zero_spectral_parameter() {
        for (x, z) in [(0.3, -0.8), (1.1, 0.4)] {
            let v = weight_a_horizontal(0.0, &Spin::continuous(x), &Spin::continuous(z)).unwrap();
            assert!((v - 1.0).norm() < 1e-13);
        }
    }

    #[test]
    fn self_interaction_reflection_value() {
        // 1/(G(i)G(-i)) = sinh(pi)/pi
        let v = self_a(&Spin::continuous(0.5), ConventionA::Classic).unwrap();
        assert!((v - PI.sinh() / PI).norm() < 1e-12, "{v}");
        // definition: S(z) G(2 i s) G(-2 i s) = 1
        let s = Spin::continuous(0.37);
        let prod = self_a(&s, ConventionA::Classic).unwrap()
            * crate::special::gamma(C::new(0.0, 0.74)).unwrap()
            * crate::special::gamma(C::new(0.0, -0.74)).unwrap();
        assert!((prod - 1.0).norm() < 1e-13);
    }

    #[test]
    fn r_factor_values() {
        // R(1/4, 1/4, 1/2) classic: 4 pi G(1/2)^2 / G(1) = 4 pi^2
        let t = SpectralTriple::continuous(0.25, 0.25).unwrap();
        let v = r_factor_a(&t, ConventionA::Classic).unwrap();
        assert!((v - 4.0 * PI * PI).norm() < 1e-12, "{v}");
        let v = r_factor_a(&t, ConventionA::Reduced).unwrap();
        assert!((v - 2.0 * PI).norm() < 1e-12, "{v}");
    }
}
