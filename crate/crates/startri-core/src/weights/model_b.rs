//! Mixed-spin model: Boltzmann weight with continuous and discrete spin
//! components, built from the atomic 2d ratio F.
//!
//! W_t(s1, s2) = prod_{a,b = +-1} F((eta - t)/2 + i(a s1 + b s2)/2, a m1 + b m2),
//! the general-eta form; specializing eta = 1 and multiplying by the
//! prefactor G((1+t)/2)/G((1-t)/2) recovers the classic normalized weight
//! up to reflection-formula rearrangements (covered by the zero-spin test).

use crate::error::FnResult;
use crate::special::log_gamma_ratio;
use crate::types::{SpectralTriple, Spin};
use crate::weights::sphere2::log_f_pair;
use num_complex::Complex64;
use std::f64::consts::PI;

/// log W_t(s1, s2) at crossing parameter eta.
pub fn log_weight_b(t: f64, eta: f64, s1: &Spin, s2: &Spin) -> FnResult<Complex64> {
    let base = Complex64::new((eta - t) / 2.0, 0.0);
    let mut acc = Complex64::new(0.0, 0.0);
    for a in [1.0, -1.0] {
        for b in [1.0, -1.0] {
            let x = base + Complex64::new(0.0, (a * s1.sigma + b * s2.sigma) / 2.0);
            let n = (a as i64) * s1.m + (b as i64) * s2.m;
            acc += log_f_pair(x, n)?;
        }
    }
    Ok(acc)
}

/// W_t(s1, s2) at crossing parameter eta.
pub fn weight_b(t: f64, eta: f64, s1: &Spin, s2: &Spin) -> FnResult<Complex64> {
    Ok(log_weight_b(t, eta, s1, s2)?.exp())
}

/// The eta = 1 weight with the classic normalizing prefactor
/// G((1+t)/2)/G((1-t)/2).
pub fn weight_b_normalized(t: f64, s1: &Spin, s2: &Spin) -> FnResult<Complex64> {
    let pref = log_gamma_ratio(
        &[Complex64::new((1.0 + t) / 2.0, 0.0)],
        &[Complex64::new((1.0 - t) / 2.0, 0.0)],
    )?;
    Ok((pref + log_weight_b(t, 1.0, s1, s2)?).exp())
}

/// Self-interaction term S(sigma, m) = (sigma^2 + m^2) / (2 pi).
pub fn self_b(s: &Spin) -> f64 {
    (s.sigma * s.sigma + (s.m * s.m) as f64) / (2.0 * PI)
}

/// The gamma-ratio form of the same term,
/// (1/2 pi) G(m +- i sigma + 1)/G(m +- i sigma); agrees identically with
/// the polynomial form.
pub fn self_b_gamma_form(s: &Spin) -> FnResult<Complex64> {
    let m = Complex64::new(s.m as f64, 0.0);
    let is = Complex64::new(0.0, s.sigma);
    let r = log_gamma_ratio(&[m + is + 1.0, m - is + 1.0], &[m + is, m - is])?;
    Ok(r.exp() / (2.0 * PI))
}

/// Spin-independent factor R = G(a)G(b)G(c) / (G(eta-a)G(eta-b)G(eta-c)).
pub fn r_factor_b(t: &SpectralTriple) -> FnResult<Complex64> {
    let e = t.eta;
    let r = log_gamma_ratio(
        &[
            Complex64::new(t.alpha, 0.0),
            Complex64::new(t.beta, 0.0),
            Complex64::new(t.gamma, 0.0),
        ],
        &[
            Complex64::new(e - t.alpha, 0.0),
            Complex64::new(e - t.beta, 0.0),
            Complex64::new(e - t.gamma, 0.0),
        ],
    )?;
    Ok(r.exp())
}
