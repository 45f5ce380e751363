//! Superconformal-index one-loop blocks: q-Pochhammer ratios on the unit
//! circle with integer monopole charges.
//!
//! `index_chiral_factor` follows the one-loop display (absolute value of the
//! combined discrete charge); the assembled sum/integral identity uses the
//! signed working form `index_term_log`, which reproduces the parent
//! identity verbatim. The two differ per term by theta-factor
//! rearrangements that cancel in the assembled pair.

use crate::error::{FnError, FnResult};
use crate::special::log_q_pochhammer;
use crate::types::{FugacitySet, MultipletData, QNome};
use num_complex::Complex64;

fn log_poch(z: Complex64, q: &QNome) -> FnResult<Complex64> {
    Ok(log_q_pochhammer(z, q)?.0)
}

/// Integer power of q^{1/2} (principal root), exact for the half-integer
/// exponents that appear in the blocks.
fn q_half_pow(q: &QNome, k: i64) -> Complex64 {
    q.sqrt().powi(k as i32)
}

/// One-multiplet chiral factor of the index (display convention with
/// |rho(m) + phi(n)|), multiplicative variables:
///   (q^{1 - D/2 + |M|/2} / (g z^rho); q) / (q^{D/2 + |M|/2} g z^rho; q)
/// with M = rho m + n, g the combined flavor fugacity.
pub fn index_chiral_factor(
    mult: &MultipletData,
    z: Complex64,
    m: i64,
    q: &QNome,
) -> FnResult<Complex64> {
    let rho = mult.gauge_weight;
    let zr = match rho {
        0 => Complex64::new(1.0, 0.0),
        r => z.powi(r),
    };
    let g = mult.flavor_charge;
    if g.norm() == 0.0 {
        return Err(FnError::Domain("flavor fugacity must be nonzero".into()));
    }
    let m_abs = (rho as i64 * m + mult.flavor_discrete).abs();
    let qd = q.value().powc(Complex64::new(1.0 - mult.delta / 2.0, 0.0));
    let qn = q.value().powc(Complex64::new(mult.delta / 2.0, 0.0));
    let num = log_poch(qd * q_half_pow(q, m_abs) / (g * zr), q)?;
    let den = log_poch(qn * q_half_pow(q, m_abs) * g * zr, q)?;
    Ok((num - den).exp())
}

/// The rho = +1 and rho = -1 members of a doublet assembled together.
pub fn index_chiral_pair(
    mult: &MultipletData,
    z: Complex64,
    m: i64,
    q: &QNome,
) -> FnResult<Complex64> {
    let up = index_chiral_factor(mult, z, m, q)?;
    let down = MultipletData { gauge_weight: -mult.gauge_weight, ..*mult };
    Ok(up * index_chiral_factor(&down, z, m, q)?)
}

/// log of the vector-multiplet measure (1 - q^m z^2)(1 - q^m z^-2) / (q^m z^{6m}).
pub fn index_vector_measure_log(z: Complex64, m: i64, q: &QNome) -> FnResult<Complex64> {
    let qm = q.value().powi(m as i32);
    let one = Complex64::new(1.0, 0.0);
    let f1 = one - qm * z * z;
    let f2 = one - qm / (z * z);
    if f1.norm() < 1e-250 || f2.norm() < 1e-250 {
        return Err(FnError::Pole(z));
    }
    Ok(f1.ln() + f2.ln() - (m as f64) * q.value().ln() - 6.0 * (m as f64) * z.ln())
}

/// log of the full index integrand at flux m and contour point z: the six
/// signed-convention flavor factors times the vector measure.
pub fn index_term_log(fug: &FugacitySet, q: &QNome, m: i64, z: Complex64) -> FnResult<Complex64> {
    let mut acc = index_vector_measure_log(z, m, q)?;
    for j in 0..6 {
        let g = fug.g[j];
        let n = fug.n[j];
        acc += log_poch(q_half_pow(q, 2 + m + n) / (g * z), q)?;
        acc += log_poch(q_half_pow(q, 2 + n - m) * z / g, q)?;
        acc -= log_poch(q_half_pow(q, m + n) * g * z, q)?;
        acc -= log_poch(q_half_pow(q, n - m) * g / z, q)?;
    }
    Ok(acc)
}

/// log of the product side: 2 / prod g_j^{n_j} * prod_{j<k} Pochhammer ratios.
pub fn index_rhs_log(fug: &FugacitySet, q: &QNome) -> FnResult<Complex64> {
    let mut acc = Complex64::new(2f64.ln(), 0.0);
    for j in 0..6 {
        acc -= (fug.n[j] as f64) * fug.g[j].ln();
    }
    for j in 0..6 {
        for k in (j + 1)..6 {
            let gg = fug.g[j] * fug.g[k];
            let nn = fug.n[j] + fug.n[k];
            acc += log_poch(q_half_pow(q, 2 + nn) / gg, q)?;
            acc -= log_poch(q_half_pow(q, nn) * gg, q)?;
        }
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64 as C;

    fn nome(q: f64) -> QNome {
        QNome::new(C::new(q, 0.0)).unwrap()
    }

    #[test]
    fn chiral_factor_unity_at_delta_one() {
        // Delta = 1, zero charges: numerator equals denominator
        let q = nome(0.32);
        let mult = MultipletData::new(1.0, 1, C::new(1.0, 0.0), 0).unwrap();
        let v = index_chiral_factor(&mult, C::from_polar(1.0, 0.7), 0, &q).unwrap();
        assert!((v - 1.0).norm() < 1e-13, "{v}");
    }

    #[test]
    fn chiral_factor_frozen_value() {
        // Delta = 1/3, zero charges, g = q^0.1 e^{0.15 i}, z = e^{0.4 i}
        let q = nome(0.32);
        let g = C::from_polar(0.32f64.powf(0.1), 0.15);
        let mult = MultipletData::new(1.0 / 3.0, 1, g, 0).unwrap();
        let v = index_chiral_factor(&mult, C::from_polar(1.0, 0.4), 0, &q).unwrap();
        let want = C::new(0.126_699_151_553_1, 1.420_643_528_176_135);
        assert!((v - want).norm() < 1e-12, "{v}");
    }

    #[test]
    fn pair_is_even_and_continuous_across_the_kink() {
        // scan the combined discrete charge as a continuous variable x by
        // interpolating |x| in the exponents: the assembled pair must be
        // even in x and continuous across x = 0
        let q = nome(0.32);
        let g = C::from_polar(0.32f64.powf(0.18), 0.21);
        let z = C::from_polar(1.0, 0.73);
        let pair_abs = |x: f64| -> C {
            let xa = x.abs();
            let qq = q.value();
            let num1 = log_poch(qq.powf(1.0 + xa / 2.0) / (g * z), &q).unwrap();
            let den1 = log_poch(qq.powf(xa / 2.0) * g * z, &q).unwrap();
            let num2 = log_poch(qq.powf(1.0 + xa / 2.0) * z / g, &q).unwrap();
            let den2 = log_poch(qq.powf(xa / 2.0) * g / z, &q).unwrap();
            (num1 - den1 + num2 - den2).exp()
        };
        let eps = 1e-6;
        let left = pair_abs(-eps);
        let right = pair_abs(eps);
        assert!((left - right).norm() < 1e-9, "kink: {left} vs {right}");
        for x in [0.1, 0.4, 1.3] {
            assert!((pair_abs(x) - pair_abs(-x)).norm() < 1e-12);
        }
    }

    #[test]
    fn vector_measure_cases() {
        let q = nome(0.32);
        // m = 0, z = 1: the (1 - z^2) factor vanishes
        assert!(matches!(
            index_vector_measure_log(C::new(1.0, 0.0), 0, &q),
            Err(FnError::Pole(_))
        ));
        // m = 0, z = i: (1+1)(1+1) = 4
        let v = index_vector_measure_log(C::new(0.0, 1.0), 0, &q).unwrap().exp();
        assert!((v - 4.0).norm() < 1e-13, "{v}");
    }
}
