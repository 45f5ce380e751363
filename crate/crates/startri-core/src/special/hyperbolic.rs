//! Hyperbolic gamma function in two representations.
//!
//! Product form (the workhorse away from real squashing): with the moduli
//! ordered so that Im(omega2/omega1) < 0 (the function is symmetric in the
//! moduli, verified by the cross-representation tests),
//!
//!   g2(z) = exp(-i pi B22(z)/2) (e^{2 pi i z/w1} qt; qt) / (e^{2 pi i z/w2}; q),
//!   qt = e^{-2 pi i w2/w1},  q = e^{2 pi i w1/w2},  |qt|, |q| < 1.
//!
//! The source display pairs the nomes this way but prints the same exponent
//! in numerator and denominator; the convention here is the one under which
//! the reflection identity g2(z) g2(2 eta - z) = 1, the known large-modulus
//! reduction and both asymptotic sectors all hold numerically.
//!
//! Integral form (valid for real squashing, needs Re w1, Re w2 > 0 after a
//! canonical phase rotation, exact by degree-zero homogeneity):
//!
//!   log g2(z) = int_0^inf dt/t [ (2z-2eta)/(2 w1 w2 t)
//!                                - sinh((2z-2eta) t)/(2 sinh(w1 t) sinh(w2 t)) ]
//!
//! on the strip 0 < Re z < Re(2 eta), extended elsewhere by the reflection
//! identity and the shift identity g2(z + w1) = 2 sin(pi z / w2) g2(z).
//!
//! Poles sit on -(a w1 + b w2), zeros on 2 eta + a w1 + b w2, a, b >= 0.

use crate::error::{FnError, FnResult};
use crate::special::bernoulli::bernoulli_b22;
use crate::special::q_pochhammer::log_q_pochhammer;
use crate::types::{Moduli, QNome};
use num_complex::Complex64;
use std::f64::consts::{PI, TAU};

const I: Complex64 = Complex64::new(0.0, 1.0);

/// log of 2 sin(w), stable for large |Im w|.
fn log_two_sin(w: Complex64) -> Complex64 {
    if w.im > 0.0 {
        I * (PI / 2.0) - I * w + (Complex64::new(1.0, 0.0) - (2.0 * I * w).exp()).ln()
    } else {
        -I * (PI / 2.0) + I * w + (Complex64::new(1.0, 0.0) - (-2.0 * I * w).exp()).ln()
    }
}

/// Log of the product representation. Errors with `Pole` at poles, `Domain`
/// at zeros (where the log is undefined) and for real squashing.
pub fn log_hyperbolic_gamma_product(z: Complex64, moduli: &Moduli) -> FnResult<Complex64> {
    let ratio = moduli.omega2 / moduli.omega1;
    if ratio.im.abs() < 1e-12 * ratio.norm() {
        return Err(FnError::Domain(
            "product representation invalid for real omega2/omega1".into(),
        ));
    }
    let (w1, w2) = if ratio.im > 0.0 {
        (moduli.omega2, moduli.omega1)
    } else {
        (moduli.omega1, moduli.omega2)
    };
    let qt = QNome::new((-I * TAU * w2 / w1).exp())
        .map_err(|_| FnError::Domain("nome escaped the unit disk".into()))?;
    let q = QNome::new((I * TAU * w1 / w2).exp())
        .map_err(|_| FnError::Domain("nome escaped the unit disk".into()))?;
    let num = match log_q_pochhammer((I * TAU * z / w1).exp() * qt.value(), &qt) {
        Ok((v, _)) => v,
        Err(FnError::Pole(_)) => {
            return Err(FnError::Domain(format!("{z} is a zero; log undefined")))
        }
        Err(e) => return Err(e),
    };
    let den = match log_q_pochhammer((I * TAU * z / w2).exp(), &q) {
        Ok((v, _)) => v,
        Err(FnError::Pole(_)) => return Err(FnError::Pole(z)),
        Err(e) => return Err(e),
    };
    Ok(-I * PI / 2.0 * bernoulli_b22(z, moduli) + num - den)
}

/// Product-representation value; zeros return 0, poles error.
pub fn hyperbolic_gamma_product(z: Complex64, moduli: &Moduli) -> FnResult<Complex64> {
    match log_hyperbolic_gamma_product(z, moduli) {
        Ok(lg) => Ok(lg.exp()),
        Err(FnError::Domain(msg)) if msg.ends_with("log undefined") => {
            Ok(Complex64::new(0.0, 0.0))
        }
        Err(e) => Err(e),
    }
}

// 16-point Gauss-Legendre rule on [-1, 1].
const GL16: [(f64, f64); 16] = [
    (-9.89400934991649939e-01, 2.71524594117540374e-02),
    (-9.44575023073232600e-01, 6.22535239386477063e-02),
    (-8.65631202387831755e-01, 9.51585116824925914e-02),
    (-7.55404408355002999e-01, 1.24628971255534030e-01),
    (-6.17876244402643771e-01, 1.49595988816576764e-01),
    (-4.58016777657227370e-01, 1.69156519395002619e-01),
    (-2.81603550779258915e-01, 1.82603415044923612e-01),
    (-9.50125098376374544e-02, 1.89450610455068585e-01),
    (9.50125098376374544e-02, 1.89450610455068585e-01),
    (2.81603550779258915e-01, 1.82603415044923612e-01),
    (4.58016777657227370e-01, 1.69156519395002619e-01),
    (6.17876244402643771e-01, 1.49595988816576764e-01),
    (7.55404408355002999e-01, 1.24628971255534030e-01),
    (8.65631202387831755e-01, 9.51585116824925914e-02),
    (9.44575023073232600e-01, 6.22535239386477063e-02),
    (9.89400934991649939e-01, 2.71524594117540374e-02),
];

/// Composite Gauss-Legendre integral of an analytic integrand on [0, T].
fn gl_integrate(f: impl Fn(f64) -> Complex64, t_max: f64, panels: usize) -> Complex64 {
    let h = t_max / panels as f64;
    let mut acc = Complex64::new(0.0, 0.0);
    for p in 0..panels {
        let mid = (p as f64 + 0.5) * h;
        for (x, w) in GL16 {
            acc += f(mid + 0.5 * h * x) * (0.5 * h * w);
        }
    }
    acc
}

/// Integrand of the strip formula at rotated data.
fn strip_integrand(a: Complex64, w1: Complex64, w2: Complex64, t: f64) -> Complex64 {
    if t < 1e-140 {
        return -a * (a * a - w1 * w1 - w2 * w2) / (12.0 * w1 * w2);
    }
    let num = ((a - w1 - w2) * t).exp() - ((-a - w1 - w2) * t).exp();
    let den = (Complex64::new(1.0, 0.0) - (-2.0 * w1 * t).exp())
        * (Complex64::new(1.0, 0.0) - (-2.0 * w2 * t).exp())
        / 2.0;
    (a / (2.0 * w1 * w2 * t) - num / den / 2.0) / t
}

/// Strip-interior evaluation of the integral representation (rotated data,
/// 0 < Re z < Re 2eta assumed).
fn log_g2_strip(z: Complex64, w1: Complex64, w2: Complex64) -> FnResult<Complex64> {
    let two_eta = w1 + w2;
    let a = 2.0 * z - two_eta;
    let rate = (two_eta.re - a.re.abs())
        .min(2.0 * w1.re)
        .min(2.0 * w2.re);
    if rate <= 0.0 {
        return Err(FnError::Domain("argument outside the integral strip".into()));
    }
    let t_max = 42.0 / rate;
    let freq = a.norm().max(w1.norm()).max(w2.norm()).max(1.0);
    let panels = ((t_max * freq / 2.0).ceil() as usize).clamp(4, 4000);
    let coarse = gl_integrate(|t| strip_integrand(a, w1, w2, t), t_max, panels);
    let fine = gl_integrate(|t| strip_integrand(a, w1, w2, t), t_max, 2 * panels);
    if (fine - coarse).norm() > 1e-9 * fine.norm().max(1.0) {
        return Err(FnError::Domain(format!(
            "integral representation did not converge (delta {:.3e})",
            (fine - coarse).norm()
        )));
    }
    Ok(fine + a / (2.0 * w1 * w2 * t_max))
}

/// Log of the integral representation, extended outside the strip by the
/// reflection and shift identities. Requires both rotated moduli in the
/// right half plane.
pub fn log_hyperbolic_gamma_integral(z: Complex64, moduli: &Moduli) -> FnResult<Complex64> {
    // canonical rotation: degree-zero homogeneity leaves the value unchanged
    let phase = (-I * 0.5 * (moduli.omega1.arg() + moduli.omega2.arg())).exp();
    let w1 = moduli.omega1 * phase;
    let w2 = moduli.omega2 * phase;
    if w1.re <= 0.0 || w2.re <= 0.0 {
        return Err(FnError::Domain(
            "moduli cone opens past a half plane; integral form unavailable".into(),
        ));
    }
    let mut zr = z * phase;
    let two_eta = w1 + w2;
    let margin = 0.25 * w1.re.min(w2.re);

    // reflect into the left half of the strip if needed
    let mut sign = 1.0;
    let mut corr = Complex64::new(0.0, 0.0);
    if zr.re > 0.5 * two_eta.re {
        zr = two_eta - zr;
        sign = -1.0;
    }
    // shift right until comfortably inside; shift by the wider modulus
    let (step, other) = if w1.re >= w2.re { (w1, w2) } else { (w2, w1) };
    let mut steps = 0;
    while zr.re < margin {
        corr -= log_two_sin(PI * zr / other);
        zr += step;
        steps += 1;
        if steps > 600 {
            return Err(FnError::Domain("too many shifts to reach the strip".into()));
        }
    }
    let inner = log_g2_strip(zr, w1, w2)?;
    Ok(sign * (inner + corr))
}

/// Integral-representation value.
pub fn hyperbolic_gamma_integral(z: Complex64, moduli: &Moduli) -> FnResult<Complex64> {
    Ok(log_hyperbolic_gamma_integral(z, moduli)?.exp())
}

/// Log of the hyperbolic gamma function; picks the representation from the
/// squashing: infinite products away from real omega2/omega1, the integral
/// form otherwise.
pub fn log_hyperbolic_gamma(z: Complex64, moduli: &Moduli) -> FnResult<Complex64> {
    if moduli.is_real_squashing() {
        log_hyperbolic_gamma_integral(z, moduli)
    } else {
        log_hyperbolic_gamma_product(z, moduli)
    }
}

/// Hyperbolic gamma function value.
pub fn hyperbolic_gamma(z: Complex64, moduli: &Moduli) -> FnResult<Complex64> {
    if moduli.is_real_squashing() {
        hyperbolic_gamma_integral(z, moduli)
    } else {
        hyperbolic_gamma_product(z, moduli)
    }
}
