//! Second-order Bernoulli polynomial B_{2,2}.

use crate::types::Moduli;
use num_complex::Complex64;

/// B_{2,2}(u; omega1, omega2)
///   = u^2/(w1 w2) - u/w1 - u/w2 + w1/(6 w2) + w2/(6 w1) + 1/2.
pub fn bernoulli_b22(u: Complex64, moduli: &Moduli) -> Complex64 {
    let w1 = moduli.omega1;
    let w2 = moduli.omega2;
    u * u / (w1 * w2) - u / w1 - u / w2 + w1 / (6.0 * w2) + w2 / (6.0 * w1) + 0.5
}
