//! Truncated bilateral and half-line sums over integer charges.

use super::{QuadDiagnostics, QuadOutcome, SumSpec};
use crate::error::{QuadError, QuadResult};
use crate::special::epsilon_weight;
use num_complex::Complex64;

/// Sum over m in Z, grown symmetrically until the last shell |m| = M
/// contributes below tail_tol relative to the partial sum. Two consecutive
/// small shells are required, so alternating-sign cancellations at a single
/// shell cannot stop the sum early.
pub fn bilateral_sum(
    term: &mut dyn FnMut(i64) -> QuadResult<Complex64>,
    spec: &SumSpec,
) -> QuadResult<QuadOutcome> {
    let mut acc = term(0)?;
    let mut nodes = 1usize;
    let mut small_streak = 0usize;
    let mut last_shell = f64::INFINITY;
    for m in 1..=spec.max_halfwidth as i64 {
        let shell = term(m)? + term(-m)?;
        nodes += 2;
        acc += shell;
        last_shell = shell.norm();
        if m >= spec.initial_halfwidth as i64 {
            if last_shell <= spec.tail_tol * acc.norm().max(1e-300) {
                small_streak += 1;
                if small_streak >= 2 {
                    return Ok(QuadOutcome {
                        value: acc,
                        err: last_shell,
                        diagnostics: QuadDiagnostics {
                            nodes,
                            refinements: 0,
                            cutoff: m as f64,
                            tail_bound: last_shell,
                        },
                    });
                }
            } else {
                small_streak = 0;
            }
        }
    }
    Err(QuadError::NoConvergence {
        refinements: spec.max_halfwidth as usize,
        last_delta: last_shell,
    })
}

/// Sum over m >= 0 of epsilon(m) * term(m), truncated adaptively or at the
/// supplied finite cap (inclusive).
pub fn half_line_weighted_sum(
    term: &mut dyn FnMut(i64) -> QuadResult<Complex64>,
    spec: &SumSpec,
    cap: Option<u64>,
) -> QuadResult<QuadOutcome> {
    if let Some(cap) = cap {
        let mut acc = Complex64::new(0.0, 0.0);
        let mut nodes = 0usize;
        for m in 0..=cap as i64 {
            let w = epsilon_weight(m).expect("m >= 0") as f64;
            acc += term(m)? * w;
            nodes += 1;
        }
        return Ok(QuadOutcome {
            value: acc,
            err: 0.0,
            diagnostics: QuadDiagnostics {
                nodes,
                refinements: 0,
                cutoff: cap as f64,
                tail_bound: 0.0,
            },
        });
    }
    let mut acc = term(0)?;
    let mut nodes = 1usize;
    let mut small_streak = 0usize;
    let mut last = f64::INFINITY;
    for m in 1..=spec.max_halfwidth as i64 {
        let shell = term(m)? * 2.0;
        nodes += 1;
        acc += shell;
        last = shell.norm();
        if m >= spec.initial_halfwidth as i64 {
            if last <= spec.tail_tol * acc.norm().max(1e-300) {
                small_streak += 1;
                if small_streak >= 2 {
                    return Ok(QuadOutcome {
                        value: acc,
                        err: last,
                        diagnostics: QuadDiagnostics {
                            nodes,
                            refinements: 0,
                            cutoff: m as f64,
                            tail_bound: last,
                        },
                    });
                }
            } else {
                small_streak = 0;
            }
        }
    }
    Err(QuadError::NoConvergence {
        refinements: spec.max_halfwidth as usize,
        last_delta: last,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64 as C;

    #[test]
    fn delta_term() {
        let spec = SumSpec::default();
        let mut t = |m: i64| Ok(if m == 0 { C::new(3.5, -1.0) } else { C::new(0.0, 0.0) });
        let out = bilateral_sum(&mut t, &spec).unwrap();
        assert!((out.value - C::new(3.5, -1.0)).norm() < 1e-15);
    }

    #[test]
    fn geometric_series() {
        // sum over m of 0.5^{|m|} = (1 + x)/(1 - x) = 3
        let spec = SumSpec { tail_tol: 1e-14, ..Default::default() };
        let mut t = |m: i64| Ok(C::new(0.5f64.powi(m.unsigned_abs() as i32), 0.0));
        let out = bilateral_sum(&mut t, &spec).unwrap();
        assert!((out.value.re - 3.0).abs() < 1e-12, "{}", out.value);
        assert!((out.value.re - 3.0).abs() <= 10.0 * out.err.max(1e-15));
    }

    #[test]
    fn half_line_capped() {
        // term = 1, cap 2: eps weights 1 + 2 + 2 = 5
        let spec = SumSpec::default();
        let mut t = |_m: i64| Ok(C::new(1.0, 0.0));
        let out = half_line_weighted_sum(&mut t, &spec, Some(2)).unwrap();
        assert!((out.value.re - 5.0).abs() < 1e-15);
    }

    #[test]
    fn half_line_delta() {
        let spec = SumSpec::default();
        let mut t = |m: i64| Ok(if m == 0 { C::new(1.0, 0.0) } else { C::new(0.0, 0.0) });
        let out = half_line_weighted_sum(&mut t, &spec, None).unwrap();
        assert!((out.value.re - 1.0).abs() < 1e-15);
    }

    #[test]
    fn no_convergence_on_fat_tail() {
        let spec = SumSpec { max_halfwidth: 50, ..Default::default() };
        let mut t = |m: i64| Ok(C::new(1.0 / (1.0 + m.abs() as f64), 0.0));
        assert!(matches!(
            bilateral_sum(&mut t, &spec),
            Err(QuadError::NoConvergence { .. })
        ));
    }
}
