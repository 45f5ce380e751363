//! Domain types: moduli, nomes, spins, spectral data, fugacity sets.

use crate::error::{FnError, FnResult};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

/// Complex scalar used throughout the crate.
pub type ComplexScalar = Complex64;

/// The modulus pair (omega1, omega2) of the hyperbolic gamma function.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Moduli {
    pub omega1: Complex64,
    pub omega2: Complex64,
}

impl Moduli {
    pub fn new(omega1: Complex64, omega2: Complex64) -> FnResult<Self> {
        if omega1.norm() == 0.0 || omega2.norm() == 0.0 {
            return Err(FnError::Domain("moduli must be nonzero".into()));
        }
        if !omega1.is_finite() || !omega2.is_finite() {
            return Err(FnError::Domain("moduli must be finite".into()));
        }
        Ok(Self { omega1, omega2 })
    }

    /// omega1 + omega2 (written 2*eta).
    pub fn two_eta(&self) -> Complex64 {
        self.omega1 + self.omega2
    }

    /// Squashing parameter b^2 = omega2/omega1.
    pub fn b_squared(&self) -> Complex64 {
        self.omega2 / self.omega1
    }

    /// Q = b + 1/b.
    pub fn q_param(&self) -> Complex64 {
        let b = self.b_squared().sqrt();
        b + 1.0 / b
    }

    /// True when omega2/omega1 is (numerically) real, i.e. the infinite
    /// product representation is invalid and the integral one must be used.
    pub fn is_real_squashing(&self) -> bool {
        let r = self.b_squared();
        r.im.abs() <= 5e-2 * r.norm()
    }
}

/// Base of a q-Pochhammer symbol; |q| < 1 enforced.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QNome {
    q: Complex64,
}

impl QNome {
    pub fn new(q: Complex64) -> FnResult<Self> {
        if !(q.norm() < 1.0) {
            return Err(FnError::Domain(format!(
                "|q| = {} must be < 1 for infinite products",
                q.norm()
            )));
        }
        Ok(Self { q })
    }

    pub fn value(&self) -> Complex64 {
        self.q
    }

    /// Principal square root, used for half-integer powers of q.
    pub fn sqrt(&self) -> Complex64 {
        self.q.sqrt()
    }
}

/// Orbifold data: order r and the moduli of the underlying geometry.
/// Discrete (holonomy) arguments are reduced mod r by the evaluators.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OrbifoldParams {
    pub r: u32,
    pub moduli: Moduli,
}

impl OrbifoldParams {
    pub fn new(r: u32, moduli: Moduli) -> FnResult<Self> {
        if r == 0 {
            return Err(FnError::Domain("orbifold order r must be >= 1".into()));
        }
        Ok(Self { r, moduli })
    }

    /// Residue of m in {0, .., r-1}.
    pub fn reduce(&self, m: i64) -> i64 {
        m.rem_euclid(self.r as i64)
    }
}

/// Lattice spin: continuous component sigma and discrete component m.
/// Purely continuous models fix m = 0.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Spin {
    pub sigma: f64,
    pub m: i64,
}

impl Spin {
    pub fn continuous(sigma: f64) -> Self {
        Self { sigma, m: 0 }
    }

    pub fn new(sigma: f64, m: i64) -> Self {
        Self { sigma, m }
    }
}

/// Spectral parameters of a star-triangle relation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SpectralTriple {
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
    /// Crossing parameter: alpha + beta + gamma for the mixed-spin model,
    /// irrelevant (kept for reporting) in the continuous model.
    pub eta: f64,
}

impl SpectralTriple {
    /// Continuous model constraint: gamma = alpha + beta.
    pub fn continuous(alpha: f64, beta: f64) -> FnResult<Self> {
        let gamma = alpha + beta;
        let t = Self { alpha, beta, gamma, eta: gamma };
        t.check_generic()?;
        Ok(t)
    }

    /// Mixed-spin model: eta = alpha + beta + gamma.
    pub fn mixed(alpha: f64, beta: f64, gamma: f64) -> FnResult<Self> {
        let t = Self { alpha, beta, gamma, eta: alpha + beta + gamma };
        t.check_generic()?;
        Ok(t)
    }

    fn check_generic(&self) -> FnResult<()> {
        for v in [self.alpha, self.beta, self.gamma] {
            if !(v > 0.0) || v >= self.eta + 1e-12 {
                return Err(FnError::Domain(format!(
                    "spectral parameter {v} outside (0, eta = {})",
                    self.eta
                )));
            }
            if (v - v.round()).abs() < 1e-3 && v.round() != 0.0 {
                return Err(FnError::Domain(format!(
                    "spectral parameter {v} too close to an integer"
                )));
            }
        }
        Ok(())
    }
}

/// Which balancing condition a fugacity set satisfies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BalancingKind {
    /// sum g_j = omega1 + omega2
    Hyperbolic,
    /// prod g_j = q and sum n_j = 0
    Index,
    /// sum g_j = 0
    Gamma,
    /// sum g_j = 1 with charge pairing n1 = -n4, n2 = -n5, n3 = -n6
    Mixed2d,
}

/// Six flavor fugacities with discrete charges and a balancing condition.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FugacitySet {
    pub g: [Complex64; 6],
    pub n: [i64; 6],
    pub kind: BalancingKind,
}

impl FugacitySet {
    pub fn new(g: [Complex64; 6], n: [i64; 6], kind: BalancingKind) -> Self {
        Self { g, n, kind }
    }

    pub fn sum_g(&self) -> Complex64 {
        self.g.iter().sum()
    }

    pub fn sum_n(&self) -> i64 {
        self.n.iter().sum()
    }

    /// Check the declared balancing condition to 1e-12 (multiplicative
    /// conditions in log space). `aux` supplies the condition target:
    /// 2*eta for the hyperbolic kind, q for the index kind.
    pub fn check_balancing(&self, aux: Option<Complex64>) -> FnResult<()> {
        let tol = 1e-12;
        match self.kind {
            BalancingKind::Hyperbolic => {
                let target = aux.ok_or_else(|| {
                    FnError::Domain("hyperbolic balancing needs omega1+omega2".into())
                })?;
                let gap = (self.sum_g() - target).norm();
                if gap > tol * target.norm().max(1.0) {
                    return Err(FnError::Domain(format!(
                        "balancing violated: sum g = {} but omega1+omega2 = {}",
                        self.sum_g(),
                        target
                    )));
                }
            }
            BalancingKind::Index => {
                let q = aux
                    .ok_or_else(|| FnError::Domain("index balancing needs q".into()))?;
                let log_prod: Complex64 = self.g.iter().map(|g| g.ln()).sum();
                // compare in log space mod 2 pi i
                let mut diff = log_prod - q.ln();
                let two_pi = std::f64::consts::TAU;
                diff.im -= (diff.im / two_pi).round() * two_pi;
                if diff.norm() > 1e-10 {
                    return Err(FnError::Domain(format!(
                        "balancing violated: prod g differs from q by exp({diff})"
                    )));
                }
                if self.sum_n() != 0 {
                    return Err(FnError::Domain(format!(
                        "balancing violated: sum n = {} (need 0)",
                        self.sum_n()
                    )));
                }
            }
            BalancingKind::Gamma => {
                if self.sum_g().norm() > tol {
                    return Err(FnError::Domain(format!(
                        "balancing violated: sum g = {} (need 0)",
                        self.sum_g()
                    )));
                }
            }
            BalancingKind::Mixed2d => {
                let gap = (self.sum_g() - Complex64::new(1.0, 0.0)).norm();
                if gap > tol {
                    return Err(FnError::Domain(format!(
                        "balancing violated: sum g = {} (need 1)",
                        self.sum_g()
                    )));
                }
                for j in 0..3 {
                    if self.n[j] != -self.n[j + 3] {
                        return Err(FnError::Domain(format!(
                            "charge pairing violated: n{} = {} but n{} = {}",
                            j + 1,
                            self.n[j],
                            j + 4,
                            self.n[j + 3]
                        )));
                    }
                }
            }
        }
        Ok(())
    }
}

/// One-loop data of a single multiplet weight: Weyl weight, gauge weight on
/// the rank-1 Cartan, and combined flavor data.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MultipletData {
    pub delta: f64,
    pub gauge_weight: i32,
    pub flavor_charge: Complex64,
    pub flavor_discrete: i64,
}

impl MultipletData {
    pub fn new(delta: f64, gauge_weight: i32, flavor_charge: Complex64, flavor_discrete: i64) -> FnResult<Self> {
        if !(-2..=2).contains(&gauge_weight) {
            return Err(FnError::Domain(format!(
                "gauge weight {gauge_weight} outside the rank-1 range -2..=2"
            )));
        }
        Ok(Self { delta, gauge_weight, flavor_charge, flavor_discrete })
    }
}
