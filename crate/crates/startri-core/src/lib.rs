//! Numerical library for gamma-function solutions of the star-triangle relation.
//!
//! The crate evaluates the special functions (Euler gamma, q-Pochhammer,
//! hyperbolic gamma, orbifold gamma), the Boltzmann weights and one-loop
//! factors built from them, and verifies the associated integral/sum
//! identities and limiting reductions to controlled numerical tolerance.
//!
//! Everything is pure: evaluation functions are deterministic and safe to
//! call concurrently. Randomness only enters through explicit seeds in the
//! identity samplers.

pub mod error;
pub mod identities;
pub mod quadrature;
pub mod reductions;
pub mod special;
pub mod types;
pub mod weights;

pub use error::{FnError, QuadError};
pub use types::{
    BalancingKind, ComplexScalar, FugacitySet, Moduli, MultipletData, OrbifoldParams, QNome, Spin,
    SpectralTriple,
};
