//! Complex-valued special functions.

mod bernoulli;
mod hyperbolic;
mod log_gamma;
mod orbifold;
mod q_pochhammer;

pub use bernoulli::bernoulli_b22;
pub use hyperbolic::{
    hyperbolic_gamma, hyperbolic_gamma_integral, hyperbolic_gamma_product, log_hyperbolic_gamma,
    log_hyperbolic_gamma_integral, log_hyperbolic_gamma_product,
};
pub use log_gamma::{gamma, gamma_ratio, log_gamma, log_gamma_ratio};
pub use orbifold::{
    big_gamma_h, epsilon_weight, epsilon_weight_folded, gamma_h, log_big_gamma_h, log_gamma_h,
    phi_h,
};
pub use q_pochhammer::{log_q_pochhammer, q_pochhammer, PochhammerDiagnostics};
