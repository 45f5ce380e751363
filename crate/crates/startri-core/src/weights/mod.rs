//! Boltzmann weights, self-interaction terms, and one-loop factor factories
//! for the four geometries, specialized to the rank-1 / six-flavor duality.

mod index;
mod model_a;
mod model_b;
mod orbifold;
mod sphere2;
mod sphere3;

pub use index::{
    index_chiral_factor, index_chiral_pair, index_rhs_log, index_term_log,
    index_vector_measure_log,
};
pub use model_a::{
    log_self_a, log_weight_a_horizontal, log_weight_a_vertical, r_factor_a, self_a,
    weight_a_horizontal, weight_a_vertical, ConventionA,
};
pub use model_b::{
    log_weight_b, r_factor_b, self_b, self_b_gamma_form, weight_b, weight_b_normalized,
};
pub use orbifold::{lens_rhs_log, lens_term_log, orbifold_chiral_factor, orbifold_vector_factor};
pub use sphere2::{
    log_f_pair, sphere2_chiral_factor, sphere2_rhs_log, sphere2_term_log, sphere2_vector_factor,
};
pub use sphere3::{sphere3_chiral_factor, sphere3_rhs_log, sphere3_term_log, sphere3_vector_factor};
