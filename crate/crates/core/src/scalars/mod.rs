//! Exact rational scalars, dense matrices over them, and admissible
//! specialisations of the Hecke parameters `(q, Q)`.

mod matrix;
mod point;
mod rational;

pub use matrix::ScalarMatrix;
pub use point::{admissible_point, qpow, sample_q_values, specialized_point, ParameterPoint};
pub use rational::ExactScalar;
