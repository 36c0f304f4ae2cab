//! Markov-trace weights for types A, B and D, and the traces themselves as
//! weighted sums of irreducible characters.

mod markov;
mod type_d;
mod weights;

pub use markov::{
    markov_trace_b, type_a_markov_trace, type_a_weights, MarkovTraceA, MarkovTraceB,
};
pub use type_d::{
    markov_trace_d, restriction_labels, type_d_weight_table, weight_d, DLabel, DWeight,
    InclusionMatrix, MarkovTraceD,
};
pub use weights::{markov_params, weight_b, weight_b_schur_form, weight_table, WeightTable};
