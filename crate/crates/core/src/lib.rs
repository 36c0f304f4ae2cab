//! Exact seminormal representations of Hecke algebras of types A, B and D,
//! and the weights of their Markov traces.
//!
//! Everything is computed over the rationals at explicit parameter points
//! `(q, Q)`; identities between rational functions are checked by exact
//! evaluation at several admissible points.

pub mod combinatorics;
pub mod error;
pub mod scalars;
pub mod reps;
pub mod schur;
pub mod traces;
pub mod homcheck;
pub mod report;
pub mod verify;

pub use error::{Error, Result};
