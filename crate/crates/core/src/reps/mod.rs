//! Seminormal matrix representations of the type-A and type-B Hecke
//! algebras, words and elements in their generators, and evaluation.

mod eval;
mod grammar;
mod seminormal;
mod word;

pub use eval::{character, evaluate, evaluate_word, relation_residuals, Residual};
pub use grammar::{parse_element, parse_letter, parse_word};
pub use seminormal::{full_twist_scalar, skew_rep, type_a_rep, type_b_rep, RepLabel, Representation};
pub use word::{
    coset_representatives, double_coset_representatives, expand_word, random_word, Alphabet,
    HeckeElement, HeckeWord, Letter,
};
