use crate::combinatorics::{partitions, Partition};
use crate::error::{Error, Result};
use crate::reps::{character, type_a_rep, type_b_rep, HeckeElement, Representation};
use crate::scalars::{ExactScalar, ParameterPoint};
use crate::schur::schur_normalized;

use super::weights::{weight_table, WeightTable};

/// The type-B Markov trace on `H_n(q, Q)` as a weighted sum of irreducible
/// characters. Representations are built once and reused across calls.
#[derive(Debug)]
pub struct MarkovTraceB {
    table: WeightTable,
    terms: Vec<(ExactScalar, Representation)>,
}

impl MarkovTraceB {
    pub fn new(n: usize, r1: usize, r2: usize, point: &ParameterPoint) -> Result<Self> {
        let table = weight_table(n, r1, r2, point)?;
        let terms = table
            .entries
            .iter()
            .filter(|(_, w)| !w.is_zero())
            .map(|(shape, w)| type_b_rep(shape, point).map(|rep| (w.clone(), rep)))
            .collect::<Result<Vec<_>>>()?;
        Ok(MarkovTraceB { table, terms })
    }

    pub fn table(&self) -> &WeightTable {
        &self.table
    }

    pub fn g_factor(&self) -> &ExactScalar {
        &self.table.g_factor
    }

    pub fn t_factor(&self) -> &ExactScalar {
        &self.table.t_factor
    }

    pub fn trace(&self, element: &HeckeElement) -> Result<ExactScalar> {
        if element.ambient_n() > self.table.n {
            return Err(Error::pre(format!(
                "element of rank {} given to a rank-{} trace",
                element.ambient_n(),
                self.table.n
            )));
        }
        let mut total = ExactScalar::zero();
        for (w, rep) in &self.terms {
            total += w * character(rep, element)?;
        }
        Ok(total)
    }
}

/// `tr(element)` for the type-B Markov trace with row bounds `r1`, `r2`.
pub fn markov_trace_b(
    element: &HeckeElement,
    n: usize,
    r1: usize,
    r2: usize,
    point: &ParameterPoint,
) -> Result<ExactScalar> {
    MarkovTraceB::new(n, r1, r2, point)?.trace(element)
}

/// The type-A Markov trace on `H_n(q)` whose weights are the normalised
/// Schur functions `s_{mu,r}(q)`.
#[derive(Debug)]
pub struct MarkovTraceA {
    n: usize,
    terms: Vec<(ExactScalar, Representation)>,
}

impl MarkovTraceA {
    pub fn new(n: usize, r: usize, q: &ExactScalar) -> Result<Self> {
        let point = ParameterPoint::with_unit_big_q(q.clone())?;
        let mut terms = Vec::new();
        for (mu, w) in type_a_weights(n, r, q)? {
            if !w.is_zero() {
                terms.push((w, type_a_rep(&mu, &point)?));
            }
        }
        Ok(MarkovTraceA { n, terms })
    }

    pub fn trace(&self, element: &HeckeElement) -> Result<ExactScalar> {
        if !element.is_type_a() {
            return Err(Error::pre("type-A trace applied to a word containing t, t' or u"));
        }
        if element.ambient_n() > self.n {
            return Err(Error::pre("element rank exceeds trace rank"));
        }
        let mut total = ExactScalar::zero();
        for (w, rep) in &self.terms {
            total += w * character(rep, element)?;
        }
        Ok(total)
    }
}

/// `(mu, s_{mu,r}(q))` for every partition of `n`, in canonical order.
pub fn type_a_weights(n: usize, r: usize, q: &ExactScalar) -> Result<Vec<(Partition, ExactScalar)>> {
    partitions(n)
        .into_iter()
        .map(|mu| schur_normalized(&mu, r, q).map(|w| (mu, w)))
        .collect()
}

pub fn type_a_markov_trace(element: &HeckeElement, n: usize, r: usize, q: &ExactScalar) -> Result<ExactScalar> {
    MarkovTraceA::new(n, r, q)?.trace(element)
}
