//! Type D through the inclusion into type B at `Q = 1`.
//!
//! Restricted to the type-D subalgebra, the type-B modules of `(alpha, beta)`
//! and `(beta, alpha)` become the same irreducible module when
//! `alpha != beta`, while the module of `(alpha, alpha)` splits into two
//! non-isomorphic halves. Type-D weights are read off from this inclusion
//! pattern applied to the type-B weights.

use std::fmt;

use crate::combinatorics::{double_partitions, DoublePartition, Partition};
use crate::error::{Error, Result};
use crate::reps::HeckeElement;
use crate::scalars::{ExactScalar, ParameterPoint};

use super::markov::MarkovTraceB;
use super::weights::weight_b;

/// Index of an irreducible type-D module.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DLabel {
    /// The common restriction of `(alpha, beta)` and `(beta, alpha)`, stored
    /// under whichever of the two comes first in canonical order.
    Merged(DoublePartition),
    /// One of the two halves (`half` is 1 or 2) of the restriction of
    /// `(alpha, alpha)`.
    Split { alpha: Partition, half: u8 },
}

impl DLabel {
    /// Dimension of the type-D module.
    pub fn dimension(&self) -> u128 {
        match self {
            DLabel::Merged(shape) => shape.dimension(),
            DLabel::Split { alpha, .. } => {
                DoublePartition::new(alpha.clone(), alpha.clone()).dimension() / 2
            }
        }
    }
}

impl fmt::Display for DLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DLabel::Merged(shape) => write!(f, "{shape}"),
            DLabel::Split { alpha, half } => write!(f, "{alpha}|{alpha}_{half}"),
        }
    }
}

fn canonical(shape: &DoublePartition, order: &[DoublePartition]) -> DoublePartition {
    let swapped = shape.swapped();
    let pos = |s: &DoublePartition| order.iter().position(|x| x == s);
    if pos(&swapped) < pos(shape) {
        swapped
    } else {
        shape.clone()
    }
}

fn splits(shape: &DoublePartition) -> bool {
    shape.size() > 0 && shape.first == shape.second
}

/// Type-D labels covered by the restriction of a type-B shape. At rank 0
/// both algebras are the scalars, so the empty shape does not split.
pub fn restriction_labels(shape: &DoublePartition) -> Vec<DLabel> {
    if splits(shape) {
        (1..=2)
            .map(|half| DLabel::Split {
                alpha: shape.first.clone(),
                half,
            })
            .collect()
    } else {
        let order = double_partitions(shape.size());
        vec![DLabel::Merged(canonical(shape, &order))]
    }
}

fn unit_point(q: &ExactScalar) -> Result<ParameterPoint> {
    ParameterPoint::with_unit_big_q(q.clone())
}

/// Weights of the type-D labels lying under `shape`: one merged weight
/// `W_(alpha,beta) + W_(beta,alpha)` if `alpha != beta`, or two equal weights
/// `W_(alpha,alpha)` for the halves otherwise. All evaluated at `Q = 1`.
pub fn weight_d(shape: &DoublePartition, r1: usize, r2: usize, q: &ExactScalar) -> Result<Vec<(DLabel, ExactScalar)>> {
    let point = unit_point(q)?;
    let labels = restriction_labels(shape);
    if shape.first == shape.second {
        // Also covers rank 0, where the single label carries W_(empty,empty).
        let w = weight_b(shape, r1, r2, &point)?;
        Ok(labels.into_iter().map(|l| (l, w.clone())).collect())
    } else {
        let w = weight_b(shape, r1, r2, &point)? + weight_b(&shape.swapped(), r1, r2, &point)?;
        Ok(labels.into_iter().map(|l| (l, w.clone())).collect())
    }
}

/// A type-D weight table row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DWeight {
    pub label: DLabel,
    pub weight: ExactScalar,
    pub dimension: u128,
}

/// One row per irreducible type-D module of rank `n`, in canonical order.
pub fn type_d_weight_table(n: usize, r1: usize, r2: usize, q: &ExactScalar) -> Result<Vec<DWeight>> {
    let mut rows: Vec<DWeight> = Vec::new();
    for shape in double_partitions(n) {
        for (label, weight) in weight_d(&shape, r1, r2, q)? {
            if rows.iter().any(|row| row.label == label) {
                continue;
            }
            rows.push(DWeight {
                dimension: label.dimension(),
                label,
                weight,
            });
        }
    }
    Ok(rows)
}

/// The inclusion pattern of type D in type B at rank `n`: entry `[i][j]` is
/// the multiplicity of the `i`-th type-D label in the restriction of the
/// `j`-th type-B shape.
#[derive(Clone, Debug)]
pub struct InclusionMatrix {
    pub d_labels: Vec<DLabel>,
    pub b_shapes: Vec<DoublePartition>,
    pub entries: Vec<Vec<u32>>,
}

impl InclusionMatrix {
    pub fn new(n: usize) -> Self {
        let b_shapes = double_partitions(n);
        let mut d_labels: Vec<DLabel> = Vec::new();
        for shape in &b_shapes {
            for label in restriction_labels(shape) {
                if !d_labels.contains(&label) {
                    d_labels.push(label);
                }
            }
        }
        let entries = d_labels
            .iter()
            .map(|label| {
                b_shapes
                    .iter()
                    .map(|s| restriction_labels(s).iter().filter(|l| *l == label).count() as u32)
                    .collect()
            })
            .collect();
        InclusionMatrix {
            d_labels,
            b_shapes,
            entries,
        }
    }

    /// The matrix applied to a vector indexed by type-B shapes.
    pub fn apply(&self, b_vector: &[ExactScalar]) -> Result<Vec<ExactScalar>> {
        if b_vector.len() != self.b_shapes.len() {
            return Err(Error::Dimension(format!(
                "expected {} type-B entries, got {}",
                self.b_shapes.len(),
                b_vector.len()
            )));
        }
        Ok(self
            .entries
            .iter()
            .map(|row| {
                row.iter()
                    .zip(b_vector)
                    .filter(|(k, _)| **k > 0)
                    .map(|(k, v)| v * ExactScalar::from(*k as i64))
                    .sum()
            })
            .collect())
    }
}

/// The type-D Markov trace: the type-B trace at `Q = 1` restricted to
/// elements in `u` and the `g_i`.
#[derive(Debug)]
pub struct MarkovTraceD {
    inner: MarkovTraceB,
}

impl MarkovTraceD {
    pub fn new(n: usize, r1: usize, r2: usize, q: &ExactScalar) -> Result<Self> {
        Ok(MarkovTraceD {
            inner: MarkovTraceB::new(n, r1, r2, &unit_point(q)?)?,
        })
    }

    pub fn g_factor(&self) -> &ExactScalar {
        self.inner.g_factor()
    }

    pub fn trace(&self, element: &HeckeElement) -> Result<ExactScalar> {
        if !element.is_type_d() {
            return Err(Error::pre("type-D trace applied to a word containing t or t'"));
        }
        self.inner.trace(element)
    }
}

pub fn markov_trace_d(element: &HeckeElement, n: usize, r1: usize, r2: usize, q: &ExactScalar) -> Result<ExactScalar> {
    MarkovTraceD::new(n, r1, r2, q)?.trace(element)
}
