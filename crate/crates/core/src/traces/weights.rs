use crate::combinatorics::{double_partitions, DoublePartition};
use crate::error::{Error, Result};
use crate::scalars::{ExactScalar, ParameterPoint};
use crate::schur::schur_principal;

fn nonzero(x: ExactScalar, what: &str) -> Result<ExactScalar> {
    if x.is_zero() {
        Err(Error::DivisionByZero(what.to_string()))
    } else {
        Ok(x)
    }
}

fn check_rows(r1: usize, r2: usize) -> Result<()> {
    if r1 == 0 || r2 == 0 {
        return Err(Error::pre("row bounds r1 and r2 must be at least 1"));
    }
    Ok(())
}

/// Product over pairs `i < j <= rows` of `(1 - q^(a_i - a_j + j - i)) / (1 - q^(j - i))`.
fn vandermonde_ratio(parts: &[usize], q: &ExactScalar) -> Result<ExactScalar> {
    let one = ExactScalar::one();
    let mut value = ExactScalar::one();
    for i in 0..parts.len() {
        for j in i + 1..parts.len() {
            let gap = (j - i) as i64;
            let num = &one - q.pow(parts[i] as i64 - parts[j] as i64 + gap);
            value = value * num / nonzero(&one - q.pow(gap), "1 - q^k")?;
        }
    }
    Ok(value)
}

/// The type-B Markov weight of a double partition for row bounds `r1`, `r2`,
/// evaluated from its product formula. Shapes that do not fit the row bounds
/// get weight 0.
pub fn weight_b(shape: &DoublePartition, r1: usize, r2: usize, point: &ParameterPoint) -> Result<ExactScalar> {
    check_rows(r1, r2)?;
    let (Some(a), Some(b)) = (shape.first.padded(r1), shape.second.padded(r2)) else {
        return Ok(ExactScalar::zero());
    };
    let q = point.q();
    let big_q = point.big_q();
    let one = ExactScalar::one();
    let r = (r1 + r2) as i64;
    let ratio = (&one - q) / nonzero(&one - q.pow(r), "1 - q^r")?;
    let mut value = q.pow((shape.first.n_stat() + shape.second.n_stat()) as i64)
        * ratio.pow(shape.size() as i64)
        * vandermonde_ratio(&a, q)?
        * vandermonde_ratio(&b, q)?;
    for i in 1..=r1 {
        for j in 1..=r2 {
            let (ii, jj) = (i as i64, j as i64);
            let num = big_q * q.pow(a[i - 1] as i64 - ii) + q.pow(b[j - 1] as i64 - jj);
            let den = big_q * q.pow(-ii) + q.pow(-jj);
            value = value * num / nonzero(den, "Q = -q^(i-j) in the cross product")?;
        }
    }
    Ok(value)
}

/// The same weight, evaluated through principal Schur specialisations:
/// `q^(r1 |beta|) s_alpha s_beta / s_[1]^n` times the cross product
/// `(1 + Q q^(alpha_i - beta_j + j - i)) / (1 + Q q^(j - i))`.
pub fn weight_b_schur_form(
    shape: &DoublePartition,
    r1: usize,
    r2: usize,
    point: &ParameterPoint,
) -> Result<ExactScalar> {
    check_rows(r1, r2)?;
    let (Some(a), Some(b)) = (shape.first.padded(r1), shape.second.padded(r2)) else {
        return Ok(ExactScalar::zero());
    };
    let q = point.q();
    let big_q = point.big_q();
    let one = ExactScalar::one();
    let unit = schur_principal(&crate::combinatorics::Partition::rectangle(1, 1), r1 + r2, q)?;
    let mut value = q.pow((r1 * shape.second.size()) as i64)
        * schur_principal(&shape.first, r1, q)?
        * schur_principal(&shape.second, r2, q)?
        / nonzero(unit.pow(shape.size() as i64), "s_[1] vanishes")?;
    for i in 1..=r1 {
        for j in 1..=r2 {
            let gap = j as i64 - i as i64;
            let num = &one + big_q * q.pow(a[i - 1] as i64 - b[j - 1] as i64 + gap);
            let den = &one + big_q * q.pow(gap);
            value = value * num / nonzero(den, "Q = -q^(i-j) in the cross product")?;
        }
    }
    Ok(value)
}

/// The Markov parameters `(g_factor, t_factor)`: `z = q^r (1 - q) / (1 - q^r)` and
/// `y = (Q q^r2 + 1)(1 - q^r1) / (1 - q^r) - 1`.
pub fn markov_params(r1: usize, r2: usize, point: &ParameterPoint) -> Result<(ExactScalar, ExactScalar)> {
    check_rows(r1, r2)?;
    let q = point.q();
    let one = ExactScalar::one();
    let r = (r1 + r2) as i64;
    let den = nonzero(&one - q.pow(r), "1 - q^r")?;
    let g_factor = q.pow(r) * (&one - q) / &den;
    let t_factor = (point.big_q() * q.pow(r2 as i64) + &one) * (&one - q.pow(r1 as i64)) / &den - &one;
    Ok((g_factor, t_factor))
}

/// Weights of every double partition of `n`, together with `z` and `y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightTable {
    pub n: usize,
    pub r1: usize,
    pub r2: usize,
    pub point: ParameterPoint,
    /// In the canonical order of [`double_partitions`].
    pub entries: Vec<(DoublePartition, ExactScalar)>,
    /// Factor picked up by appending `g_n`.
    pub g_factor: ExactScalar,
    /// Factor picked up by appending `t'_n`.
    pub t_factor: ExactScalar,
}

impl WeightTable {
    pub fn weight(&self, shape: &DoublePartition) -> Option<&ExactScalar> {
        self.entries.iter().find(|(s, _)| s == shape).map(|(_, w)| w)
    }

    /// `sum weight * dimension`, which is 1 for a normalised trace.
    pub fn normalization(&self) -> ExactScalar {
        self.entries
            .iter()
            .map(|(s, w)| w * ExactScalar::from_bigints(s.dimension().into(), 1.into()).expect("unit denominator"))
            .sum()
    }
}

pub fn weight_table(n: usize, r1: usize, r2: usize, point: &ParameterPoint) -> Result<WeightTable> {
    let (g_factor, t_factor) = markov_params(r1, r2, point)?;
    let entries = double_partitions(n)
        .into_iter()
        .map(|s| weight_b(&s, r1, r2, point).map(|w| (s, w)))
        .collect::<Result<Vec<_>>>()?;
    Ok(WeightTable {
        n,
        r1,
        r2,
        point: point.clone(),
        entries,
        g_factor,
        t_factor,
    })
}
