//! Principal specialisations `s_alpha(1, q, ..., q^(r-1))` of Schur
//! polynomials and their normalised forms, which are the Markov-trace weights
//! in type A.

use crate::combinatorics::{DoublePartition, Partition};
use crate::error::{Error, Result};
use crate::scalars::ExactScalar;

fn one_minus_qpow(q: &ExactScalar, k: i64) -> ExactScalar {
    ExactScalar::one() - q.pow(k)
}

fn nonzero(x: ExactScalar, what: &str) -> Result<ExactScalar> {
    if x.is_zero() {
        Err(Error::DivisionByZero(what.to_string()))
    } else {
        Ok(x)
    }
}

/// `s_alpha(1, q, ..., q^(r-1))` by the product formula
/// `q^n(alpha) prod_{i<j} (1 - q^(alpha_i - alpha_j + j - i)) / (1 - q^(j-i))`.
///
/// Zero when `alpha` has more than `r` rows.
pub fn schur_principal(alpha: &Partition, r: usize, q: &ExactScalar) -> Result<ExactScalar> {
    let Some(a) = alpha.padded(r) else {
        return Ok(ExactScalar::zero());
    };
    let mut value = q.pow(alpha.n_stat() as i64);
    for i in 0..r {
        for j in i + 1..r {
            let gap = (j - i) as i64;
            let num = one_minus_qpow(q, a[i] as i64 - a[j] as i64 + gap);
            let den = nonzero(one_minus_qpow(q, gap), "1 - q^k in a Schur product")?;
            value = value * num / den;
        }
    }
    Ok(value)
}

/// `s_{alpha,r}(q) = s_alpha(1..q^(r-1)) / s_[1](1..q^(r-1))^|alpha|`.
pub fn schur_normalized(alpha: &Partition, r: usize, q: &ExactScalar) -> Result<ExactScalar> {
    if r == 0 {
        return Err(Error::pre("normalised Schur function needs r >= 1"));
    }
    let num = schur_principal(alpha, r, q)?;
    if num.is_zero() {
        return Ok(num);
    }
    let unit = schur_principal(&Partition::rectangle(1, 1), r, q)?;
    let den = nonzero(unit.pow(alpha.size() as i64), "s_[1] vanishes")?;
    Ok(num / den)
}

/// Normalised Schur function of the rectangle `[m^r1]` in `r1 + r2` variables,
/// from its closed form.
pub fn rectangle_schur(m: usize, r1: usize, r2: usize, q: &ExactScalar) -> Result<ExactScalar> {
    let r = r1 + r2;
    if r == 0 {
        return Err(Error::pre("rectangle Schur function needs r1 + r2 >= 1"));
    }
    let mut value = q.pow((m * r1 * r1.saturating_sub(1) / 2) as i64);
    for i in 1..=r1 as i64 {
        for j in 1..=r2 as i64 {
            let num = one_minus_qpow(q, m as i64 + r1 as i64 + j - i);
            let den = nonzero(one_minus_qpow(q, r1 as i64 + j - i), "rectangle denominator")?;
            value = value * num / den;
        }
    }
    let unit = schur_principal(&Partition::rectangle(1, 1), r, q)?;
    let den = nonzero(unit.pow((m * r1) as i64), "s_[1] vanishes")?;
    Ok(value / den)
}

/// `s_{mu,r}(q)` for `mu = [m + alpha_1, ..., m + alpha_r1, beta_1, ..., beta_r2]`,
/// evaluated through its factorisation into the principal specialisations of
/// `alpha` (in `r1` variables) and `beta` (in `r2` variables).
pub fn embedded_schur_factorized(
    shape: &DoublePartition,
    m: usize,
    r1: usize,
    r2: usize,
    q: &ExactScalar,
) -> Result<ExactScalar> {
    let (Some(a), Some(b)) = (shape.first.padded(r1), shape.second.padded(r2)) else {
        return Ok(ExactScalar::zero());
    };
    let r = (r1 + r2) as i64;
    let mu_size = (m * r1 + shape.size()) as i64;
    let exponent = (m * r1 * r1.saturating_sub(1) / 2 + r1 * shape.second.size()) as i64;
    let ratio = nonzero(one_minus_qpow(q, 1), "1 - q")?
        .checked_div(&nonzero(one_minus_qpow(q, r), "1 - q^r")?)?;
    let mut value = q.pow(exponent)
        * ratio.pow(mu_size)
        * schur_principal(&shape.first, r1, q)?
        * schur_principal(&shape.second, r2, q)?;
    for i in 1..=r1 {
        for j in 1..=r2 {
            let e = (m + r1 + a[i - 1]) as i64 - b[j - 1] as i64 + j as i64 - i as i64;
            let num = one_minus_qpow(q, e);
            let den = nonzero(
                one_minus_qpow(q, r1 as i64 + j as i64 - i as i64),
                "factorised denominator",
            )?;
            value = value * num / den;
        }
    }
    Ok(value)
}
