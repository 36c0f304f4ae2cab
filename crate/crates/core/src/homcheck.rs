//! Exact checks that the skew modules glued onto a rectangle carry the
//! type-B action at `Q = -q^(r1+m)`, and that the weights are ratios of
//! Schur functions there.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::combinatorics::{double_partitions, embed_double, DoublePartition, Partition};
use crate::error::{Error, Result};
use crate::reps::{
    character, full_twist_scalar, random_word, skew_rep, type_b_rep, Alphabet, HeckeElement, HeckeWord, Letter, Representation,
};
use crate::report::{Check, Report};
use crate::scalars::{specialized_point, ExactScalar};
use crate::schur::{rectangle_schur, schur_normalized};
use crate::traces::weight_b;

const RHO_T: &str = "t acts on skew modules by minus a ratio of full-twist scalars";
const ONTO: &str = "skew modules realise the type-B irreducibles at Q = -q^(r1+m)";
const RATIO: &str = "Schur ratio over the rectangle equals the weight at Q = -q^(r1+m)";

fn check_hypothesis(n: usize, m: usize, r1: usize) -> Result<()> {
    if m <= n || r1 <= n {
        return Err(Error::pre(format!("need m > n and r1 > n (n = {n}, m = {m}, r1 = {r1})")));
    }
    Ok(())
}

/// Eigenvalues of `t` on the two rank-1 skew modules, compared with
/// `-q^(r1+m)`, `-1` and with the full-twist ratio for
/// `beta = [m+1, m^(r1-1)]` over `gamma = [m^r1, 1]`.
pub fn rho_eigenvalue_report(m: usize, r1: usize, q: &ExactScalar) -> Result<Report> {
    let gamma = Partition::rectangle(m, r1)
        .with_box_added(r1)
        .expect("a new row is always addable");
    rho_eigenvalue_report_with_gamma(m, r1, q, &gamma)
}

/// As [`rho_eigenvalue_report`] with an explicit denominator shape, so that
/// a wrong `gamma` can be shown to be caught.
pub fn rho_eigenvalue_report_with_gamma(m: usize, r1: usize, q: &ExactScalar, gamma: &Partition) -> Result<Report> {
    if m < 2 || r1 < 2 {
        return Err(Error::pre("rho eigenvalue report needs m, r1 >= 2"));
    }
    let mut report = Report::new(format!("t eigenvalues, m = {m}, r1 = {r1}, q = {q}"));
    let expected_first = -q.pow((r1 + m) as i64);
    let expected_second = -ExactScalar::one();
    let beside = Partition::rectangle(m, r1)
        .with_box_added(0)
        .expect("the first row is always addable");
    let twist_gamma = full_twist_scalar(gamma, q);
    let from_twist_first = -(full_twist_scalar(&beside, q) / &twist_gamma);
    let from_twist_second = -(full_twist_scalar(&Partition::rectangle(m, r1).with_box_added(r1).expect("addable"), q) / &twist_gamma);

    let cases = [
        (DoublePartition::new(Partition::rectangle(1, 1), Partition::empty()), expected_first, from_twist_first),
        (DoublePartition::new(Partition::empty(), Partition::rectangle(1, 1)), expected_second, from_twist_second),
    ];
    for (shape, expected, from_twist) in cases {
        let rep = skew_rep(&shape, m, r1, q)?;
        let t_mat = rep.t_matrix().expect("rank-1 module has t");
        let spectrum = t_mat.diagonal_entries();
        let scalar = t_mat.is_diagonal() && spectrum.iter().all(|v| *v == expected);
        report.push(Check::new(
            format!("spectrum of t on {shape}"),
            RHO_T,
            scalar,
            format!("expected {expected}, got {spectrum:?}"),
        ));
        report.push(Check::new(
            format!("full-twist ratio on {shape}"),
            RHO_T,
            from_twist == expected,
            format!("ratio {from_twist}, expected {expected}"),
        ));
    }
    Ok(report)
}

fn sample_words(n: usize, samples: usize, rng: &mut ChaCha8Rng) -> Vec<HeckeWord> {
    let mut letters = Vec::new();
    if n >= 1 {
        letters.push(Letter::T);
    }
    letters.extend((1..n).map(Letter::G));
    let mut words = vec![HeckeWord::identity(n)];
    words.extend(
        letters
            .into_iter()
            .map(|l| HeckeWord::new(vec![l], n).expect("letter fits the rank")),
    );
    for _ in 0..samples {
        let len = rng.gen_range(1..=3 * n + 2);
        words.push(random_word(rng, n, len, Alphabet::TypeB));
    }
    words
}

/// Characters of every skew module of rank `n` against the type-B module of
/// the same shape at the specialised point, on every single-letter word plus
/// `samples` random words, together with pairwise separation of distinct
/// shapes.
pub fn character_match_report(
    n: usize,
    m: usize,
    r1: usize,
    q: &ExactScalar,
    samples: usize,
    seed: u64,
) -> Result<Report> {
    check_hypothesis(n, m, r1)?;
    let point = specialized_point(q, m, r1)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let words = sample_words(n, samples, &mut rng);
    let mut report = Report::new(format!("character match, n = {n}, m = {m}, r1 = {r1}, q = {q}"));
    let shapes = double_partitions(n);
    let mut tables: Vec<Vec<ExactScalar>> = Vec::new();
    for shape in &shapes {
        let skew = skew_rep(shape, m, r1, q)?;
        let b = type_b_rep(shape, &point)?;
        let chars = |rep: &Representation| -> Result<Vec<ExactScalar>> {
            words
                .iter()
                .map(|w| character(rep, &HeckeElement::from_word(w)))
                .collect()
        };
        let (cs, cb) = (chars(&skew)?, chars(&b)?);
        let mismatch = cs.iter().zip(&cb).position(|(a, b)| a != b);
        report.push(Check::new(
            format!("characters of {shape}"),
            ONTO,
            mismatch.is_none(),
            mismatch.map_or(String::new(), |k| format!("differ on word `{}`", words[k])),
        ));
        tables.push(cs);
    }
    for i in 0..shapes.len() {
        for j in i + 1..shapes.len() {
            let separated = tables[i] != tables[j];
            report.push(Check::new(
                format!("{} and {} are separated", shapes[i], shapes[j]),
                ONTO,
                separated,
                if separated { "" } else { "no sampled word separates them" },
            ));
        }
    }
    Ok(report)
}

/// For every double partition of `n`, the normalised Schur function of the
/// glued shape divided by that of the rectangle, against the type-B weight at
/// `Q = -q^(r1+m)`.
pub fn weight_ratio_report(n: usize, m: usize, r1: usize, r2: usize, q: &ExactScalar) -> Result<Report> {
    check_hypothesis(n, m, r1)?;
    if r2 == 0 {
        return Err(Error::pre("weight ratio needs r2 >= 1"));
    }
    let point = specialized_point(q, m, r1)?;
    let r = r1 + r2;
    let rect = rectangle_schur(m, r1, r2, q)?;
    let mut report = Report::new(format!("weight ratio, n = {n}, m = {m}, r1 = {r1}, r2 = {r2}, q = {q}"));
    for shape in double_partitions(n) {
        let mu = embed_double(&shape, m, r1)?;
        let lhs = schur_normalized(&mu, r, q)?.checked_div(&rect)?;
        let rhs = weight_b(&shape, r1, r2, &point)?;
        report.push(Check::new(
            format!("ratio for {shape}"),
            RATIO,
            lhs == rhs,
            if lhs == rhs { String::new() } else { format!("{lhs} != {rhs}") },
        ));
    }
    Ok(report)
}
