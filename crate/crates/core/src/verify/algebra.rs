//! Checks on the representations themselves.

use rand::Rng;

use crate::combinatorics::{double_partitions, partitions, standard_tableaux, Component};
use crate::error::Result;
use crate::reps::{
    character, coset_representatives, evaluate_word, full_twist_scalar, random_word, relation_residuals,
    skew_rep, type_a_rep, type_b_rep, Alphabet, HeckeElement, HeckeWord, Letter, Representation,
};
use crate::report::Check;
use crate::scalars::{specialized_point, ExactScalar, ParameterPoint, ScalarMatrix};

use super::tag;

const RELATIONS: &str = "defining relations of the type-A and type-B Hecke algebras";
const JM: &str = "Jucys-Murphy elements act diagonally by contents";
const RESTRICTION: &str = "restriction to rank n-1 removes the box holding n";
const TWIST: &str = "full twist acts on a type-A irreducible by a scalar";
const BASIS: &str = "products of right coset representatives form a basis of dimension 2^n n!";
const DIMENSIONS: &str = "sum of squared dimensions is 2^n n!";
const SKEW_EQ: &str = "skew modules match type B at Q = -q^(r1+m)";

fn relation_check(rep: &Representation, name: String) -> Result<Check> {
    let failed: Vec<String> = relation_residuals(rep)?
        .into_iter()
        .filter(|r| !r.holds())
        .map(|r| r.relation)
        .collect();
    Ok(Check::new(name, RELATIONS, failed.is_empty(), failed.join(", ")))
}

/// Every defining relation on every type-A irreducible of rank `1..=max_n`.
pub fn relations_type_a(max_n: usize, point: &ParameterPoint) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        let mut failed = Vec::new();
        for mu in partitions(n) {
            if !relation_check(&type_a_rep(&mu, point)?, String::new())?.pass {
                failed.push(mu.to_string());
            }
        }
        out.push(Check::new(
            format!("type A relations, n = {n}{}", tag(point)),
            RELATIONS,
            failed.is_empty(),
            failed.join(" "),
        ));
    }
    Ok(out)
}

/// Every defining relation on every type-B irreducible of rank `1..=max_n`.
pub fn relations_type_b(max_n: usize, point: &ParameterPoint) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        let mut failed = Vec::new();
        for shape in double_partitions(n) {
            let check = relation_check(&type_b_rep(&shape, point)?, String::new())?;
            if !check.pass {
                failed.push(format!("{shape}: {}", check.detail));
            }
        }
        out.push(Check::new(
            format!("type B relations, n = {n}{}", tag(point)),
            RELATIONS,
            failed.is_empty(),
            failed.join("; "),
        ));
    }
    Ok(out)
}

/// Relations on the skew modules for rank `1..=max_n` with `m = r1 = n + 1`,
/// plus equality of their matrices with the type-B ones at the specialised
/// point.
pub fn relations_skew(max_n: usize, q: &ExactScalar) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        let (m, r1) = (n + 1, n + 1);
        let point = specialized_point(q, m, r1)?;
        let mut failed = Vec::new();
        let mut unequal = Vec::new();
        for shape in double_partitions(n) {
            let skew = skew_rep(&shape, m, r1, q)?;
            if !relation_check(&skew, String::new())?.pass {
                failed.push(shape.to_string());
            }
            let b = type_b_rep(&shape, &point)?;
            if skew.g_matrices() != b.g_matrices() || skew.t_matrix() != b.t_matrix() {
                unequal.push(shape.to_string());
            }
            if skew.dimension() as u128 != shape.dimension() {
                unequal.push(format!("{shape} (dimension)"));
            }
        }
        out.push(Check::new(
            format!("skew relations, n = {n}, m = r1 = {m}, q = {q}"),
            RELATIONS,
            failed.is_empty(),
            failed.join(" "),
        ));
        out.push(Check::new(
            format!("skew matrices equal type B, n = {n}, q = {q}"),
            SKEW_EQ,
            unequal.is_empty(),
            unequal.join(" "),
        ));
    }
    Ok(out)
}

/// `L_{i+1} = q^{-i} g_i ... g_1 t g_1 ... g_i` is diagonal with entry
/// `Q q^c` or `-q^c` on a tableau whose entry `i+1` has content `c` in the
/// first or second component. Also checks that each `t'_i` satisfies the
/// quadratic relation of `t`.
pub fn jucys_murphy(max_n: usize, point: &ParameterPoint) -> Result<Vec<Check>> {
    let q = point.q();
    let big_q = point.big_q();
    let mut out = Vec::new();
    for n in 1..=max_n {
        let mut bad = Vec::new();
        for shape in double_partitions(n) {
            let rep = type_b_rep(&shape, point)?;
            let t_mat = rep.t_matrix().expect("rank >= 1");
            let mut murphy = t_mat.clone();
            for i in 0..n {
                if i > 0 {
                    let g = rep.g(i).expect("index in range");
                    murphy = g.checked_mul(&murphy)?.checked_mul(g)?;
                }
                let scaled = murphy.scale(&q.pow(-(i as i64)));
                let expected: Vec<ExactScalar> = rep
                    .basis()
                    .iter()
                    .map(|tab| {
                        let cell = tab.cells()[i];
                        let qc = q.pow(cell.content());
                        match cell.component {
                            Component::First => big_q * qc,
                            Component::Second => -qc,
                        }
                    })
                    .collect();
                if scaled != ScalarMatrix::diagonal(expected) {
                    bad.push(format!("{shape} L{}", i + 1));
                }
                let tp = rep.tprime(i)?;
                let quad = tp.checked_mul(tp)?;
                let rhs = tp.scale(&(big_q - ExactScalar::one())).add_scalar(big_q);
                if quad != rhs {
                    bad.push(format!("{shape} t'{i} quadratic"));
                }
            }
        }
        out.push(Check::new(
            format!("Jucys-Murphy diagonality, n = {n}{}", tag(point)),
            JM,
            bad.is_empty(),
            bad.join(", "),
        ));
    }
    Ok(out)
}

/// Characters of each shape of rank `n` on words from rank `n - 1` equal the
/// sum over one-box-smaller shapes.
pub fn restriction_rule<R: Rng>(max_n: usize, point: &ParameterPoint, words: usize, rng: &mut R) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for n in 2..=max_n {
        let sample: Vec<HeckeElement> = (0..words)
            .map(|_| {
                let len = rng.gen_range(0..=2 * n);
                HeckeElement::from_word(&random_word(rng, n - 1, len, Alphabet::TypeB))
            })
            .collect();
        let mut bad = Vec::new();
        for shape in double_partitions(n) {
            let rep = type_b_rep(&shape, point)?;
            let smaller: Vec<Representation> = shape
                .one_box_predecessors()
                .iter()
                .map(|s| type_b_rep(s, point))
                .collect::<Result<_>>()?;
            for w in &sample {
                let whole = character(&rep, w)?;
                let parts: ExactScalar = smaller
                    .iter()
                    .map(|r| character(r, w))
                    .collect::<Result<Vec<_>>>()?
                    .into_iter()
                    .sum();
                if whole != parts {
                    bad.push(format!("{shape} on {w}"));
                    break;
                }
            }
        }
        out.push(Check::new(
            format!("restriction rule, n = {n}{}", tag(point)),
            RESTRICTION,
            bad.is_empty(),
            bad.join(", "),
        ));
    }
    Ok(out)
}

/// `(g_{f-1} ... g_1)^f` on the type-A module of `nu` against
/// `full_twist_scalar(nu)` times the identity.
pub fn full_twist(max_f: usize, point: &ParameterPoint) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for f in 1..=max_f {
        let half: Vec<Letter> = (1..f).rev().map(Letter::G).collect();
        let letters: Vec<Letter> = std::iter::repeat_n(half, f).flatten().collect();
        let word = HeckeWord::new(letters, f)?;
        let mut bad = Vec::new();
        for nu in partitions(f) {
            let rep = type_a_rep(&nu, point)?;
            let image = evaluate_word(&rep, &word)?;
            if image != ScalarMatrix::scalar(rep.dimension(), full_twist_scalar(&nu, point.q())) {
                bad.push(nu.to_string());
            }
        }
        out.push(Check::new(
            format!("full twist, f = {f}{}", tag(point)),
            TWIST,
            bad.is_empty(),
            bad.join(" "),
        ));
    }
    Ok(out)
}

/// All `2^n n!` products `r_1 ... r_n` of coset representatives, evaluated
/// in the sum of all irreducibles, are linearly independent.
pub fn coset_basis(n: usize, point: &ParameterPoint) -> Result<Check> {
    let reps: Vec<Representation> = double_partitions(n)
        .iter()
        .map(|s| type_b_rep(s, point))
        .collect::<Result<_>>()?;
    let mut words = vec![HeckeWord::identity(n)];
    for k in 1..=n {
        let reps_k = coset_representatives(k)?;
        words = words
            .iter()
            .flat_map(|w| reps_k.iter().map(move |r| w.concat(r)))
            .collect();
    }
    let mut rows = Vec::with_capacity(words.len());
    for w in &words {
        let mut row = Vec::new();
        for rep in &reps {
            row.extend_from_slice(evaluate_word(rep, &w.lift(n)?)?.entries());
        }
        rows.push(row);
    }
    let expected = (1..=n).map(|k| 2 * k).product::<usize>();
    let rank = ScalarMatrix::from_rows(rows)?.rank();
    Ok(Check::new(
        format!("coset basis, n = {n}{}", tag(point)),
        BASIS,
        rank == expected && words.len() == expected,
        format!("{} words, rank {rank}, expected {expected}", words.len()),
    ))
}

/// Sum of squared tableau counts against `2^n n!`.
pub fn dimensions(max_n: usize) -> Vec<Check> {
    (0..=max_n)
        .map(|n| {
            let total: u128 = double_partitions(n)
                .iter()
                .map(|s| {
                    let d = standard_tableaux(s).len() as u128;
                    d * d
                })
                .sum();
            let expected: u128 = (1..=n as u128).map(|k| 2 * k).product();
            Check::new(
                format!("sum of squared dimensions, n = {n}"),
                DIMENSIONS,
                total == expected,
                format!("{total} vs {expected}"),
            )
        })
        .collect()
}
