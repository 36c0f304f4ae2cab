//! Checks on the type-B Markov trace, the weights, and the type-A and type-D
//! traces.

use rand::Rng;

use crate::combinatorics::{double_partitions, embed_double, one_box_successors, partitions, Partition};
use crate::error::Result;
use crate::reps::{
    character, double_coset_representatives, random_word, type_b_rep, Alphabet, HeckeElement, HeckeWord, Letter,
};
use crate::report::Check;
use crate::scalars::{ExactScalar, ParameterPoint};
use crate::schur::{embedded_schur_factorized, rectangle_schur, schur_normalized};
use crate::traces::{
    markov_params, type_a_weights, type_d_weight_table, weight_b, weight_b_schur_form, weight_table,
    InclusionMatrix, MarkovTraceA, MarkovTraceB, MarkovTraceD,
};

use super::tag;

const MARKOV: &str = "Markov property tr(h g_n) = z tr(h)";
const TPRIME: &str = "tr(h t'_n) = y tr(h) and tr(t'_0 ... t'_(k-1)) = y^k";
const COSETS: &str = "trace of a product of double coset representatives is z^a y^b";
const CYCLIC: &str = "trace property tr(ab) = tr(ba)";
const CLOSED: &str = "tr(t) = (Q q^r2 + 1)(1 - q^r1)/(1 - q^r) - 1";
const BRANCHING: &str = "weight equals the sum of the weights one box larger";
const FORMS: &str = "product formula and Schur-function form of the weight agree";
const NORMALISED: &str = "weights times dimensions sum to 1";
const RECTANGLE: &str = "closed form of the rectangle Schur function";
const FACTOR: &str = "factorisation of the glued Schur function";
const PIERI: &str = "one-box Pieri rule for normalised Schur functions";
const TYPE_A: &str = "type-A weights are normalised Schur functions";
const TYPE_D_INCL: &str = "type-D weights are the inclusion matrix applied to type-B weights at Q = 1";
const TYPE_D_SYM: &str = "(alpha,beta) and (beta,alpha) restrict to the same type-D module";
const TYPE_D_REL: &str = "type-D defining relations hold inside the trace";

fn word_elem(letters: Vec<Letter>, n: usize) -> Result<HeckeElement> {
    Ok(HeckeElement::from_word(&HeckeWord::new(letters, n)?))
}

fn lifted_random<R: Rng>(rng: &mut R, inner: usize, outer: usize, alphabet: Alphabet) -> Result<HeckeWord> {
    let len = rng.gen_range(0..=2 * inner + 2);
    random_word(rng, inner, len, alphabet).lift(outer)
}

/// Markov and `t'` properties of the type-B trace at rank `n` on `words`
/// random words of rank `n - 1`.
pub fn markov_b<R: Rng>(
    n: usize,
    r1: usize,
    r2: usize,
    point: &ParameterPoint,
    words: usize,
    rng: &mut R,
) -> Result<Vec<Check>> {
    let tr = MarkovTraceB::new(n, r1, r2, point)?;
    let (g_factor, t_factor) = (tr.g_factor().clone(), tr.t_factor().clone());
    let mut markov_bad = Vec::new();
    let mut tprime_bad = Vec::new();
    let last = n - 1;
    // Both orientations of the conjugated t.
    let mut inverse_form: Vec<Letter> = (1..=last).rev().map(Letter::Ginv).collect();
    inverse_form.push(Letter::T);
    inverse_form.extend((1..=last).map(Letter::G));
    for _ in 0..words {
        let h = lifted_random(rng, last, n, Alphabet::TypeB)?;
        let base = tr.trace(&HeckeElement::from_word(&h))?;
        if n >= 2 {
            let hg = h.concat(&HeckeWord::new(vec![Letter::G(last)], n)?);
            if tr.trace(&HeckeElement::from_word(&hg))? != &g_factor * &base {
                markov_bad.push(h.to_string());
            }
        }
        for tail in [vec![Letter::Tprime(last)], inverse_form.clone()] {
            let ht = h.concat(&HeckeWord::new(tail, n)?);
            if tr.trace(&HeckeElement::from_word(&ht))? != &t_factor * &base {
                tprime_bad.push(h.to_string());
            }
        }
    }
    let mut out = Vec::new();
    if n >= 2 {
        out.push(Check::new(
            format!("Markov property, n = {n}, r1 = {r1}, r2 = {r2}{}", tag(point)),
            MARKOV,
            markov_bad.is_empty(),
            markov_bad.join("; "),
        ));
    }
    out.push(Check::new(
        format!("t' property, n = {n}, r1 = {r1}, r2 = {r2}{}", tag(point)),
        TPRIME,
        tprime_bad.is_empty(),
        tprime_bad.join("; "),
    ));
    let product: Vec<Letter> = (0..n).map(Letter::Tprime).collect();
    let value = tr.trace(&word_elem(product, n)?)?;
    out.push(Check::new(
        format!("tr(t'_0 ... t'_{}) = y^{n}{}", n - 1, tag(point)),
        TPRIME,
        value == t_factor.pow(n as i64),
        format!("{value} vs {}", t_factor.pow(n as i64)),
    ));
    Ok(out)
}

/// `tr(d_1 ... d_n) = z^a y^b` over every choice of double coset
/// representatives, with `a` the number of `g` factors and `b` the number of
/// `t`-type factors.
pub fn double_cosets(n: usize, r1: usize, r2: usize, point: &ParameterPoint) -> Result<Check> {
    let tr = MarkovTraceB::new(n, r1, r2, point)?;
    let mut products: Vec<(Vec<Letter>, i64, i64)> = vec![(Vec::new(), 0, 0)];
    for k in 1..=n {
        let reps = double_coset_representatives(k)?;
        products = products
            .into_iter()
            .flat_map(|(letters, a, b)| {
                reps.iter().map(move |d| {
                    let mut next = letters.clone();
                    next.extend_from_slice(d.letters());
                    match d.letters().first() {
                        Some(Letter::G(_)) => (next, a + 1, b),
                        Some(_) => (next, a, b + 1),
                        None => (next, a, b),
                    }
                })
            })
            .collect();
    }
    let mut bad = Vec::new();
    for (letters, a, b) in &products {
        let value = tr.trace(&word_elem(letters.clone(), n)?)?;
        if value != tr.g_factor().pow(*a) * tr.t_factor().pow(*b) {
            bad.push(HeckeWord::new(letters.clone(), n)?.to_string());
        }
    }
    Ok(Check::new(
        format!("double coset reduction, n = {n}{}", tag(point)),
        COSETS,
        bad.is_empty(),
        format!("{} products; failures: {}", products.len(), bad.join("; ")),
    ))
}

/// `tr(ab) = tr(ba)` on random pairs of rank-`n` words.
pub fn trace_property<R: Rng>(
    n: usize,
    r1: usize,
    r2: usize,
    point: &ParameterPoint,
    pairs: usize,
    rng: &mut R,
) -> Result<Check> {
    let tr = MarkovTraceB::new(n, r1, r2, point)?;
    let mut bad = Vec::new();
    for _ in 0..pairs {
        let a = lifted_random(rng, n, n, Alphabet::TypeB)?;
        let b = lifted_random(rng, n, n, Alphabet::TypeB)?;
        let ab = tr.trace(&HeckeElement::from_word(&a.concat(&b)))?;
        let ba = tr.trace(&HeckeElement::from_word(&b.concat(&a)))?;
        if ab != ba {
            bad.push(format!("{a} | {b}"));
        }
    }
    Ok(Check::new(
        format!("trace property, n = {n}{}", tag(point)),
        CYCLIC,
        bad.is_empty(),
        bad.join("; "),
    ))
}

/// `tr(t)` at rank 1 from the closed form and from the weighted character
/// sum, together with both one-box weights.
pub fn closed_forms(r1: usize, r2: usize, point: &ParameterPoint) -> Result<Check> {
    let one = ExactScalar::one();
    let q = point.q();
    let big_q = point.big_q();
    let r = (r1 + r2) as i64;
    let formula = (big_q * q.pow(r2 as i64) + &one) * (&one - q.pow(r1 as i64)) / (&one - q.pow(r)) - &one;
    let (_, t_factor) = markov_params(r1, r2, point)?;
    let tr = MarkovTraceB::new(1, r1, r2, point)?;
    let summed = tr.trace(&word_elem(vec![Letter::T], 1)?)?;
    Ok(Check::new(
        format!("tr(t), r1 = {r1}, r2 = {r2}{}", tag(point)),
        CLOSED,
        formula == t_factor && formula == summed,
        format!("formula {formula}, y {t_factor}, character sum {summed}"),
    ))
}

/// Branching of weights plus normalisation of every weight table up to rank
/// `max_n`.
pub fn branching(max_n: usize, r1: usize, r2: usize, point: &ParameterPoint) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for n in 0..=max_n {
        let mut bad = Vec::new();
        for shape in double_partitions(n) {
            let w = weight_b(&shape, r1, r2, point)?;
            let mut below = ExactScalar::zero();
            for s in one_box_successors(&shape) {
                below += weight_b(&s, r1, r2, point)?;
            }
            if w != below {
                bad.push(shape.to_string());
            }
        }
        out.push(Check::new(
            format!("branching, n = {n}, r1 = {r1}, r2 = {r2}{}", tag(point)),
            BRANCHING,
            bad.is_empty(),
            bad.join(" "),
        ));
        let total = weight_table(n, r1, r2, point)?.normalization();
        out.push(Check::new(
            format!("normalisation, n = {n}, r1 = {r1}, r2 = {r2}{}", tag(point)),
            NORMALISED,
            total.is_one(),
            format!("sum {total}"),
        ));
    }
    Ok(out)
}

/// Product formula against Schur form for every shape up to rank `max_n`.
pub fn weight_forms(max_n: usize, r1: usize, r2: usize, point: &ParameterPoint) -> Result<Check> {
    let mut bad = Vec::new();
    for n in 0..=max_n {
        for shape in double_partitions(n) {
            if weight_b(&shape, r1, r2, point)? != weight_b_schur_form(&shape, r1, r2, point)? {
                bad.push(shape.to_string());
            }
        }
    }
    Ok(Check::new(
        format!("weight forms agree, n <= {max_n}, r1 = {r1}, r2 = {r2}{}", tag(point)),
        FORMS,
        bad.is_empty(),
        bad.join(" "),
    ))
}

/// Rectangle closed form, glued factorisation, type-A normalisation and the
/// one-box Pieri rule at a single `q`.
pub fn schur_identities(max_n: usize, q: &ExactScalar) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    let mut bad = Vec::new();
    for m in 1..=4 {
        for r1 in 1..=4 {
            for r2 in 0..=4 {
                if rectangle_schur(m, r1, r2, q)? != schur_normalized(&Partition::rectangle(m, r1), r1 + r2, q)? {
                    bad.push(format!("m={m} r1={r1} r2={r2}"));
                }
            }
        }
    }
    out.push(Check::new(format!("rectangle Schur, q = {q}"), RECTANGLE, bad.is_empty(), bad.join(" ")));

    let mut bad = Vec::new();
    for n in 0..=max_n.min(3) {
        let (m, r1) = (n + 1, n + 1);
        for r2 in [n + 1, n + 2] {
            for shape in double_partitions(n) {
                let mu = embed_double(&shape, m, r1)?;
                if embedded_schur_factorized(&shape, m, r1, r2, q)? != schur_normalized(&mu, r1 + r2, q)? {
                    bad.push(format!("{shape} r2={r2}"));
                }
            }
        }
    }
    out.push(Check::new(format!("glued factorisation, q = {q}"), FACTOR, bad.is_empty(), bad.join(" ")));

    let mut bad = Vec::new();
    let mut pieri_bad = Vec::new();
    for n in 0..=max_n {
        for r in 2..=4 {
            let total: ExactScalar = type_a_weights(n, r, q)?
                .iter()
                .map(|(mu, w)| w * ExactScalar::from(mu.standard_count() as i64))
                .sum();
            if !total.is_one() {
                bad.push(format!("n={n} r={r}"));
            }
            for mu in partitions(n) {
                let lhs = schur_normalized(&mu, r, q)?;
                let mut rhs = ExactScalar::zero();
                for row in mu.addable_rows() {
                    if let Some(nu) = mu.with_box_added(row) {
                        rhs += schur_normalized(&nu, r, q)?;
                    }
                }
                if lhs != rhs {
                    pieri_bad.push(format!("{mu} r={r}"));
                }
            }
        }
    }
    out.push(Check::new(format!("type A normalisation, q = {q}"), NORMALISED, bad.is_empty(), bad.join(" ")));
    out.push(Check::new(format!("Pieri rule, q = {q}"), PIERI, pieri_bad.is_empty(), pieri_bad.join(" ")));
    Ok(out)
}

/// Type-A Markov property with `z = q^r (1 - q)/(1 - q^r)`.
pub fn markov_a<R: Rng>(n: usize, r: usize, q: &ExactScalar, words: usize, rng: &mut R) -> Result<Check> {
    let tr = MarkovTraceA::new(n, r, q)?;
    let one = ExactScalar::one();
    let g_factor = q.pow(r as i64) * (&one - q) / (&one - q.pow(r as i64));
    let mut bad = Vec::new();
    let identity = tr.trace(&HeckeElement::one(n))?;
    if !identity.is_one() {
        bad.push(format!("tr(1) = {identity}"));
    }
    if n >= 2 {
        for _ in 0..words {
            let h = lifted_random(rng, n - 1, n, Alphabet::TypeA)?;
            let hg = h.concat(&HeckeWord::new(vec![Letter::G(n - 1)], n)?);
            let base = tr.trace(&HeckeElement::from_word(&h))?;
            if tr.trace(&HeckeElement::from_word(&hg))? != &g_factor * base {
                bad.push(h.to_string());
            }
        }
    }
    Ok(Check::new(
        format!("type A Markov property, n = {n}, r = {r}, q = {q}"),
        TYPE_A,
        bad.is_empty(),
        bad.join("; "),
    ))
}

/// Type-D weights through the inclusion matrix, their normalisation, the
/// symmetry of restricted characters, the Markov property and the type-D
/// relations inside the trace.
pub fn type_d<R: Rng>(n: usize, r1: usize, r2: usize, q: &ExactScalar, words: usize, rng: &mut R) -> Result<Vec<Check>> {
    let point = ParameterPoint::with_unit_big_q(q.clone())?;
    let mut out = Vec::new();
    let label = format!("n = {n}, r1 = {r1}, r2 = {r2}, q = {q}");

    let incl = InclusionMatrix::new(n);
    let b: Vec<ExactScalar> = incl
        .b_shapes
        .iter()
        .map(|s| weight_b(s, r1, r2, &point))
        .collect::<Result<_>>()?;
    let from_b = incl.apply(&b)?;
    let table = type_d_weight_table(n, r1, r2, q)?;
    let matches = table.len() == from_b.len() && table.iter().zip(&from_b).all(|(row, v)| &row.weight == v);
    out.push(Check::new(format!("type D inclusion, {label}"), TYPE_D_INCL, matches, ""));
    let total: ExactScalar = table
        .iter()
        .map(|row| &row.weight * ExactScalar::from(row.dimension as i64))
        .sum();
    out.push(Check::new(format!("type D normalisation, {label}"), NORMALISED, total.is_one(), format!("sum {total}")));

    if n < 2 {
        return Ok(out);
    }
    let sample: Vec<HeckeElement> = (0..words)
        .map(|_| lifted_random(rng, n, n, Alphabet::TypeD).map(|w| HeckeElement::from_word(&w)))
        .collect::<Result<_>>()?;
    let mut bad = Vec::new();
    for shape in double_partitions(n) {
        let swapped = shape.swapped();
        if swapped <= shape {
            continue;
        }
        let (a, b) = (type_b_rep(&shape, &point)?, type_b_rep(&swapped, &point)?);
        for w in &sample {
            if character(&a, w)? != character(&b, w)? {
                bad.push(format!("{shape} on {w}"));
                break;
            }
        }
    }
    out.push(Check::new(format!("type D restricted characters, {label}"), TYPE_D_SYM, bad.is_empty(), bad.join("; ")));

    let tr = MarkovTraceD::new(n, r1, r2, q)?;
    let mut bad = Vec::new();
    for _ in 0..words {
        let h = lifted_random(rng, n - 1, n, Alphabet::TypeD)?;
        let hg = h.concat(&HeckeWord::new(vec![Letter::G(n - 1)], n)?);
        if tr.trace(&HeckeElement::from_word(&hg))? != tr.g_factor() * tr.trace(&HeckeElement::from_word(&h))? {
            bad.push(h.to_string());
        }
    }
    out.push(Check::new(format!("type D Markov property, {label}"), MARKOV, bad.is_empty(), bad.join("; ")));

    let relations = type_d_relations(n, q)?;
    let mut bad = Vec::new();
    for (name, rel) in &relations {
        for _ in 0..words.max(1) {
            let a = HeckeElement::from_word(&lifted_random(rng, n, n, Alphabet::TypeD)?);
            let b = HeckeElement::from_word(&lifted_random(rng, n, n, Alphabet::TypeD)?);
            if !tr.trace(&a.mul(rel).mul(&b))?.is_zero() {
                bad.push(name.clone());
                break;
            }
        }
    }
    out.push(Check::new(
        format!("type D relations in the trace, {label}"),
        TYPE_D_REL,
        bad.is_empty(),
        format!("{} relations; failures: {}", relations.len(), bad.join(", ")),
    ));
    Ok(out)
}

/// `lhs - rhs` for each type-D defining relation at rank `n`. `u` commutes
/// with `g_i` for `i != 2` and satisfies the braid relation with `g_2`.
pub fn type_d_relations(n: usize, q: &ExactScalar) -> Result<Vec<(String, HeckeElement)>> {
    let e = |letters: Vec<Letter>| word_elem(letters, n);
    let quadratic = |x: Letter| -> Result<HeckeElement> {
        let sq = e(vec![x, x])?;
        let rhs = e(vec![x])?
            .scale(&(q - ExactScalar::one()))
            .add(&HeckeElement::one(n).scale(q));
        Ok(sq.sub(&rhs))
    };
    let mut out = Vec::new();
    for i in 1..n {
        out.push((format!("g{i} quadratic"), quadratic(Letter::G(i))?));
        if i + 1 < n {
            let (a, b) = (Letter::G(i), Letter::G(i + 1));
            out.push((format!("braid g{i} g{}", i + 1), e(vec![a, b, a])?.sub(&e(vec![b, a, b])?)));
        }
        for j in i + 2..n {
            let (a, b) = (Letter::G(i), Letter::G(j));
            out.push((format!("far commutation g{i} g{j}"), e(vec![a, b])?.sub(&e(vec![b, a])?)));
        }
        let (u, g) = (Letter::U, Letter::G(i));
        if i == 2 {
            out.push(("braid u g2".into(), e(vec![u, g, u])?.sub(&e(vec![g, u, g])?)));
        } else {
            out.push((format!("u commutes with g{i}"), e(vec![u, g])?.sub(&e(vec![g, u])?)));
        }
    }
    out.push(("u quadratic".into(), quadratic(Letter::U)?));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reps::evaluate;
    use crate::scalars::admissible_point;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn all_pass(checks: &[Check]) -> bool {
        checks.iter().all(|c| c.pass)
    }

    #[test]
    fn small_trace_suites_pass() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let point = admissible_point(3, 3, 3, 1).unwrap();
        assert!(all_pass(&markov_b(3, 3, 3, &point, 4, &mut rng).unwrap()));
        assert!(double_cosets(3, 3, 3, &point).unwrap().pass);
        assert!(trace_property(3, 3, 3, &point, 4, &mut rng).unwrap().pass);
        assert!(closed_forms(2, 3, &point).unwrap().pass);
        assert!(all_pass(&branching(3, 4, 4, &point).unwrap()));
        assert!(weight_forms(3, 2, 2, &point).unwrap().pass);
        assert!(all_pass(&schur_identities(3, point.q()).unwrap()));
        assert!(markov_a(3, 3, point.q(), 4, &mut rng).unwrap().pass);
        assert!(all_pass(&type_d(3, 3, 3, point.q(), 4, &mut rng).unwrap()));
    }

    /// The type-D relations hold as matrix identities, while `u` and `g_2` do
    /// not commute.
    #[test]
    fn type_d_relations_hold_on_matrices() {
        let q = ExactScalar::new(5, 3).unwrap();
        let point = ParameterPoint::with_unit_big_q(q.clone()).unwrap();
        for shape in double_partitions(3) {
            let rep = type_b_rep(&shape, &point).unwrap();
            for (name, rel) in type_d_relations(3, &q).unwrap() {
                assert!(evaluate(&rep, &rel).unwrap().is_zero(), "{shape}: {name}");
            }
        }
        let rep = type_b_rep(&double_partitions(3)[3], &point).unwrap();
        let ug = word_elem(vec![Letter::U, Letter::G(2)], 3).unwrap();
        let gu = word_elem(vec![Letter::G(2), Letter::U], 3).unwrap();
        let commutator = evaluate(&rep, &ug.sub(&gu)).unwrap();
        assert!(!commutator.is_zero());
    }
}
