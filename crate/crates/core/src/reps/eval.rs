use super::seminormal::Representation;
use super::word::{HeckeElement, HeckeWord, Letter};
use crate::error::{Error, Result};
use crate::scalars::{ExactScalar, ScalarMatrix};

fn letter_matrix<'a>(rep: &'a Representation, letter: Letter) -> Result<std::borrow::Cow<'a, ScalarMatrix>> {
    use std::borrow::Cow;
    let missing = || Error::Dimension(format!("letter {letter} does not act on {}", rep.label()));
    Ok(match letter {
        Letter::G(i) => Cow::Borrowed(rep.g(i).ok_or_else(missing)?),
        Letter::Ginv(i) => Cow::Borrowed(rep.g_inverse(i).ok_or_else(missing)?),
        Letter::T => Cow::Borrowed(rep.t_matrix().ok_or_else(missing)?),
        Letter::Tprime(i) => Cow::Borrowed(rep.tprime(i).map_err(|_| missing())?),
        Letter::U => {
            let t_mat = rep.t_matrix().ok_or_else(missing)?;
            let g1 = rep.g(1).ok_or_else(missing)?;
            Cow::Owned(t_mat.checked_mul(g1)?.checked_mul(t_mat)?)
        }
    })
}

fn check_rank(rep: &Representation, ambient_n: usize) -> Result<()> {
    if ambient_n > rep.rank() {
        return Err(Error::Dimension(format!(
            "element of the rank-{ambient_n} algebra cannot act on {} (rank {})",
            rep.label(),
            rep.rank()
        )));
    }
    Ok(())
}

/// Image of a single word.
pub fn evaluate_word(rep: &Representation, word: &HeckeWord) -> Result<ScalarMatrix> {
    check_rank(rep, word.ambient_n())?;
    let mut acc = ScalarMatrix::identity(rep.dimension());
    // Multiply from the right end so the sparse generator is always the left
    // factor.
    for &letter in word.letters().iter().rev() {
        acc = letter_matrix(rep, letter)?.checked_mul(&acc)?;
    }
    Ok(acc)
}

/// Image `sum c_w pi(w)` of a linear combination of words.
pub fn evaluate(rep: &Representation, element: &HeckeElement) -> Result<ScalarMatrix> {
    check_rank(rep, element.ambient_n())?;
    let d = rep.dimension();
    let mut total = ScalarMatrix::zeros(d, d);
    for (word, c) in element.terms() {
        total = total.checked_add(&evaluate_word(rep, &word)?.scale(c))?;
    }
    Ok(total)
}

/// The character value, i.e. the trace of [`evaluate`].
pub fn character(rep: &Representation, element: &HeckeElement) -> Result<ExactScalar> {
    let mut total = ExactScalar::zero();
    for (word, c) in element.terms() {
        total += evaluate_word(rep, &word)?.trace() * c;
    }
    Ok(total)
}

/// One defining relation checked on a representation: `residual` is the
/// difference of the two sides and vanishes exactly when the relation holds.
#[derive(Clone, Debug)]
pub struct Residual {
    pub relation: String,
    pub residual: ScalarMatrix,
}

impl Residual {
    pub fn holds(&self) -> bool {
        self.residual.is_zero()
    }
}

fn product(factors: &[&ScalarMatrix]) -> Result<ScalarMatrix> {
    let (first, rest) = factors.split_first().expect("nonempty product");
    rest.iter().try_fold((*first).clone(), |acc, m| acc.checked_mul(m))
}

/// Residuals of every defining relation that applies to the representation:
/// braid and far commutation among the `g_i`, both quadratic relations, the
/// four-term relation between `t` and `g_1`, and commutation of `t` with
/// `g_i` for `i >= 2`.
pub fn relation_residuals(rep: &Representation) -> Result<Vec<Residual>> {
    let q = rep.point().q();
    let big_q = rep.point().big_q();
    let one = ExactScalar::one();
    let gs = rep.g_matrices();
    let mut out = Vec::new();
    let mut push = |relation: String, lhs: ScalarMatrix, rhs: ScalarMatrix| -> Result<()> {
        out.push(Residual {
            relation,
            residual: lhs.checked_sub(&rhs)?,
        });
        Ok(())
    };
    let quadratic = |m: &ScalarMatrix, c: &ExactScalar| m.scale(&(c - &one)).add_scalar(c);
    for (k, g) in gs.iter().enumerate() {
        let i = k + 1;
        push(format!("g{i} quadratic"), g.checked_mul(g)?, quadratic(g, q))?;
        if let Some(h) = gs.get(k + 1) {
            push(
                format!("braid g{i} g{}", i + 1),
                product(&[g, h, g])?,
                product(&[h, g, h])?,
            )?;
        }
        for (l, h) in gs.iter().enumerate().skip(k + 2) {
            push(
                format!("far commutation g{i} g{}", l + 1),
                g.checked_mul(h)?,
                h.checked_mul(g)?,
            )?;
        }
    }
    if let Some(t) = rep.t_matrix() {
        push("t quadratic".into(), t.checked_mul(t)?, quadratic(t, big_q))?;
        if let Some(g1) = gs.first() {
            push(
                "t g1 t g1 four-term".into(),
                product(&[t, g1, t, g1])?,
                product(&[g1, t, g1, t])?,
            )?;
        }
        for (k, g) in gs.iter().enumerate().skip(1) {
            push(format!("t commutes with g{}", k + 1), t.checked_mul(g)?, g.checked_mul(t)?)?;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::super::grammar::{parse_element, parse_word};
    use super::super::seminormal::{skew_rep, type_a_rep, type_b_rep, RepLabel};
    use super::super::word::{expand_word, random_word, Alphabet};
    use super::*;
    use crate::combinatorics::{double_partitions, partitions, DoublePartition, Partition};
    use crate::scalars::{admissible_point, ParameterPoint};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn r(n: i64, d: i64) -> ExactScalar {
        ExactScalar::new(n, d).unwrap()
    }

    fn dp(a: &[usize], b: &[usize]) -> DoublePartition {
        DoublePartition::new(Partition::new(a.to_vec()).unwrap(), Partition::new(b.to_vec()).unwrap())
    }

    fn pt() -> ParameterPoint {
        ParameterPoint::new(r(2, 1), r(3, 1), 10).unwrap()
    }

    #[test]
    fn evaluation_basics() {
        let point = pt();
        let rep = type_a_rep(&Partition::new(vec![2]).unwrap(), &point).unwrap();
        let sq = evaluate(&rep, &parse_element("g1 g1", 2).unwrap()).unwrap();
        assert_eq!(sq, ScalarMatrix::scalar(1, r(4, 1)));
        let rep = type_b_rep(&dp(&[2, 1], &[1]), &point).unwrap();
        let id = evaluate(&rep, &HeckeElement::one(4)).unwrap();
        assert_eq!(id, ScalarMatrix::identity(rep.dimension()));
        assert_eq!(
            character(&rep, &HeckeElement::one(4)).unwrap(),
            ExactScalar::from(rep.dimension() as i64)
        );
        let lhs = evaluate(&rep, &parse_element("g2 g2", 4).unwrap()).unwrap();
        let rhs = evaluate(&rep, &parse_element("1 g2 + 2", 4).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
        let rank_one = type_b_rep(&dp(&[1], &[]), &point).unwrap();
        assert_eq!(character(&rank_one, &parse_element("t", 1).unwrap()).unwrap(), r(3, 1));
    }

    #[test]
    fn evaluation_rejects_larger_words() {
        let rep = type_b_rep(&dp(&[1], &[1]), &pt()).unwrap();
        assert!(evaluate_word(&rep, &parse_word("g2", 3).unwrap()).is_err());
        let a = type_a_rep(&Partition::new(vec![2]).unwrap(), &pt()).unwrap();
        assert!(evaluate_word(&a, &parse_word("t", 2).unwrap()).is_err());
    }

    #[test]
    fn expansion_preserves_the_image() {
        let point = pt();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for shape in double_partitions(3) {
            let rep = type_b_rep(&shape, &point).unwrap();
            for text in ["G1 t'2 u", "t'1 G2 t", "t'2 t'1 t'0", "u g2 u"] {
                let w = parse_word(text, 3).unwrap();
                assert_eq!(
                    evaluate_word(&rep, &w).unwrap(),
                    evaluate(&rep, &expand_word(&w, &point)).unwrap()
                );
            }
            let w = random_word(&mut rng, 3, 6, Alphabet::TypeB);
            assert_eq!(
                evaluate_word(&rep, &w).unwrap(),
                evaluate(&rep, &expand_word(&w, &point)).unwrap()
            );
        }
    }

    #[test]
    fn characters_are_cyclic() {
        let point = pt();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for shape in double_partitions(3) {
            let rep = type_b_rep(&shape, &point).unwrap();
            for _ in 0..5 {
                let a = random_word(&mut rng, 3, 5, Alphabet::TypeB);
                let b = random_word(&mut rng, 3, 5, Alphabet::TypeB);
                let ab = HeckeElement::from_word(&a.concat(&b));
                let ba = HeckeElement::from_word(&b.concat(&a));
                assert_eq!(character(&rep, &ab).unwrap(), character(&rep, &ba).unwrap());
            }
        }
    }

    #[test]
    fn relations_hold_on_every_construction() {
        for seed in 0..3 {
            let point = admissible_point(4, 5, 5, seed).unwrap();
            for n in 0..=4 {
                for mu in partitions(n) {
                    let rep = type_a_rep(&mu, &point).unwrap();
                    assert!(relation_residuals(&rep).unwrap().iter().all(Residual::holds));
                }
                for shape in double_partitions(n) {
                    let rep = type_b_rep(&shape, &point).unwrap();
                    for res in relation_residuals(&rep).unwrap() {
                        assert!(res.holds(), "{shape}: {}", res.relation);
                    }
                }
            }
        }
        let q = r(3, 2);
        for shape in double_partitions(2) {
            let rep = skew_rep(&shape, 3, 3, &q).unwrap();
            assert!(relation_residuals(&rep).unwrap().iter().all(Residual::holds));
        }
    }

    #[test]
    fn relation_count() {
        let rep = type_b_rep(&dp(&[2, 1], &[1]), &pt()).unwrap();
        // 3 quadratics, 2 braids, 1 far commutation, t quadratic, four-term,
        // and 2 commutations of t.
        assert_eq!(relation_residuals(&rep).unwrap().len(), 10);
    }

    #[test]
    fn corruption_is_detected() {
        let point = pt();
        let rep = type_b_rep(&dp(&[1], &[1]), &point).unwrap();
        let mut g1 = rep.g(1).unwrap().clone();
        g1[(0, 1)] += ExactScalar::one();
        let bad = Representation::from_matrices(
            RepLabel::TypeB(dp(&[1], &[1])),
            rep.basis().to_vec(),
            rep.t_matrix().cloned(),
            vec![g1],
            point,
        )
        .unwrap();
        assert!(relation_residuals(&bad).unwrap().iter().any(|r| !r.holds()));
    }
}
