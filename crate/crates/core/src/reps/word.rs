use std::collections::BTreeMap;
use std::fmt;

use rand::Rng;

use crate::error::{Error, Result};
use crate::scalars::{ExactScalar, ParameterPoint};

/// One generator symbol of a type-B (or type-D) Hecke word.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    /// The type-B generator `t`.
    T,
    /// `g_i`.
    G(usize),
    /// `g_i^{-1}`.
    Ginv(usize),
    /// `t'_i = g_i ... g_1 t g_1^{-1} ... g_i^{-1}`; `Tprime(0)` is `t`.
    Tprime(usize),
    /// The type-D generator `u = t g_1 t`.
    U,
}

impl Letter {
    /// Smallest rank `n` of an algebra containing the letter.
    pub fn min_rank(self) -> usize {
        match self {
            Letter::T => 1,
            Letter::G(i) | Letter::Ginv(i) => i + 1,
            Letter::Tprime(i) => i + 1,
            Letter::U => 2,
        }
    }

    fn is_valid(self) -> bool {
        !matches!(self, Letter::G(0) | Letter::Ginv(0))
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Letter::T => write!(f, "t"),
            Letter::G(i) => write!(f, "g{i}"),
            Letter::Ginv(i) => write!(f, "G{i}"),
            Letter::Tprime(i) => write!(f, "t'{i}"),
            Letter::U => write!(f, "u"),
        }
    }
}

/// A word in the generators, tied to the rank of the algebra it lives in.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HeckeWord {
    letters: Vec<Letter>,
    ambient_n: usize,
}

impl HeckeWord {
    pub fn new(letters: Vec<Letter>, ambient_n: usize) -> Result<Self> {
        for &letter in &letters {
            if !letter.is_valid() || letter.min_rank() > ambient_n {
                return Err(Error::pre(format!(
                    "letter {letter} does not belong to the rank-{ambient_n} algebra"
                )));
            }
        }
        Ok(HeckeWord { letters, ambient_n })
    }

    pub fn identity(ambient_n: usize) -> Self {
        HeckeWord {
            letters: Vec::new(),
            ambient_n,
        }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn ambient_n(&self) -> usize {
        self.ambient_n
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Concatenation `self * rhs` in the larger of the two ambient algebras.
    pub fn concat(&self, rhs: &HeckeWord) -> HeckeWord {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&rhs.letters);
        HeckeWord {
            letters,
            ambient_n: self.ambient_n.max(rhs.ambient_n),
        }
    }

    /// The same letters viewed inside a larger algebra.
    pub fn lift(&self, ambient_n: usize) -> Result<HeckeWord> {
        HeckeWord::new(self.letters.clone(), ambient_n)
    }

    /// Letters in reverse order.
    pub fn reversed(&self) -> HeckeWord {
        let mut letters = self.letters.clone();
        letters.reverse();
        HeckeWord {
            letters,
            ambient_n: self.ambient_n,
        }
    }
}

impl fmt::Display for HeckeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.letters.iter().map(ToString::to_string).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// A finite linear combination of words with exact coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeckeElement {
    terms: BTreeMap<Vec<Letter>, ExactScalar>,
    ambient_n: usize,
}

impl HeckeElement {
    pub fn zero(ambient_n: usize) -> Self {
        HeckeElement {
            terms: BTreeMap::new(),
            ambient_n,
        }
    }

    pub fn one(ambient_n: usize) -> Self {
        Self::from_word(&HeckeWord::identity(ambient_n))
    }

    pub fn from_word(word: &HeckeWord) -> Self {
        Self::term(word, ExactScalar::one())
    }

    pub fn term(word: &HeckeWord, coeff: ExactScalar) -> Self {
        let mut e = Self::zero(word.ambient_n);
        e.add_term(word.letters.clone(), coeff);
        e
    }

    pub fn ambient_n(&self) -> usize {
        self.ambient_n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical (lexicographic) word order.
    pub fn terms(&self) -> impl Iterator<Item = (HeckeWord, &ExactScalar)> + '_ {
        self.terms.iter().map(|(letters, c)| {
            (
                HeckeWord {
                    letters: letters.clone(),
                    ambient_n: self.ambient_n,
                },
                c,
            )
        })
    }

    pub fn coefficient(&self, word: &HeckeWord) -> ExactScalar {
        self.terms
            .get(&word.letters)
            .cloned()
            .unwrap_or_else(ExactScalar::zero)
    }

    fn add_term(&mut self, letters: Vec<Letter>, coeff: ExactScalar) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.get_mut(&letters) {
            Some(entry) => {
                *entry += coeff;
                if entry.is_zero() {
                    self.terms.remove(&letters);
                }
            }
            None => {
                self.terms.insert(letters, coeff);
            }
        }
    }

    pub fn add(&self, rhs: &HeckeElement) -> HeckeElement {
        let mut out = self.clone();
        out.ambient_n = self.ambient_n.max(rhs.ambient_n);
        for (letters, c) in &rhs.terms {
            out.add_term(letters.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &HeckeElement) -> HeckeElement {
        self.add(&rhs.scale(&-ExactScalar::one()))
    }

    pub fn scale(&self, c: &ExactScalar) -> HeckeElement {
        let mut out = HeckeElement::zero(self.ambient_n);
        for (letters, v) in &self.terms {
            out.add_term(letters.clone(), v * c);
        }
        out
    }

    /// Product by concatenation of words, extended bilinearly.
    pub fn mul(&self, rhs: &HeckeElement) -> HeckeElement {
        let mut out = HeckeElement::zero(self.ambient_n.max(rhs.ambient_n));
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                let mut letters = a.clone();
                letters.extend_from_slice(b);
                out.add_term(letters, ca * cb);
            }
        }
        out
    }

    /// True when no letter is `t`, `t'_i` or `u`.
    pub fn is_type_a(&self) -> bool {
        self.terms
            .keys()
            .flatten()
            .all(|l| matches!(l, Letter::G(_) | Letter::Ginv(_)))
    }

    /// True when every letter belongs to the type-D alphabet `{u, g_i, g_i^{-1}}`.
    pub fn is_type_d(&self) -> bool {
        self.terms
            .keys()
            .flatten()
            .all(|l| matches!(l, Letter::U | Letter::G(_) | Letter::Ginv(_)))
    }
}

impl From<&HeckeWord> for HeckeElement {
    fn from(word: &HeckeWord) -> Self {
        HeckeElement::from_word(word)
    }
}

impl fmt::Display for HeckeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (word, c) in self.terms() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if word.is_empty() {
                write!(f, "{c}")?;
            } else if c.is_one() {
                write!(f, "{word}")?;
            } else {
                write!(f, "{c} {word}")?;
            }
        }
        Ok(())
    }
}

/// Rewrite `g_i^{-1}`, `t'_i` and `u` in terms of `t` and the `g_i` only.
pub fn expand_word(word: &HeckeWord, point: &ParameterPoint) -> HeckeElement {
    let n = word.ambient_n;
    let single = |letters: Vec<Letter>| HeckeElement::from_word(&HeckeWord { letters, ambient_n: n });
    let q_inv = point.qpow(-1);
    let inverse = |i: usize| {
        single(vec![Letter::G(i)])
            .scale(&q_inv)
            .add(&HeckeElement::one(n).scale(&(&q_inv - ExactScalar::one())))
    };
    let mut out = HeckeElement::one(n);
    for &letter in &word.letters {
        let factor = match letter {
            Letter::T | Letter::G(_) => single(vec![letter]),
            Letter::Ginv(i) => inverse(i),
            Letter::U => single(vec![Letter::T, Letter::G(1), Letter::T]),
            Letter::Tprime(i) => {
                let mut e = single((1..=i).rev().map(Letter::G).chain([Letter::T]).collect());
                for j in 1..=i {
                    e = e.mul(&inverse(j));
                }
                e
            }
        };
        out = out.mul(&factor);
    }
    out
}

/// The right coset representatives of `H_{n-1}` in `H_n`:
/// `1`, `t'_{n-1}`, `g_{n-1}...g_{n-k}` and `g_{n-1}...g_{n-k} t'_{n-k-1}` for
/// `1 <= k <= n-1`.
pub fn coset_representatives(n: usize) -> Result<Vec<HeckeWord>> {
    if n == 0 {
        return Err(Error::pre("coset representatives need n >= 1"));
    }
    let mut out = vec![HeckeWord::identity(n), HeckeWord::new(vec![Letter::Tprime(n - 1)], n)?];
    for k in 1..n {
        let descending: Vec<Letter> = (n - k..n).rev().map(Letter::G).collect();
        out.push(HeckeWord::new(descending.clone(), n)?);
        let mut with_t = descending;
        with_t.push(Letter::Tprime(n - k - 1));
        out.push(HeckeWord::new(with_t, n)?);
    }
    Ok(out)
}

/// The double coset representatives `{1, t}` for `n = 1` and
/// `{1, g_{n-1}, t'_{n-1}}` otherwise.
pub fn double_coset_representatives(n: usize) -> Result<Vec<HeckeWord>> {
    match n {
        0 => Err(Error::pre("double coset representatives need n >= 1")),
        1 => Ok(vec![HeckeWord::identity(1), HeckeWord::new(vec![Letter::T], 1)?]),
        _ => Ok(vec![
            HeckeWord::identity(n),
            HeckeWord::new(vec![Letter::G(n - 1)], n)?,
            HeckeWord::new(vec![Letter::Tprime(n - 1)], n)?,
        ]),
    }
}

/// Which generators a random word may use.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Alphabet {
    /// `g_i` and `g_i^{-1}`.
    TypeA,
    /// `t`, `g_i` and `g_i^{-1}`.
    TypeB,
    /// `u`, `g_i` and `g_i^{-1}`.
    TypeD,
}

/// A uniformly random word of the given length in the rank-`n` algebra.
pub fn random_word<R: Rng + ?Sized>(rng: &mut R, n: usize, len: usize, alphabet: Alphabet) -> HeckeWord {
    let gens = 2 * n.saturating_sub(1);
    let extra = match alphabet {
        Alphabet::TypeA => None,
        Alphabet::TypeB if n >= 1 => Some(Letter::T),
        Alphabet::TypeD if n >= 2 => Some(Letter::U),
        _ => None,
    };
    let choices = gens + usize::from(extra.is_some());
    if choices == 0 {
        return HeckeWord::identity(n);
    }
    let letters = (0..len)
        .map(|_| {
            let k = rng.gen_range(0..choices);
            if k < n.saturating_sub(1) {
                Letter::G(k + 1)
            } else if k < gens {
                Letter::Ginv(k - (n - 1) + 1)
            } else {
                extra.expect("extra letter present")
            }
        })
        .collect();
    HeckeWord {
        letters,
        ambient_n: n,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn point() -> ParameterPoint {
        ParameterPoint::new(ExactScalar::from(2), ExactScalar::from(3), 8).unwrap()
    }

    fn w(letters: &[Letter], n: usize) -> HeckeWord {
        HeckeWord::new(letters.to_vec(), n).unwrap()
    }

    #[test]
    fn words_check_their_rank() {
        assert!(HeckeWord::new(vec![Letter::G(2)], 2).is_err());
        assert!(HeckeWord::new(vec![Letter::G(0)], 3).is_err());
        assert!(HeckeWord::new(vec![Letter::Tprime(2)], 3).is_ok());
        assert!(HeckeWord::new(vec![Letter::Tprime(3)], 3).is_err());
        assert!(HeckeWord::new(vec![Letter::U], 1).is_err());
        assert!(HeckeWord::new(vec![Letter::T], 0).is_err());
    }

    #[test]
    fn inverse_expansion() {
        let p = point();
        let e = expand_word(&w(&[Letter::Ginv(1)], 2), &p);
        assert_eq!(e.len(), 2);
        assert_eq!(e.coefficient(&w(&[Letter::G(1)], 2)), ExactScalar::new(1, 2).unwrap());
        assert_eq!(e.coefficient(&HeckeWord::identity(2)), ExactScalar::new(-1, 2).unwrap());
    }

    #[test]
    fn tprime_expansion() {
        let p = point();
        let e = expand_word(&w(&[Letter::Tprime(0)], 1), &p);
        assert_eq!(e, HeckeElement::from_word(&w(&[Letter::T], 1)));
        let e = expand_word(&w(&[Letter::Tprime(1)], 2), &p);
        assert_eq!(e.len(), 2);
        assert_eq!(
            e.coefficient(&w(&[Letter::G(1), Letter::T, Letter::G(1)], 2)),
            ExactScalar::new(1, 2).unwrap()
        );
        assert_eq!(
            e.coefficient(&w(&[Letter::G(1), Letter::T], 2)),
            ExactScalar::new(-1, 2).unwrap()
        );
        let e = expand_word(&w(&[Letter::Tprime(3)], 4), &p);
        assert_eq!(e.len(), 8);
    }

    #[test]
    fn element_arithmetic_drops_zeros() {
        let a = HeckeElement::from_word(&w(&[Letter::G(1)], 2));
        assert!(a.sub(&a).is_zero());
        let sq = a.mul(&a);
        assert_eq!(sq.coefficient(&w(&[Letter::G(1), Letter::G(1)], 2)), ExactScalar::one());
        assert_eq!(format!("{}", a.add(&HeckeElement::one(2)).scale(&ExactScalar::from(2))), "2 + 2 g1");
    }

    #[test]
    fn coset_counts() {
        let r1 = coset_representatives(1).unwrap();
        assert_eq!(r1, vec![HeckeWord::identity(1), w(&[Letter::Tprime(0)], 1)]);
        for n in 1..6 {
            assert_eq!(coset_representatives(n).unwrap().len(), 2 * n);
        }
        assert_eq!(double_coset_representatives(1).unwrap().len(), 2);
        assert_eq!(double_coset_representatives(4).unwrap().len(), 3);
        assert!(coset_representatives(0).is_err());
    }

    #[test]
    fn random_words_respect_alphabet() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for n in 1..5 {
            for alphabet in [Alphabet::TypeA, Alphabet::TypeB, Alphabet::TypeD] {
                let word = random_word(&mut rng, n, 12, alphabet);
                assert!(HeckeWord::new(word.letters().to_vec(), n).is_ok());
                let e = HeckeElement::from_word(&word);
                match alphabet {
                    Alphabet::TypeA => assert!(e.is_type_a()),
                    Alphabet::TypeD => assert!(e.is_type_d()),
                    Alphabet::TypeB => {}
                }
            }
        }
    }
}
