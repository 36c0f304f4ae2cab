//! Text syntax for words and elements.
//!
//! A word is a whitespace-separated list of letters: `t`, `u`, `gN`, `GN`
//! (the inverse of `gN`) and `t'N`. An element is a `+`-separated sum of
//! terms, each an optional rational coefficient followed by a word, for
//! example `-1/2 g1 t + 3 + t'1`. A bare coefficient is a multiple of the
//! identity and an empty string is the identity itself.

use super::word::{HeckeElement, HeckeWord, Letter};
use crate::error::{Error, Result};
use crate::scalars::ExactScalar;

fn parse_index(token: &str, digits: &str) -> Result<usize> {
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::parse(token, "expected a generator index"));
    }
    digits
        .parse()
        .map_err(|_| Error::parse(token, "generator index out of range"))
}

/// Parse a single letter, checking it against the rank `n`.
pub fn parse_letter(token: &str, n: usize) -> Result<Letter> {
    let letter = if token == "t" {
        Letter::T
    } else if token == "u" {
        Letter::U
    } else if let Some(rest) = token.strip_prefix("t'") {
        Letter::Tprime(parse_index(token, rest)?)
    } else if let Some(rest) = token.strip_prefix('g') {
        Letter::G(parse_index(token, rest)?)
    } else if let Some(rest) = token.strip_prefix('G') {
        Letter::Ginv(parse_index(token, rest)?)
    } else {
        return Err(Error::parse(token, "unknown letter"));
    };
    if matches!(letter, Letter::G(0) | Letter::Ginv(0)) {
        return Err(Error::parse(token, "generator indices start at 1"));
    }
    if letter.min_rank() > n {
        return Err(Error::parse(token, format!("letter needs rank at least {}", letter.min_rank())));
    }
    Ok(letter)
}

/// Parse a word in the rank-`n` algebra. `1` on its own is the empty word.
pub fn parse_word(text: &str, n: usize) -> Result<HeckeWord> {
    if text.trim() == "1" {
        return Ok(HeckeWord::identity(n));
    }
    let letters = text
        .split_whitespace()
        .map(|tok| parse_letter(tok, n))
        .collect::<Result<Vec<_>>>()?;
    HeckeWord::new(letters, n)
}

fn is_coefficient(token: &str) -> bool {
    token
        .chars()
        .next()
        .is_some_and(|c| c.is_ascii_digit() || c == '-')
}

/// Parse a linear combination of words in the rank-`n` algebra.
pub fn parse_element(text: &str, n: usize) -> Result<HeckeElement> {
    let tokens: Vec<&str> = text.split_whitespace().collect();
    if tokens.is_empty() {
        return Ok(HeckeElement::one(n));
    }
    let mut total = HeckeElement::zero(n);
    for (k, term) in tokens.split(|tok| *tok == "+").enumerate() {
        let Some((&head, rest)) = term.split_first() else {
            let reason = if k == 0 { "sum starts with `+`" } else { "empty term" };
            return Err(Error::parse("+", reason));
        };
        let (coeff, letters) = if is_coefficient(head) {
            let c: ExactScalar = head
                .parse()
                .map_err(|_| Error::parse(head, "invalid coefficient"))?;
            (c, rest)
        } else {
            (ExactScalar::one(), term)
        };
        let letters = letters
            .iter()
            .map(|tok| parse_letter(tok, n))
            .collect::<Result<Vec<_>>>()?;
        total = total.add(&HeckeElement::term(&HeckeWord::new(letters, n)?, coeff));
    }
    Ok(total)
}
