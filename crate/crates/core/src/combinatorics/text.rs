//! Text encoding of shapes: a partition is `[2,1]` (the empty one is `[]`) and
//! a double partition is two of those joined by a bar, `[2,1]|[1]`.

use std::str::FromStr;

use super::partition::{DoublePartition, Partition};
use crate::error::{Error, Result};

pub fn parse_partition(s: &str) -> Result<Partition> {
    let trimmed = s.trim();
    let inner = trimmed
        .strip_prefix('[')
        .and_then(|rest| rest.strip_suffix(']'))
        .ok_or_else(|| Error::parse(trimmed, "a partition is written [p1,p2,...]"))?;
    if inner.trim().is_empty() {
        return Ok(Partition::empty());
    }
    let parts = inner
        .split(',')
        .map(|tok| {
            let tok = tok.trim();
            if tok.is_empty() || !tok.bytes().all(|b| b.is_ascii_digit()) {
                return Err(Error::parse(tok, "expected a nonnegative integer part"));
            }
            tok.parse::<usize>()
                .map_err(|e| Error::parse(tok, e.to_string()))
        })
        .collect::<Result<Vec<_>>>()?;
    Partition::new(parts).map_err(|_| Error::parse(trimmed, "parts must be weakly decreasing"))
}

pub fn parse_double_partition(s: &str) -> Result<DoublePartition> {
    let trimmed = s.trim();
    let (a, b) = trimmed
        .split_once('|')
        .ok_or_else(|| Error::parse(trimmed, "a double partition is written [..]|[..]"))?;
    Ok(DoublePartition::new(parse_partition(a)?, parse_partition(b)?))
}

impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_partition(s)
    }
}

impl FromStr for DoublePartition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_double_partition(s)
    }
}
