use std::fmt;

use crate::error::{Error, Result};

/// A partition, stored without trailing zeros. Queries past the last part
/// return 0, which is the zero padding used throughout.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Builds a partition from weakly decreasing parts; trailing zeros are dropped.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::pre(format!("parts {parts:?} are not weakly decreasing")));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// `[m, m, ..., m]` with `rows` parts.
    pub fn rectangle(m: usize, rows: usize) -> Self {
        if m == 0 {
            return Self::empty();
        }
        Partition(vec![m; rows])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Part `i` (0-based), zero past the length.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Parts padded with zeros to length `r`; `None` if there are more than `r` parts.
    pub fn padded(&self, r: usize) -> Option<Vec<usize>> {
        if self.len() > r {
            return None;
        }
        let mut v = self.0.clone();
        v.resize(r, 0);
        Some(v)
    }

    /// `sum (i-1) * alpha_i`.
    pub fn n_stat(&self) -> usize {
        self.0.iter().enumerate().map(|(i, &p)| i * p).sum()
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().enumerate().all(|(i, &p)| p <= self.part(i))
    }

    /// Rows (0-based) where a box can be added.
    pub fn addable_rows(&self) -> Vec<usize> {
        (0..=self.len())
            .filter(|&i| i == 0 || self.part(i) < self.part(i - 1))
            .collect()
    }

    /// Rows (0-based) whose last box can be removed.
    pub fn removable_rows(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| self.part(i) > self.part(i + 1))
            .collect()
    }

    pub fn with_box_added(&self, row: usize) -> Option<Partition> {
        if row > self.len() || (row > 0 && self.part(row) >= self.part(row - 1)) {
            return None;
        }
        let mut v = self.0.clone();
        if row == v.len() {
            v.push(1);
        } else {
            v[row] += 1;
        }
        Some(Partition(v))
    }

    pub fn with_box_removed(&self, row: usize) -> Option<Partition> {
        if row >= self.len() || self.part(row) <= self.part(row + 1) {
            return None;
        }
        let mut v = self.0.clone();
        v[row] -= 1;
        Partition::new(v).ok()
    }

    /// Number of standard tableaux, by the hook length formula.
    pub fn standard_count(&self) -> u128 {
        let n = self.size();
        let mut hooks: u128 = 1;
        for (i, &len) in self.0.iter().enumerate() {
            for j in 0..len {
                let arm = len - j - 1;
                let leg = self.0[i + 1..].iter().filter(|&&p| p > j).count();
                hooks *= (arm + leg + 1) as u128;
            }
        }
        factorial(n) / hooks
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.part(0);
        Partition(
            (0..cols)
                .map(|j| self.0.iter().filter(|&&p| p > j).count())
                .collect(),
        )
    }
}

pub(crate) fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

pub(crate) fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// All partitions of `n` in reverse lexicographic order: `[3], [2,1], [1,1,1]`.
pub fn partitions(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill(n, n, &mut current, &mut out);
    out
}

fn fill(remaining: usize, max_part: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition(current.clone()));
        return;
    }
    for part in (1..=remaining.min(max_part)).rev() {
        current.push(part);
        fill(remaining - part, part, current, out);
        current.pop();
    }
}

/// An ordered pair of partitions `(alpha, beta)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct DoublePartition {
    pub first: Partition,
    pub second: Partition,
}

impl DoublePartition {
    pub fn new(first: Partition, second: Partition) -> Self {
        DoublePartition { first, second }
    }

    pub fn size(&self) -> usize {
        self.first.size() + self.second.size()
    }

    pub fn swapped(&self) -> DoublePartition {
        DoublePartition::new(self.second.clone(), self.first.clone())
    }

    pub fn contains(&self, other: &DoublePartition) -> bool {
        self.first.contains(&other.first) && self.second.contains(&other.second)
    }

    /// `(n choose |alpha|) f^alpha f^beta`, via hook lengths.
    pub fn dimension(&self) -> u128 {
        binomial(self.size(), self.first.size())
            * self.first.standard_count()
            * self.second.standard_count()
    }

    /// Double partitions one box smaller, in canonical order.
    pub fn one_box_predecessors(&self) -> Vec<DoublePartition> {
        let mut out: Vec<DoublePartition> = self
            .first
            .removable_rows()
            .into_iter()
            .filter_map(|r| self.first.with_box_removed(r))
            .map(|a| DoublePartition::new(a, self.second.clone()))
            .collect();
        out.extend(
            self.second
                .removable_rows()
                .into_iter()
                .filter_map(|r| self.second.with_box_removed(r))
                .map(|b| DoublePartition::new(self.first.clone(), b)),
        );
        out
    }
}

impl fmt::Display for DoublePartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}", self.first, self.second)
    }
}

impl fmt::Debug for DoublePartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// All double partitions of `n`: by decreasing `|alpha|`, then each component
/// in the order of [`partitions`].
pub fn double_partitions(n: usize) -> Vec<DoublePartition> {
    let mut out = Vec::new();
    for k in (0..=n).rev() {
        for a in partitions(k) {
            for b in partitions(n - k) {
                out.push(DoublePartition::new(a.clone(), b));
            }
        }
    }
    out
}

/// All shapes obtained by adding one box, first to `alpha` then to `beta`.
pub fn one_box_successors(shape: &DoublePartition) -> Vec<DoublePartition> {
    let mut out: Vec<DoublePartition> = shape
        .first
        .addable_rows()
        .into_iter()
        .filter_map(|r| shape.first.with_box_added(r))
        .map(|a| DoublePartition::new(a, shape.second.clone()))
        .collect();
    out.extend(
        shape
            .second
            .addable_rows()
            .into_iter()
            .filter_map(|r| shape.second.with_box_added(r))
            .map(|b| DoublePartition::new(shape.first.clone(), b)),
    );
    out
}

/// The single partition `[m+alpha_1, ..., m+alpha_r1, beta_1, beta_2, ...]`
/// obtained by gluing `alpha` to the right of an `r1 x m` rectangle and
/// `beta` below it.
///
/// Fails unless `l(alpha) <= r1` and `beta_1 <= m`; otherwise the skew shape
/// over the rectangle would not split back into `(alpha, beta)`.
pub fn embed_double(shape: &DoublePartition, m: usize, r1: usize) -> Result<Partition> {
    if shape.first.len() > r1 {
        return Err(Error::pre(format!(
            "l({}) = {} exceeds r1 = {r1}",
            shape.first,
            shape.first.len()
        )));
    }
    if shape.second.part(0) > m {
        return Err(Error::pre(format!(
            "first row of {} is longer than m = {m}",
            shape.second
        )));
    }
    if m == 0 {
        return Err(Error::pre("m must be positive"));
    }
    let mut parts: Vec<usize> = (0..r1).map(|i| m + shape.first.part(i)).collect();
    parts.extend_from_slice(shape.second.parts());
    Partition::new(parts)
}

/// Inverse of [`embed_double`] for partitions containing the rectangle.
pub fn split_embedded(mu: &Partition, m: usize, r1: usize) -> Result<DoublePartition> {
    if !mu.contains(&Partition::rectangle(m, r1)) {
        return Err(Error::pre(format!("{mu} does not contain [{m}^{r1}]")));
    }
    let first = Partition::new((0..r1).map(|i| mu.part(i) - m).collect())?;
    let second = Partition::new(mu.parts().iter().skip(r1).copied().collect())?;
    Ok(DoublePartition::new(first, second))
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn dp(a: &[usize], b: &[usize]) -> DoublePartition {
        DoublePartition::new(p(a), p(b))
    }

    /// Brute force: all weakly decreasing sequences of positive integers summing to n.
    fn brute_partition_count(n: usize) -> usize {
        fn go(rem: usize, max: usize) -> usize {
            if rem == 0 {
                return 1;
            }
            (1..=rem.min(max)).map(|k| go(rem - k, k)).sum()
        }
        go(n, n)
    }

    #[test]
    fn partitions_small() {
        assert_eq!(partitions(0), vec![Partition::empty()]);
        assert_eq!(partitions(3), vec![p(&[3]), p(&[2, 1]), p(&[1, 1, 1])]);
        assert_eq!(partitions(6).len(), 11);
        for n in 0..10 {
            assert_eq!(partitions(n).len(), brute_partition_count(n));
        }
    }

    #[test]
    fn partitions_are_distinct_and_valid() {
        for n in 0..9 {
            let all = partitions(n);
            let set: std::collections::HashSet<_> = all.iter().collect();
            assert_eq!(set.len(), all.len());
            assert!(all.iter().all(|a| a.size() == n));
        }
    }

    #[test]
    fn double_partition_counts() {
        assert_eq!(double_partitions(1), vec![dp(&[1], &[]), dp(&[], &[1])]);
        assert_eq!(double_partitions(2).len(), 5);
        let oracle = |n: usize| -> usize {
            (0..=n)
                .map(|k| brute_partition_count(k) * brute_partition_count(n - k))
                .sum()
        };
        assert_eq!(double_partitions(3).len(), 10);
        for n in 0..7 {
            assert_eq!(double_partitions(n).len(), oracle(n));
        }
    }

    #[test]
    fn trailing_zeros_and_validation() {
        assert_eq!(p(&[2, 1, 0, 0]), p(&[2, 1]));
        assert!(Partition::new(vec![1, 2]).is_err());
        assert_eq!(p(&[2, 1]).padded(4), Some(vec![2, 1, 0, 0]));
        assert_eq!(p(&[1, 1, 1]).padded(2), None);
    }

    #[test]
    fn n_stat_examples() {
        assert_eq!(p(&[5]).n_stat(), 0);
        assert_eq!(p(&[2, 1]).n_stat(), 1);
        assert_eq!(p(&[3, 2, 2]).n_stat(), 6);
    }

    #[test]
    fn successors_examples() {
        assert_eq!(
            one_box_successors(&dp(&[], &[])),
            vec![dp(&[1], &[]), dp(&[], &[1])]
        );
        assert_eq!(
            one_box_successors(&dp(&[1], &[])),
            vec![dp(&[2], &[]), dp(&[1, 1], &[]), dp(&[1], &[1])]
        );
        assert_eq!(one_box_successors(&dp(&[2, 1], &[1])).len(), 5);
    }

    #[test]
    fn successors_match_containment() {
        for n in 0..5 {
            let bigger = double_partitions(n + 1);
            for s in double_partitions(n) {
                let succ = one_box_successors(&s);
                let by_containment: Vec<_> =
                    bigger.iter().filter(|b| b.contains(&s)).cloned().collect();
                let mut a = succ.clone();
                let mut b = by_containment;
                a.sort();
                b.sort();
                assert_eq!(a, b, "shape {s}");
                for t in &succ {
                    assert!(t.one_box_predecessors().contains(&s));
                }
            }
        }
    }

    #[test]
    fn embed_examples() {
        assert_eq!(embed_double(&dp(&[], &[]), 2, 2).unwrap(), p(&[2, 2]));
        assert_eq!(embed_double(&dp(&[1], &[]), 2, 2).unwrap(), p(&[3, 2]));
        assert_eq!(embed_double(&dp(&[], &[1]), 2, 2).unwrap(), p(&[2, 2, 1]));
        assert!(embed_double(&dp(&[1, 1, 1], &[]), 2, 2).is_err());
        assert!(embed_double(&dp(&[], &[3]), 2, 2).is_err());
    }

    #[test]
    fn embedding_is_a_bijection() {
        for n in 0..5 {
            let (m, r1) = (n + 1, n + 1);
            let rect = Partition::rectangle(m, r1);
            let images: Vec<Partition> = double_partitions(n)
                .iter()
                .map(|s| embed_double(s, m, r1).unwrap())
                .collect();
            let set: std::collections::HashSet<_> = images.iter().collect();
            assert_eq!(set.len(), images.len(), "injective at n = {n}");
            let containing: Vec<Partition> = partitions(n + m * r1)
                .into_iter()
                .filter(|mu| mu.contains(&rect))
                .collect();
            assert_eq!(containing.len(), images.len(), "surjective at n = {n}");
            for mu in containing {
                assert!(set.contains(&mu));
                let back = split_embedded(&mu, m, r1).unwrap();
                assert_eq!(embed_double(&back, m, r1).unwrap(), mu);
                assert_eq!(mu.size(), m * r1 + n);
            }
        }
    }

    #[test]
    fn hook_length_small() {
        assert_eq!(p(&[2, 1]).standard_count(), 2);
        assert_eq!(p(&[3, 2]).standard_count(), 5);
        assert_eq!(p(&[2, 2, 1]).conjugate(), p(&[3, 2]));
        assert_eq!(dp(&[1], &[1]).dimension(), 2);
        assert_eq!(dp(&[2, 1, 1], &[3, 2]).dimension(), 126 * 3 * 5);
    }
}
