use std::fmt;
use std::ops::{Index, IndexMut};

use super::ExactScalar;
use crate::error::{Error, Result};

/// Dense row-major matrix over [`ExactScalar`].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ScalarMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<ExactScalar>,
}

impl ScalarMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ScalarMatrix {
            rows,
            cols,
            entries: vec![ExactScalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar(n, ExactScalar::one())
    }

    /// `value` times the `n x n` identity.
    pub fn scalar(n: usize, value: ExactScalar) -> Self {
        let mut m = Self::zeros(n, n);
        if !value.is_zero() {
            for i in 0..n {
                m[(i, i)] = value.clone();
            }
        }
        m
    }

    pub fn diagonal(values: Vec<ExactScalar>) -> Self {
        let n = values.len();
        let mut m = Self::zeros(n, n);
        for (i, v) in values.into_iter().enumerate() {
            m[(i, i)] = v;
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<ExactScalar>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        Ok(ScalarMatrix {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[ExactScalar] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> &[ExactScalar] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(ExactScalar::is_zero)
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self[(i, j)].is_zero()))
    }

    pub fn diagonal_entries(&self) -> Vec<ExactScalar> {
        (0..self.rows.min(self.cols))
            .map(|i| self[(i, i)].clone())
            .collect()
    }

    pub fn trace(&self) -> ExactScalar {
        (0..self.rows.min(self.cols)).map(|i| &self[(i, i)]).sum()
    }

    pub fn checked_mul(&self, rhs: &ScalarMatrix) -> Result<ScalarMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = ScalarMatrix::zeros(self.rows, rhs.cols);
        // Generator matrices are very sparse; skip zero work on both sides.
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if b.is_zero() {
                        continue;
                    }
                    out[(i, j)] += a * b;
                }
            }
        }
        Ok(out)
    }

    pub fn checked_add(&self, rhs: &ScalarMatrix) -> Result<ScalarMatrix> {
        self.zip_with(rhs, |a, b| a + b)
    }

    pub fn checked_sub(&self, rhs: &ScalarMatrix) -> Result<ScalarMatrix> {
        self.zip_with(rhs, |a, b| a - b)
    }

    fn zip_with(
        &self,
        rhs: &ScalarMatrix,
        f: impl Fn(&ExactScalar, &ExactScalar) -> ExactScalar,
    ) -> Result<ScalarMatrix> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(Error::Dimension(format!(
                "shape {}x{} vs {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        Ok(ScalarMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| f(a, b))
                .collect(),
        })
    }

    pub fn scale(&self, c: &ExactScalar) -> ScalarMatrix {
        ScalarMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|x| x * c).collect(),
        }
    }

    /// `self + c * I`.
    pub fn add_scalar(&self, c: &ExactScalar) -> ScalarMatrix {
        let mut out = self.clone();
        for i in 0..self.rows.min(self.cols) {
            out[(i, i)] += c;
        }
        out
    }

    pub fn transpose(&self) -> ScalarMatrix {
        let mut out = ScalarMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(j, i)] = self[(i, j)].clone();
            }
        }
        out
    }

    /// Rank by exact Gaussian elimination.
    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        let mut rank = 0;
        for col in 0..m.cols {
            let Some(pivot) = (rank..m.rows).find(|&r| !m[(r, col)].is_zero()) else {
                continue;
            };
            m.swap_rows(pivot, rank);
            let inv = m[(rank, col)].inv().expect("pivot is nonzero");
            for r in 0..m.rows {
                if r == rank || m[(r, col)].is_zero() {
                    continue;
                }
                let factor = &m[(r, col)] * &inv;
                for c in col..m.cols {
                    let delta = &factor * &m[(rank, c)];
                    m[(r, c)] -= delta;
                }
            }
            rank += 1;
            if rank == m.rows {
                break;
            }
        }
        rank
    }

    /// Determinant by exact elimination; errors on non-square input.
    pub fn determinant(&self) -> Result<ExactScalar> {
        if !self.is_square() {
            return Err(Error::Dimension("determinant of non-square matrix".into()));
        }
        let n = self.rows;
        let mut m = self.clone();
        let mut det = ExactScalar::one();
        for col in 0..n {
            let Some(pivot) = (col..n).find(|&r| !m[(r, col)].is_zero()) else {
                return Ok(ExactScalar::zero());
            };
            if pivot != col {
                m.swap_rows(pivot, col);
                det = -det;
            }
            let p = m[(col, col)].clone();
            det *= &p;
            let inv = p.inv().expect("pivot is nonzero");
            for r in col + 1..n {
                if m[(r, col)].is_zero() {
                    continue;
                }
                let factor = &m[(r, col)] * &inv;
                for c in col..n {
                    let delta = &factor * &m[(col, c)];
                    m[(r, c)] -= delta;
                }
            }
        }
        Ok(det)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }
}

impl Index<(usize, usize)> for ScalarMatrix {
    type Output = ExactScalar;
    fn index(&self, (i, j): (usize, usize)) -> &ExactScalar {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of range");
        &self.entries[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for ScalarMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut ExactScalar {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of range");
        &mut self.entries[i * self.cols + j]
    }
}

impl fmt::Debug for ScalarMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ScalarMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn int_matrix(rows: &[&[i64]]) -> ScalarMatrix {
        ScalarMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| ExactScalar::from(v)).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn multiply_and_trace() {
        let a = int_matrix(&[&[1, 2], &[3, 4]]);
        let b = int_matrix(&[&[0, 1], &[1, 0]]);
        let ab = a.checked_mul(&b).unwrap();
        assert_eq!(ab, int_matrix(&[&[2, 1], &[4, 3]]));
        assert_eq!(a.trace(), ExactScalar::from(5));
        assert_eq!(a.determinant().unwrap(), ExactScalar::from(-2));
        assert!(a.checked_mul(&int_matrix(&[&[1, 2, 3]])).is_err());
    }

    #[test]
    fn rank_detects_dependence() {
        let m = int_matrix(&[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1]]);
        assert_eq!(m.rank(), 2);
        assert_eq!(ScalarMatrix::identity(4).rank(), 4);
        assert_eq!(ScalarMatrix::zeros(3, 2).rank(), 0);
    }

    #[test]
    fn ragged_rows_rejected() {
        let rows = vec![vec![ExactScalar::one()], vec![]];
        assert!(ScalarMatrix::from_rows(rows).is_err());
    }

    fn mat(n: usize) -> impl Strategy<Value = ScalarMatrix> {
        proptest::collection::vec((-6i64..6, 1i64..4), n * n).prop_map(move |v| {
            let entries: Vec<ExactScalar> = v
                .into_iter()
                .map(|(a, b)| ExactScalar::new(a, b).unwrap())
                .collect();
            ScalarMatrix::from_rows(entries.chunks(n).map(<[_]>::to_vec).collect()).unwrap()
        })
    }

    proptest! {
        #[test]
        fn multiplication_associative(a in mat(3), b in mat(3), c in mat(3)) {
            let left = a.checked_mul(&b).unwrap().checked_mul(&c).unwrap();
            let right = a.checked_mul(&b.checked_mul(&c).unwrap()).unwrap();
            prop_assert_eq!(left, right);
        }

        #[test]
        fn multiplication_distributes(a in mat(3), b in mat(3), c in mat(3)) {
            let left = a.checked_mul(&b.checked_add(&c).unwrap()).unwrap();
            let right = a.checked_mul(&b).unwrap().checked_add(&a.checked_mul(&c).unwrap()).unwrap();
            prop_assert_eq!(left, right);
        }

        #[test]
        fn determinant_multiplicative(a in mat(3), b in mat(3)) {
            let det_ab = a.checked_mul(&b).unwrap().determinant().unwrap();
            prop_assert_eq!(det_ab, a.determinant().unwrap() * b.determinant().unwrap());
        }
    }
}
