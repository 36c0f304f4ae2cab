use std::fmt;
use std::sync::OnceLock;

use crate::combinatorics::{
    ascending, axial_parameter, embed_double, standard_tableaux, Cell, Component, DoublePartition,
    DoubleTableau, Partition, TableauIndex,
};
use crate::error::{Error, Result};
use crate::scalars::{specialized_point, ExactScalar, ParameterPoint, ScalarMatrix};

/// What a [`Representation`] is a representation of.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum RepLabel {
    /// Irreducible representation of the type-A algebra.
    TypeA(Partition),
    /// Irreducible representation of the type-B algebra.
    TypeB(DoublePartition),
    /// The skew module of `mu / [m^r1]` with `mu` the embedding of `shape`,
    /// carrying the type-B action at `Q = -q^(r1+m)`.
    Skew {
        shape: DoublePartition,
        m: usize,
        r1: usize,
    },
}

impl fmt::Display for RepLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RepLabel::TypeA(mu) => write!(f, "{mu}"),
            RepLabel::TypeB(shape) => write!(f, "{shape}"),
            RepLabel::Skew { shape, m, r1 } => write!(f, "{shape} in [{m}^{r1}]"),
        }
    }
}

/// Generator matrices of a finite-dimensional representation on a tableau
/// basis. Column `j` of each matrix is the image of basis vector `j`.
#[derive(Clone, Debug)]
pub struct Representation {
    label: RepLabel,
    basis: Vec<DoubleTableau>,
    t_matrix: Option<ScalarMatrix>,
    g_matrices: Vec<ScalarMatrix>,
    point: ParameterPoint,
    g_inverses: Vec<ScalarMatrix>,
    tprime_cache: Vec<OnceLock<ScalarMatrix>>,
}

impl Representation {
    /// Assemble a representation from explicit matrices, checking only their
    /// sizes. Used for deliberately corrupted inputs in tests.
    pub fn from_matrices(
        label: RepLabel,
        basis: Vec<DoubleTableau>,
        t_matrix: Option<ScalarMatrix>,
        g_matrices: Vec<ScalarMatrix>,
        point: ParameterPoint,
    ) -> Result<Self> {
        let d = basis.len();
        let square = |m: &ScalarMatrix| m.rows() == d && m.cols() == d;
        if !g_matrices.iter().all(square) || !t_matrix.iter().all(square) {
            return Err(Error::Dimension(format!("generator matrices must be {d}x{d}")));
        }
        let q_inv = point.qpow(-1);
        let shift = &q_inv - ExactScalar::one();
        let g_inverses = g_matrices
            .iter()
            .map(|g| g.scale(&q_inv).add_scalar(&shift))
            .collect();
        let tprime_cache = (0..=g_matrices.len()).map(|_| OnceLock::new()).collect();
        Ok(Representation {
            label,
            basis,
            t_matrix,
            g_matrices,
            point,
            g_inverses,
            tprime_cache,
        })
    }

    pub fn label(&self) -> &RepLabel {
        &self.label
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[DoubleTableau] {
        &self.basis
    }

    pub fn t_matrix(&self) -> Option<&ScalarMatrix> {
        self.t_matrix.as_ref()
    }

    /// `g_matrices()[i - 1]` is the image of `g_i`.
    pub fn g_matrices(&self) -> &[ScalarMatrix] {
        &self.g_matrices
    }

    pub fn g(&self, i: usize) -> Option<&ScalarMatrix> {
        i.checked_sub(1).and_then(|k| self.g_matrices.get(k))
    }

    pub fn g_inverse(&self, i: usize) -> Option<&ScalarMatrix> {
        i.checked_sub(1).and_then(|k| self.g_inverses.get(k))
    }

    pub fn point(&self) -> &ParameterPoint {
        &self.point
    }

    /// Rank `n` of the algebra acting.
    pub fn rank(&self) -> usize {
        match &self.label {
            RepLabel::TypeA(mu) => mu.size(),
            RepLabel::TypeB(shape) | RepLabel::Skew { shape, .. } => shape.size(),
        }
    }

    /// Image of `t'_i`, built from `g_i, ..., g_1, t` and cached.
    pub fn tprime(&self, i: usize) -> Result<&ScalarMatrix> {
        let t_mat = self
            .t_matrix
            .as_ref()
            .ok_or_else(|| Error::pre("representation has no t generator"))?;
        let slot = self
            .tprime_cache
            .get(i)
            .filter(|_| i <= self.g_matrices.len())
            .ok_or_else(|| Error::pre(format!("t'{i} is outside the rank-{} algebra", self.rank())))?;
        if let Some(m) = slot.get() {
            return Ok(m);
        }
        let value = if i == 0 {
            t_mat.clone()
        } else {
            let inner = self.tprime(i - 1)?;
            self.g_matrices[i - 1]
                .checked_mul(inner)?
                .checked_mul(&self.g_inverses[i - 1])?
        };
        Ok(slot.get_or_init(|| value))
    }
}

/// `a(x) = x (1 - q) / (1 - x)`, the diagonal coefficient of the seminormal
/// action.
fn diagonal_coefficient(x: &ExactScalar, q: &ExactScalar) -> Result<ExactScalar> {
    let den = ExactScalar::one() - x;
    if den.is_zero() {
        return Err(Error::DivisionByZero("axial parameter equal to 1".into()));
    }
    Ok(x * (ExactScalar::one() - q) / den)
}

/// `P(x) = (q - x)(1 - q x) / (1 - x)^2`, the off-diagonal product of a 2x2
/// block, fixed by the block having trace `q - 1` and determinant `-q`.
fn pair_coefficient(x: &ExactScalar, q: &ExactScalar) -> ExactScalar {
    let one = ExactScalar::one();
    let den = (&one - x) * (&one - x);
    (q - x) * (&one - q * x) / den
}

/// Seminormal matrices for `g_1 .. g_{n-1}` on `basis`, with `x(t, i)` given
/// by `axial`.
fn seminormal_generators(
    basis: &[DoubleTableau],
    n: usize,
    q: &ExactScalar,
    axial: impl Fn(&DoubleTableau, usize) -> Result<ExactScalar>,
) -> Result<Vec<ScalarMatrix>> {
    let d = basis.len();
    let index = TableauIndex::new(basis);
    let mut out = Vec::with_capacity(n.saturating_sub(1));
    for i in 1..n {
        let mut g = ScalarMatrix::zeros(d, d);
        for (j, t) in basis.iter().enumerate() {
            let x = axial(t, i)?;
            let partner = t.apply_transposition(i).map(|s| {
                index
                    .position(&s)
                    .expect("a standard swap stays inside the basis")
            });
            g[(j, j)] = diagonal_coefficient(&x, q)?;
            if let Some(k) = partner {
                // In the pair (t, s_i t) the ascending tableau carries the
                // unit coefficient.
                g[(k, j)] = if ascending(t, i) {
                    ExactScalar::one()
                } else {
                    pair_coefficient(&x, q)
                };
            }
        }
        out.push(g);
    }
    Ok(out)
}

/// Seminormal representation of the type-A algebra `H_n(q)` indexed by `mu`.
pub fn type_a_rep(mu: &Partition, point: &ParameterPoint) -> Result<Representation> {
    let shape = DoublePartition::new(mu.clone(), Partition::empty());
    let basis = standard_tableaux(&shape);
    let gs = seminormal_generators(&basis, mu.size(), point.q(), |t, i| axial_parameter(t, i, point))?;
    Representation::from_matrices(RepLabel::TypeA(mu.clone()), basis, None, gs, point.clone())
}

/// Seminormal representation of the type-B algebra `H_n(q, Q)` indexed by a
/// double partition.
pub fn type_b_rep(shape: &DoublePartition, point: &ParameterPoint) -> Result<Representation> {
    let n = shape.size();
    if point.guard_bound() < n.saturating_sub(1) {
        return Err(Error::pre(format!(
            "parameter point checked only up to |s| <= {} but rank is {n}",
            point.guard_bound()
        )));
    }
    let basis = standard_tableaux(shape);
    let gs = seminormal_generators(&basis, n, point.q(), |t, i| axial_parameter(t, i, point))?;
    let t_matrix = (n >= 1).then(|| {
        ScalarMatrix::diagonal(
            basis
                .iter()
                .map(|t| match t.cells()[0].component {
                    Component::First => point.big_q().clone(),
                    Component::Second => -ExactScalar::one(),
                })
                .collect(),
        )
    });
    Representation::from_matrices(RepLabel::TypeB(shape.clone()), basis, t_matrix, gs, point.clone())
}

/// `q^(f(f-1) - sum_{i<j} (nu_i + 1) nu_j)`: the scalar by which the square
/// of the positive half twist acts on the type-A module of shape `nu`.
pub fn full_twist_scalar(nu: &Partition, q: &ExactScalar) -> ExactScalar {
    let f = nu.size() as i64;
    let parts = nu.parts();
    let mut cross = 0i64;
    for i in 0..parts.len() {
        for j in i + 1..parts.len() {
            cross += (parts[i] as i64 + 1) * parts[j] as i64;
        }
    }
    q.pow(f * (f - 1) - cross)
}

/// Content of a box of the double diagram after gluing it onto the
/// rectangle `[m^r1]`: first-component boxes sit to the right of the
/// rectangle, second-component boxes below it.
fn glued_content(cell: &Cell, m: usize, r1: usize) -> i64 {
    match cell.component {
        Component::First => (m + cell.col) as i64 - cell.row as i64,
        Component::Second => cell.col as i64 - (r1 + cell.row) as i64,
    }
}

/// The skew module of `mu / [m^r1]` with `mu = embed_double(shape, m, r1)`,
/// with the type-B action transported through the rectangle: `g_i` acts
/// through the type-A seminormal rule on contents inside `mu`, and `t` acts on
/// each tableau by `-alpha_nu / alpha_gamma`, where `nu` is the rectangle plus
/// the box of entry 1 and `gamma = [m^r1, 1]`.
pub fn skew_rep(shape: &DoublePartition, m: usize, r1: usize, q: &ExactScalar) -> Result<Representation> {
    let n = shape.size();
    if m <= n || r1 <= n {
        return Err(Error::pre(format!("skew module needs m > n and r1 > n (n = {n}, m = {m}, r1 = {r1})")));
    }
    embed_double(shape, m, r1)?;
    let point = specialized_point(q, m, r1)?;
    let basis = standard_tableaux(shape);
    let gs = seminormal_generators(&basis, n, q, |t, i| {
        let a = glued_content(&t.cells()[i - 1], m, r1);
        let b = glued_content(&t.cells()[i], m, r1);
        Ok(q.pow(b - a))
    })?;
    let rect = Partition::rectangle(m, r1);
    let gamma = rect.with_box_added(r1).expect("a new row is always addable");
    let beside = rect.with_box_added(0).expect("the first row is always addable");
    let denom = full_twist_scalar(&gamma, q);
    let eigen = |nu: &Partition| -(full_twist_scalar(nu, q) / &denom);
    let (on_first, on_second) = (eigen(&beside), eigen(&gamma));
    let t_matrix = (n >= 1).then(|| {
        ScalarMatrix::diagonal(
            basis
                .iter()
                .map(|t| match t.cells()[0].component {
                    Component::First => on_first.clone(),
                    Component::Second => on_second.clone(),
                })
                .collect(),
        )
    });
    Representation::from_matrices(
        RepLabel::Skew {
            shape: shape.clone(),
            m,
            r1,
        },
        basis,
        t_matrix,
        gs,
        point,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{double_partitions, partitions};

    fn r(n: i64, d: i64) -> ExactScalar {
        ExactScalar::new(n, d).unwrap()
    }

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn dp(a: &[usize], b: &[usize]) -> DoublePartition {
        DoublePartition::new(p(a), p(b))
    }

    fn pt(q: i64, big_q: i64) -> ParameterPoint {
        ParameterPoint::new(r(q, 1), r(big_q, 1), 10).unwrap()
    }

    #[test]
    fn one_dimensional_type_a() {
        let point = pt(2, 3);
        let row = type_a_rep(&p(&[2]), &point).unwrap();
        assert_eq!(row.g(1).unwrap(), &ScalarMatrix::scalar(1, r(2, 1)));
        let col = type_a_rep(&p(&[1, 1]), &point).unwrap();
        assert_eq!(col.g(1).unwrap(), &ScalarMatrix::scalar(1, r(-1, 1)));
        assert!(row.t_matrix().is_none());
    }

    #[test]
    fn two_dimensional_blocks_have_forced_spectrum() {
        let point = pt(2, 3);
        let rep = type_a_rep(&p(&[2, 1]), &point).unwrap();
        let g2 = rep.g(2).unwrap();
        assert_eq!(g2.trace(), r(1, 1));
        assert_eq!(g2.determinant().unwrap(), r(-2, 1));

        let rep = type_b_rep(&dp(&[1], &[1]), &point).unwrap();
        let g1 = rep.g(1).unwrap();
        assert_eq!(g1.trace(), r(1, 1));
        assert_eq!(g1.determinant().unwrap(), r(-2, 1));
        assert_eq!(
            rep.t_matrix().unwrap(),
            &ScalarMatrix::diagonal(vec![r(3, 1), r(-1, 1)])
        );
    }

    #[test]
    fn t_eigenvalue_rule() {
        let point = pt(2, 5);
        let a = type_b_rep(&dp(&[1], &[]), &point).unwrap();
        assert_eq!(a.t_matrix().unwrap(), &ScalarMatrix::scalar(1, r(5, 1)));
        let b = type_b_rep(&dp(&[], &[1]), &point).unwrap();
        assert_eq!(b.t_matrix().unwrap(), &ScalarMatrix::scalar(1, r(-1, 1)));
    }

    #[test]
    fn skew_t_eigenvalues() {
        let q = r(2, 1);
        let a = skew_rep(&dp(&[1], &[]), 2, 2, &q).unwrap();
        assert_eq!(a.t_matrix().unwrap(), &ScalarMatrix::scalar(1, r(-16, 1)));
        let b = skew_rep(&dp(&[], &[1]), 2, 2, &q).unwrap();
        assert_eq!(b.t_matrix().unwrap(), &ScalarMatrix::scalar(1, r(-1, 1)));
        assert!(skew_rep(&dp(&[1, 1], &[]), 2, 2, &q).is_err());
        assert!(skew_rep(&dp(&[1], &[]), 1, 2, &q).is_err());
    }

    #[test]
    fn skew_matches_type_b_at_specialisation() {
        for q in [r(2, 1), r(1, 3), r(5, 2)] {
            for n in 0..=3 {
                let (m, r1) = (n + 1, n + 1);
                let point = specialized_point(&q, m, r1).unwrap();
                for shape in double_partitions(n) {
                    let skew = skew_rep(&shape, m, r1, &q).unwrap();
                    let b = type_b_rep(&shape, &point).unwrap();
                    assert_eq!(skew.g_matrices(), b.g_matrices(), "{shape}");
                    assert_eq!(skew.t_matrix(), b.t_matrix(), "{shape}");
                }
            }
        }
    }

    #[test]
    fn full_twist_examples() {
        let q = r(3, 1);
        assert!(full_twist_scalar(&p(&[1]), &q).is_one());
        assert_eq!(full_twist_scalar(&p(&[2]), &q), r(9, 1));
        assert!(full_twist_scalar(&p(&[1, 1]), &q).is_one());
    }

    /// Content-sum form of the twist exponent, `sum c + f(f-1)/2`.
    #[test]
    fn full_twist_matches_content_sum() {
        let q = r(2, 1);
        for f in 1..=7 {
            for nu in partitions(f) {
                let contents: i64 = nu
                    .parts()
                    .iter()
                    .enumerate()
                    .flat_map(|(i, &len)| (0..len).map(move |j| j as i64 - i as i64))
                    .sum();
                let f = f as i64;
                assert_eq!(full_twist_scalar(&nu, &q), q.pow(contents + f * (f - 1) / 2), "{nu}");
            }
        }
    }

    #[test]
    fn tprime_is_cached_product() {
        let point = pt(2, 3);
        let rep = type_b_rep(&dp(&[1], &[1, 1]), &point).unwrap();
        let direct = rep
            .g(2)
            .unwrap()
            .checked_mul(rep.g(1).unwrap())
            .unwrap()
            .checked_mul(rep.t_matrix().unwrap())
            .unwrap()
            .checked_mul(rep.g_inverse(1).unwrap())
            .unwrap()
            .checked_mul(rep.g_inverse(2).unwrap())
            .unwrap();
        assert_eq!(rep.tprime(2).unwrap(), &direct);
        assert_eq!(rep.tprime(2).unwrap(), &direct);
        assert!(rep.tprime(3).is_err());
        let a = type_a_rep(&p(&[2, 1]), &point).unwrap();
        assert!(a.tprime(0).is_err());
    }

    #[test]
    fn inverses_are_inverses() {
        let point = pt(3, 7);
        let rep = type_b_rep(&dp(&[2], &[1]), &point).unwrap();
        for i in 1..3 {
            let prod = rep.g(i).unwrap().checked_mul(rep.g_inverse(i).unwrap()).unwrap();
            assert_eq!(prod, ScalarMatrix::identity(rep.dimension()));
        }
    }

    #[test]
    fn guard_bound_is_checked() {
        let point = ParameterPoint::new(r(2, 1), r(3, 1), 1).unwrap();
        assert!(type_b_rep(&dp(&[1, 1], &[1]), &point).is_err());
    }

    #[test]
    fn corrupted_sizes_rejected() {
        let point = pt(2, 3);
        let rep = type_a_rep(&p(&[2, 1]), &point).unwrap();
        let bad = Representation::from_matrices(
            rep.label().clone(),
            rep.basis().to_vec(),
            None,
            vec![ScalarMatrix::identity(3)],
            point,
        );
        assert!(bad.is_err());
    }
}
