use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::ExactScalar;
use crate::error::{Error, Result};

/// A specialisation `(q, Q)` of the Hecke parameters away from every singular
/// locus the library divides by.
///
/// `q` is a positive rational different from 1, so `q^k = 1` only for `k = 0`.
/// `Q` is nonzero and differs from `-q^s` for every `|s| <= guard_bound`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ParameterPoint {
    q: ExactScalar,
    big_q: ExactScalar,
    guard_bound: usize,
}

/// Guard bound recorded for points with `Q > 0`, where no `-q^s` can collide.
const POSITIVE_Q_GUARD: usize = 64;

impl ParameterPoint {
    pub fn new(q: ExactScalar, big_q: ExactScalar, guard_bound: usize) -> Result<Self> {
        check_q(&q)?;
        if big_q.is_zero() {
            return Err(Error::Inadmissible("Q = 0 is excluded".into()));
        }
        if let Some(s) = excluded_exponent(&q, &big_q) {
            if s.unsigned_abs() as usize <= guard_bound {
                return Err(Error::Inadmissible(format!("Q = -q^{s} is excluded")));
            }
        }
        Ok(ParameterPoint {
            q,
            big_q,
            guard_bound,
        })
    }

    /// A point with `Q = 1`, used for type A (where `Q` plays no role) and
    /// for type D (where the embedding into type B forces `Q = 1`).
    pub fn with_unit_big_q(q: ExactScalar) -> Result<Self> {
        Self::new(q, ExactScalar::one(), POSITIVE_Q_GUARD)
    }

    pub fn q(&self) -> &ExactScalar {
        &self.q
    }

    pub fn big_q(&self) -> &ExactScalar {
        &self.big_q
    }

    pub fn guard_bound(&self) -> usize {
        self.guard_bound
    }

    pub fn qpow(&self, k: i64) -> ExactScalar {
        self.q.pow(k)
    }

    /// The same `q` with a different `Q`, revalidated at the same guard bound.
    pub fn with_big_q(&self, big_q: ExactScalar) -> Result<Self> {
        Self::new(self.q.clone(), big_q, self.guard_bound)
    }
}

fn check_q(q: &ExactScalar) -> Result<()> {
    if !q.is_positive() {
        return Err(Error::Inadmissible(format!("q = {q} must be positive")));
    }
    if q.is_one() {
        return Err(Error::Inadmissible("q = 1 is excluded".into()));
    }
    Ok(())
}

/// The unique integer `s` with `Q = -q^s`, if one exists (`q > 0`, `q != 1`).
fn excluded_exponent(q: &ExactScalar, big_q: &ExactScalar) -> Option<i64> {
    if !big_q.is_negative() {
        return None;
    }
    let target = big_q.abs();
    if target.is_one() {
        return Some(0);
    }
    // Walk q^s monotonically toward |Q|; the walk leaves any bounded interval.
    let step_up = (target > ExactScalar::one()) == (*q > ExactScalar::one());
    let base = if step_up { q.clone() } else { q.inv()? };
    let grows = base > ExactScalar::one();
    let mut power = ExactScalar::one();
    let mut s = 0i64;
    loop {
        power *= &base;
        s += if step_up { 1 } else { -1 };
        if power == target {
            return Some(s);
        }
        if (grows && power > target) || (!grows && power < target) {
            return None;
        }
    }
}

/// `q^k` at the given point; `k` may be negative.
pub fn qpow(point: &ParameterPoint, k: i64) -> ExactScalar {
    point.qpow(k)
}

/// A deterministic pseudo-random admissible point for algebras up to rank
/// `n` and weights with row bounds `r1`, `r2`.
///
/// `q` is a small-height rational in `(1/4, 4)` other than 1. The numerator of
/// `Q` is `2*seed + 3`, so distinct seeds always give distinct points.
pub fn admissible_point(n: usize, r1: usize, r2: usize, seed: u64) -> Result<ParameterPoint> {
    if n == 0 || r1 == 0 || r2 == 0 {
        return Err(Error::pre("admissible_point needs n, r1, r2 >= 1"));
    }
    let guard = n.max(r1 + r2).max(2 * n + 2);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let numer: BigInt = BigInt::from(seed) * 2 + 3;
    loop {
        let q = random_q(&mut rng);
        let denom: i64 = rng.gen_range(1..=7);
        if !numer.gcd(&BigInt::from(denom)).is_one() {
            continue;
        }
        let sign = if rng.gen_bool(0.5) { -1 } else { 1 };
        let big_q = ExactScalar::from_bigints(numer.clone() * sign, BigInt::from(denom))?;
        if let Ok(point) = ParameterPoint::new(q, big_q, guard) {
            return Ok(point);
        }
    }
}

fn random_q(rng: &mut ChaCha8Rng) -> ExactScalar {
    let lo = ExactScalar::new(1, 4).expect("nonzero denominator");
    let hi = ExactScalar::from(4);
    loop {
        let a: i64 = rng.gen_range(1..=9);
        let b: i64 = rng.gen_range(1..=9);
        let q = ExactScalar::new(a, b).expect("nonzero denominator");
        if q > lo && q < hi && !q.is_one() {
            return q;
        }
    }
}

/// `count` distinct admissible values of `q`, drawn deterministically from
/// the same distribution as [`admissible_point`].
pub fn sample_q_values(count: usize, seed: u64) -> Vec<ExactScalar> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9_7f4a_7c15);
    let mut out: Vec<ExactScalar> = Vec::with_capacity(count);
    while out.len() < count {
        let q = random_q(&mut rng);
        if !out.contains(&q) {
            out.push(q);
        }
        if out.len() < count && out.len() >= 40 {
            break;
        }
    }
    out
}

/// The point `(q, -q^(r1+m))` at which type B maps onto a reduced type-A
/// algebra; admissible for every rank below `r1 + m`.
pub fn specialized_point(q: &ExactScalar, m: usize, r1: usize) -> Result<ParameterPoint> {
    check_q(q)?;
    let e = (r1 + m) as i64;
    ParameterPoint::new(q.clone(), -q.pow(e), (r1 + m).saturating_sub(1))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> ExactScalar {
        ExactScalar::new(n, d).unwrap()
    }

    /// Independent post-hoc scan of the guard condition.
    fn scan_ok(p: &ParameterPoint) -> bool {
        let g = p.guard_bound() as i64;
        (-g..=g).all(|s| !(p.big_q() + &p.q().pow(s)).is_zero())
    }

    #[test]
    fn qpow_examples() {
        let p = ParameterPoint::new(r(2, 1), r(5, 1), 4).unwrap();
        assert_eq!(qpow(&p, 3), r(8, 1));
        assert_eq!(qpow(&p, 0), r(1, 1));
        let p = ParameterPoint::new(r(1, 2), r(5, 1), 4).unwrap();
        assert_eq!(qpow(&p, -2), r(4, 1));
    }

    #[test]
    fn rejects_forbidden_q() {
        assert!(ParameterPoint::new(r(1, 1), r(3, 1), 3).is_err());
        assert!(ParameterPoint::new(r(0, 1), r(3, 1), 3).is_err());
        assert!(ParameterPoint::new(r(-2, 1), r(3, 1), 3).is_err());
    }

    #[test]
    fn rejects_guard_collisions() {
        // Q = -q^2 with n = 3.
        let err = ParameterPoint::new(r(2, 1), r(-4, 1), 8).unwrap_err();
        assert_eq!(err, Error::Inadmissible("Q = -q^2 is excluded".into()));
        assert!(ParameterPoint::new(r(2, 1), r(-1, 1), 8).is_err());
        assert!(ParameterPoint::new(r(2, 1), r(-1, 8), 8).is_err());
        assert!(ParameterPoint::new(r(2, 3), r(-27, 8), 3).is_err());
        assert!(ParameterPoint::new(r(2, 1), r(0, 1), 3).is_err());
        // Outside the guard window the collision is allowed.
        assert!(ParameterPoint::new(r(2, 1), r(-16, 1), 3).is_ok());
        assert!(ParameterPoint::new(r(2, 1), r(-3, 1), 30).is_ok());
    }

    #[test]
    fn exponent_search() {
        assert_eq!(excluded_exponent(&r(3, 2), &r(-9, 4)), Some(2));
        assert_eq!(excluded_exponent(&r(3, 2), &r(-4, 9)), Some(-2));
        assert_eq!(excluded_exponent(&r(2, 3), &r(-9, 4)), Some(-2));
        assert_eq!(excluded_exponent(&r(2, 3), &r(-4, 9)), Some(2));
        assert_eq!(excluded_exponent(&r(2, 3), &r(-5, 9)), None);
        assert_eq!(excluded_exponent(&r(2, 3), &r(4, 9)), None);
    }

    #[test]
    fn admissible_points_are_admissible_and_distinct() {
        let mut seen = std::collections::HashSet::new();
        for seed in 0..200 {
            let p = admissible_point(3, 2, 2, seed).unwrap();
            assert!(p.guard_bound() >= 8);
            assert!(scan_ok(&p), "seed {seed}: {p:?}");
            assert!(*p.q() > r(1, 4) && *p.q() < r(4, 1) && !p.q().is_one());
            assert!(seen.insert(p));
        }
        assert_eq!(
            admissible_point(4, 3, 3, 17).unwrap(),
            admissible_point(4, 3, 3, 17).unwrap()
        );
        assert!(admissible_point(0, 1, 1, 0).is_err());
    }

    #[test]
    fn sampled_q_values_are_distinct() {
        let qs = sample_q_values(6, 3);
        assert_eq!(qs.len(), 6);
        for (i, a) in qs.iter().enumerate() {
            assert!(check_q(a).is_ok());
            assert!(qs[i + 1..].iter().all(|b| b != a));
        }
        assert_eq!(sample_q_values(6, 3), qs);
    }

    #[test]
    fn specialized_examples() {
        let p = specialized_point(&r(2, 1), 2, 2).unwrap();
        assert_eq!(p.big_q(), &r(-16, 1));
        assert_eq!(p.guard_bound(), 3);
        assert!(scan_ok(&p));
        let p = specialized_point(&r(1, 2), 3, 3).unwrap();
        assert_eq!(p.big_q(), &r(-1, 64));
        assert!(specialized_point(&r(1, 1), 2, 2).is_err());
        assert!(specialized_point(&r(-1, 2), 2, 2).is_err());
    }
}
