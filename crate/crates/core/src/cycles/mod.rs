//! Rational vectors of a fixed squared norm, 5-cycle search by meeting in the
//! middle, and symmetric 5-cycles.

mod symmetric;

pub use symmetric::{
    d_candidates, find_symmetric_5cycle, integer_d_limit, scan_d, DChoice, SymCycle, SymSearch,
    D_DENOMINATOR_BOUND,
};

use std::collections::{BTreeSet, HashMap};

use num_integer::{Integer, Roots};
use rayon::prelude::*;
use thiserror::Error;

use crate::geom::GeomError;
use crate::numtheory::{in_T, NumError};
use crate::qcore::{QPoint3, QVec3, Rational};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CycleError {
    #[error("denominator set is empty")]
    EmptyDenominators,
    #[error("denominators must be positive")]
    ZeroDenominator,
    #[error("{0} is not in T")]
    NotInT(u64),
    #[error("bound too large: {0}")]
    TooLarge(String),
    #[error("not a valid cycle: {0}")]
    Invalid(String),
    #[error(transparent)]
    Num(#[from] NumError),
    #[error(transparent)]
    Geom(#[from] GeomError),
}

/// Rational vectors of squared norm `t` whose reduced denominators lie in a
/// fixed set and whose numerators are at most `height_bound` in size.
///
/// Members are held as integer triples over the common denominator `scale`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VectorPool {
    t: u64,
    denominators: BTreeSet<u64>,
    height_bound: u64,
    scale: i64,
    scaled: Vec<[i64; 3]>,
}

impl VectorPool {
    pub fn t(&self) -> u64 {
        self.t
    }

    pub fn denominators(&self) -> &BTreeSet<u64> {
        &self.denominators
    }

    pub fn height_bound(&self) -> u64 {
        self.height_bound
    }

    pub fn len(&self) -> usize {
        self.scaled.len()
    }

    pub fn is_empty(&self) -> bool {
        self.scaled.is_empty()
    }

    fn to_qvec(&self, v: &[i64; 3]) -> QVec3 {
        let q = |x: i64| Rational::new(x.into(), self.scale.into());
        QVec3::new(q(v[0]), q(v[1]), q(v[2]))
    }

    pub fn vector(&self, i: usize) -> QVec3 {
        self.to_qvec(&self.scaled[i])
    }

    pub fn vectors(&self) -> impl Iterator<Item = QVec3> + '_ {
        self.scaled.iter().map(|v| self.to_qvec(v))
    }
}

/// All `(a/k, b/k, c/k)` in lowest terms with `a^2 + b^2 + c^2 = t k^2`,
/// `k` in `denominators` and `|a|, |b|, |c| <= height_bound`, ordered by
/// `(k, a, b, c)`.
///
/// Even `k` contributes nothing when `t = 2 (mod 4)`, since a primitive
/// solution would need `a^2 + b^2 + c^2 = 0 (mod 8)` with some entry odd.
pub fn gen_vectors(
    t: u64,
    denominators: &[u64],
    height_bound: u64,
) -> Result<VectorPool, CycleError> {
    if !in_T(t) {
        return Err(CycleError::NotInT(t));
    }
    if denominators.is_empty() {
        return Err(CycleError::EmptyDenominators);
    }
    if denominators.contains(&0) {
        return Err(CycleError::ZeroDenominator);
    }
    let denominators: BTreeSet<u64> = denominators.iter().copied().collect();
    let scale = denominators.iter().fold(1u64, |acc, k| acc.lcm(k));
    if scale > 1 << 20 || height_bound > 1 << 20 {
        return Err(CycleError::TooLarge(format!(
            "denominator lcm {scale}, height {height_bound}"
        )));
    }
    let h = height_bound as i64;
    let mut scaled = Vec::new();
    for &k in &denominators {
        if k % 2 == 0 && t % 4 == 2 {
            continue;
        }
        let target = (t as i128) * (k as i128).pow(2);
        let ki = k as i64;
        let factor = (scale / k) as i64;
        for a in -h..=h {
            for b in -h..=h {
                let rest = target - (a as i128).pow(2) - (b as i128).pow(2);
                if rest < 0 {
                    continue;
                }
                let c = rest.sqrt();
                if c * c != rest || c > h as i128 {
                    continue;
                }
                let c = c as i64;
                let mut cs = vec![-c, c];
                cs.dedup();
                for c in cs {
                    if a.gcd(&b).gcd(&c).gcd(&ki) == 1 {
                        scaled.push([a * factor, b * factor, c * factor]);
                    }
                }
            }
        }
    }
    Ok(VectorPool {
        t,
        denominators,
        height_bound,
        scale: scale as i64,
        scaled,
    })
}

fn add(u: &[i64; 3], v: &[i64; 3]) -> [i64; 3] {
    [u[0] + v[0], u[1] + v[1], u[2] + v[2]]
}

fn cross_is_zero(u: &[i64; 3], v: &[i64; 3]) -> bool {
    u[1] * v[2] == u[2] * v[1] && u[2] * v[0] == u[0] * v[2] && u[0] * v[1] == u[1] * v[0]
}

/// Closed walk with distinct vertices and no straight or reversing turn.
fn valid_walk(steps: [&[i64; 3]; 5]) -> bool {
    let turns_ok = (0..5).all(|i| !cross_is_zero(steps[i], steps[(i + 1) % 5]));
    if !turns_ok {
        return false;
    }
    let mut points = [[0i64; 3]; 5];
    for i in 1..5 {
        points[i] = add(&points[i - 1], steps[i - 1]);
    }
    (0..5).all(|i| (i + 1..5).all(|j| points[i] != points[j]))
}

/// A 5-cycle through the origin whose edges are pool vectors.
///
/// The walk `e0, ..., e4` is the lexicographically first index tuple with
/// `e0 + e1 + e2 = -(e3 + e4)`, found by probing a table of pair sums.
pub fn find_5cycle(pool: &VectorPool) -> Option<[QPoint3; 5]> {
    let v = &pool.scaled;
    let n = v.len();
    if n == 0 {
        return None;
    }
    let mut pairs: HashMap<[i64; 3], Vec<(u32, u32)>> = HashMap::new();
    for i in 0..n {
        for j in 0..n {
            pairs
                .entry(add(&v[i], &v[j]))
                .or_default()
                .push((i as u32, j as u32));
        }
    }
    let found = (0..n).into_par_iter().find_map_first(|i0| {
        for i1 in 0..n {
            let s01 = add(&v[i0], &v[i1]);
            for i2 in 0..n {
                let s = add(&s01, &v[i2]);
                let Some(list) = pairs.get(&[-s[0], -s[1], -s[2]]) else {
                    continue;
                };
                for &(i3, i4) in list {
                    let steps = [&v[i0], &v[i1], &v[i2], &v[i3 as usize], &v[i4 as usize]];
                    if valid_walk(steps) {
                        return Some([i0, i1, i2, i3 as usize, i4 as usize]);
                    }
                }
            }
        }
        None
    })?;
    let mut points = Vec::with_capacity(5);
    let mut at = QPoint3::origin();
    for &i in &found {
        points.push(at.clone());
        at = &at + &pool.vector(i);
    }
    debug_assert_eq!(at, QPoint3::origin());
    Some(points.try_into().expect("five points"))
}

/// Checks that `points` form a 5-cycle at squared distance `t` with distinct
/// vertices and no collinear consecutive triple.
pub fn validate_5cycle(points: &[QPoint3], t: &Rational) -> Result<(), CycleError> {
    if points.len() != 5 {
        return Err(CycleError::Invalid(format!(
            "{} points given",
            points.len()
        )));
    }
    for i in 0..5 {
        let (p, q, r) = (&points[i], &points[(i + 1) % 5], &points[(i + 2) % 5]);
        let d = p.dist_sq(q);
        if &d != t {
            return Err(CycleError::Invalid(format!(
                "|x{i} x{}|^2 = {d}, expected {t}",
                (i + 1) % 5
            )));
        }
        if (q - p).cross(&(r - q)).is_zero() {
            return Err(CycleError::Invalid(format!(
                "x{i}, x{}, x{} are collinear",
                (i + 1) % 5,
                (i + 2) % 5
            )));
        }
    }
    for i in 0..5 {
        for j in i + 1..5 {
            if points[i] == points[j] {
                return Err(CycleError::Invalid(format!("x{i} = x{j}")));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t_rat(t: u64) -> Rational {
        Rational::from_integer(t.into())
    }

    #[test]
    fn pool_examples() {
        let pool = gen_vectors(22, &[1], 10).unwrap();
        assert!(pool.vectors().any(|v| v == QVec3::from_ints(3, 3, 2)));
        assert!(pool.vectors().any(|v| v == QVec3::from_ints(-2, 3, -3)));
        let third = |a: i64, b: i64, c: i64| {
            QVec3::new(
                Rational::new(a.into(), 3.into()),
                Rational::new(b.into(), 3.into()),
                Rational::new(c.into(), 3.into()),
            )
        };
        let pool = gen_vectors(22, &[3], 20).unwrap();
        assert!(pool.vectors().any(|v| v == third(14, 1, 1)));
        assert!(pool.vectors().all(|v| v.norm_sq() == t_rat(22)));
        assert!(gen_vectors(22, &[2], 20).unwrap().is_empty());
        assert_eq!(gen_vectors(22, &[], 20), Err(CycleError::EmptyDenominators));
        assert_eq!(gen_vectors(21, &[1], 20), Err(CycleError::NotInT(21)));
    }

    #[test]
    fn even_denominators_are_empty_by_exhaustion() {
        // no primitive a^2 + b^2 + c^2 = 22 * 4 with gcd(a, b, c, 2) = 1
        let mut hits = 0;
        for a in -10i64..=10 {
            for b in -10i64..=10 {
                for c in -10i64..=10 {
                    if a * a + b * b + c * c == 88 && [a, b, c].iter().any(|x| x % 2 != 0) {
                        hits += 1;
                    }
                }
            }
        }
        assert_eq!(hits, 0);
    }

    #[test]
    fn pool_matches_brute_force() {
        for t in [10u64, 22, 30] {
            let pool = gen_vectors(t, &[1, 3], 12).unwrap();
            let got: BTreeSet<QVec3> = pool.vectors().collect();
            assert_eq!(got.len(), pool.len());
            let mut expected = BTreeSet::new();
            for k in [1i64, 3] {
                for a in -12i64..=12 {
                    for b in -12i64..=12 {
                        for c in -12i64..=12 {
                            if a * a + b * b + c * c == t as i64 * k * k
                                && a.gcd(&b).gcd(&c).gcd(&k) == 1
                            {
                                let q = |x: i64| Rational::new(x.into(), k.into());
                                expected.insert(QVec3::new(q(a), q(b), q(c)));
                            }
                        }
                    }
                }
            }
            assert_eq!(got, expected, "t={t}");
        }
    }

    #[test]
    fn finds_five_cycles() {
        for t in [10u64, 22, 30, 34] {
            let pool = gen_vectors(t, &[1, 3], 20).unwrap();
            let cycle = find_5cycle(&pool).expect("cycle");
            validate_5cycle(&cycle, &t_rat(t)).unwrap();
            assert_eq!(cycle[0], QPoint3::origin());
        }
        let tiny = gen_vectors(22, &[1], 1).unwrap();
        assert!(tiny.is_empty());
        assert!(find_5cycle(&tiny).is_none());
    }

    #[test]
    fn known_cycles_validate() {
        let pts = |list: &[&str]| {
            list.iter()
                .map(|s| QPoint3::parse(s).unwrap())
                .collect::<Vec<_>>()
        };
        let seed = pts(&["0 0 0", "14/3 1/3 1/3", "19/3 -1/3 14/3", "6 0 0", "3 3 2"]);
        validate_5cycle(&seed, &t_rat(22)).unwrap();
        let t30 = pts(&["0 0 0", "-1 -2 5", "1 3 4", "16/3 8/15 94/15", "5 2 1"]);
        validate_5cycle(&t30, &t_rat(30)).unwrap();
        let bad = pts(&["0 0 0", "14/3 1/3 1/3", "19/3 -1/3 14/3", "3 3 2", "6 0 0"]);
        assert!(validate_5cycle(&bad, &t_rat(22)).is_err());
    }
}
