use rayon::prelude::*;

use super::{validate_5cycle, CycleError, VectorPool};
use crate::geom::{
    bisector_plane, circle_param, embed_isosceles_on, equidistant_circle, farey_parameters, Plane,
};
use crate::numtheory::{eq_pair_feasible, in_T, PairVerdict};
use crate::qcore::{QPoint3, Rational};

/// A 5-cycle `x0..x4` with `x2` and the midpoint of `x1, x3` on the bisector
/// plane of `x0, x4`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymCycle {
    points: [QPoint3; 5],
    t: Rational,
    plane: Plane,
}

impl SymCycle {
    /// Validates every defining condition exactly.
    pub fn new(points: [QPoint3; 5], t: &Rational) -> Result<SymCycle, CycleError> {
        validate_5cycle(&points, t)?;
        let plane = bisector_plane(&points[0], &points[4])?;
        if !plane.contains(&points[2]) {
            return Err(CycleError::Invalid(format!("x2 is off the plane {plane}")));
        }
        if !plane.contains(&points[1].midpoint(&points[3])) {
            return Err(CycleError::Invalid(format!(
                "midpoint of x1, x3 is off the plane {plane}"
            )));
        }
        Ok(SymCycle {
            points,
            t: t.clone(),
            plane,
        })
    }

    pub fn points(&self) -> &[QPoint3; 5] {
        &self.points
    }

    pub fn x(&self, i: usize) -> &QPoint3 {
        &self.points[i]
    }

    pub fn t(&self) -> &Rational {
        &self.t
    }

    pub fn plane(&self) -> &Plane {
        &self.plane
    }

    /// `|x2 - x0|^2`, which equals `|x2 - x4|^2`.
    pub fn diagonal_sq(&self) -> Rational {
        self.points[2].dist_sq(&self.points[0])
    }
}

/// Bounds for [`find_symmetric_5cycle`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymSearch {
    /// Largest integer diagonal tried before fractional ones.
    pub d_bound: u64,
    /// How many pool vectors are tried as `x4`.
    pub base_limit: usize,
    /// Farey height of the circle parameters tried for `x1`.
    pub height: u64,
}

impl Default for SymSearch {
    fn default() -> Self {
        SymSearch {
            d_bound: 100,
            base_limit: 4,
            height: 4,
        }
    }
}

/// Mirror-image search: `x0` is the origin, `x4` a pool vector, `x2` an apex
/// over `x0, x4` at squared distance `d`, `x1` a rational point of the circle
/// about `x0, x2`, and `x3` the reflection of `x1` across the bisector plane.
///
/// Candidates are ordered by `(d, x4, x1)` and the first valid one is returned.
pub fn find_symmetric_5cycle(t: u64, pool: &VectorPool, search: &SymSearch) -> Option<SymCycle> {
    if pool.is_empty() || pool.t() != t {
        return None;
    }
    let t_q = Rational::from_integer(t.into());
    let params = farey_parameters(search.height);
    let bases: Vec<QPoint3> = pool
        .vectors()
        .take(search.base_limit)
        .map(|v| v.to_point())
        .collect();
    d_candidates(t, search.d_bound)
        .into_par_iter()
        .find_map_first(|d| {
            if !eq_pair_feasible(t, &d).ok()?.feasible() {
                return None;
            }
            let x0 = QPoint3::origin();
            bases.iter().find_map(|x4| {
                let plane = bisector_plane(&x0, x4).ok()?;
                let x2 = embed_isosceles_on(&x0, x4, &d).ok()?;
                let known = embed_isosceles_on(&x0, &x2, &t_q).ok()?;
                let circle = equidistant_circle(&x0, &x2, &t_q).ok()?;
                let cp = circle_param(&circle, &known).ok()?;
                std::iter::once(Some(known.clone()))
                    .chain(params.iter().map(|s| cp.point(s).ok()))
                    .flatten()
                    .filter(|x1| !plane.contains(x1))
                    .find_map(|x1| {
                        let x3 = plane.reflect_point(&x1);
                        SymCycle::new([x0.clone(), x1, x2.clone(), x3, x4.clone()], &t_q).ok()
                    })
            })
        })
}

/// Largest integer diagonal that can embed: `d < 4t`, so a `d_bound` of this
/// covers every integer candidate.
pub fn integer_d_limit(t: u64) -> u64 {
    (4 * t).saturating_sub(1)
}

/// Largest denominator tried once integer diagonals run out.
pub const D_DENOMINATOR_BOUND: u64 = 12;

/// Diagonals in search order: the integers `1..=d_bound`, then fractions
/// `p/q` in lowest terms with `2 <= q <= D_DENOMINATOR_BOUND` and
/// `t/4 < p/q < 4t`, by `q` then `p`. Outside that interval one of the two
/// triangles is degenerate.
pub fn d_candidates(t: u64, d_bound: u64) -> Vec<Rational> {
    let mut out: Vec<Rational> = (1..=d_bound)
        .map(|d| Rational::from_integer(d.into()))
        .collect();
    for q in 2..=D_DENOMINATOR_BOUND {
        let lo = t * q / 4 + 1;
        let hi = 4 * t * q;
        out.extend(
            (lo..hi)
                .filter(|p| num_integer::gcd(*p, q) == 1)
                .map(|p| Rational::new(p.into(), q.into())),
        );
    }
    out
}

/// The first admissible diagonal and its verdicts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DChoice {
    pub d: Rational,
    pub verdict: PairVerdict,
}

/// First diagonal in [`d_candidates`] order for which both isosceles
/// triangles of a symmetric 5-cycle embed. An integer answer is the smallest
/// admissible integer.
pub fn scan_d(t: u64, d_bound: u64) -> Result<Option<DChoice>, CycleError> {
    if !in_T(t) {
        return Err(CycleError::NotInT(t));
    }
    // leftmost hit wins, so the answer does not depend on the thread count
    Ok(d_candidates(t, d_bound)
        .into_par_iter()
        .map(|d| eq_pair_feasible(t, &d).map(|verdict| DChoice { d, verdict }))
        .find_map_first(|r| match r {
            Ok(c) if !c.verdict.feasible() => None,
            other => Some(other),
        })
        .transpose()?)
}
