use num_traits::{Signed, Zero};

use super::GeomError;
use crate::numtheory::{isosceles_form, legendre_solution, rational_three_squares, NumError};
use crate::qcore::{rational_square_root, QPoint3, QVec3, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Circumcircle {
    pub center: QPoint3,
    pub radius_sq: Rational,
    /// `(p2 - p1) x (p3 - p1)`.
    pub normal: QVec3,
}

pub fn circumcenter(p1: &QPoint3, p2: &QPoint3, p3: &QPoint3) -> Result<Circumcircle, GeomError> {
    let a = p2 - p1;
    let b = p3 - p1;
    let normal = a.cross(&b);
    if normal.is_zero() {
        return Err(GeomError::Collinear);
    }
    let nn = normal.norm_sq();
    let two = Rational::from_integer(2.into());
    let shift = (&b.cross(&normal).scale(&a.norm_sq()) + &normal.cross(&a).scale(&b.norm_sq()))
        .scale(&(Rational::from_integer(1.into()) / (two * nn)));
    let center = p1 + &shift;
    let radius_sq = shift.norm_sq();
    Ok(Circumcircle {
        center,
        radius_sq,
        normal,
    })
}

/// Points at squared distance `t` from three given points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ApexResult {
    /// One point when the apex lies in the triangle's plane, else two.
    Points(Vec<QPoint3>),
    /// Circumradius exceeds `sqrt(t)`.
    TooWide { radius_sq: Rational },
    /// The offset along the normal is irrational.
    Irrational { offset_sq: Rational },
}

impl ApexResult {
    pub fn points(&self) -> &[QPoint3] {
        match self {
            ApexResult::Points(p) => p,
            _ => &[],
        }
    }
}

pub fn apex_points(
    p1: &QPoint3,
    p2: &QPoint3,
    p3: &QPoint3,
    t: &Rational,
) -> Result<ApexResult, GeomError> {
    if !t.is_positive() {
        return Err(GeomError::NotPositive(t.clone()));
    }
    let cc = circumcenter(p1, p2, p3)?;
    let gap = t - &cc.radius_sq;
    if gap.is_negative() {
        return Ok(ApexResult::TooWide {
            radius_sq: cc.radius_sq,
        });
    }
    let offset_sq = gap / cc.normal.norm_sq();
    let s = match rational_square_root(&offset_sq).expect("nonnegative") {
        Some(s) => s,
        None => return Ok(ApexResult::Irrational { offset_sq }),
    };
    if s.is_zero() {
        return Ok(ApexResult::Points(vec![cc.center]));
    }
    let step = cc.normal.scale(&s);
    let mut points = vec![&cc.center - &step, &cc.center + &step];
    points.sort();
    Ok(ApexResult::Points(points))
}

/// A rational point at squared distance `d` from both `p1` and `p2`.
///
/// With `v = p2 - p1 = (a, b, c)` and `a, b` not both zero, the vectors
/// `(b, -a, 0)` and `(ac, bc, -(a^2 + b^2))` span the bisector plane, and a
/// solution `(x, y, z)` of `x^2 + r y^2 = (4d - r)(a^2 + b^2) z^2` gives
/// their coefficients `x / (2 (a^2 + b^2) z)` and `y / (2 (a^2 + b^2) z)`.
pub fn embed_isosceles_on(p1: &QPoint3, p2: &QPoint3, d: &Rational) -> Result<QPoint3, GeomError> {
    let v = p2 - p1;
    if v.is_zero() {
        return Err(GeomError::Coincident(p1.clone()));
    }
    // rotate coordinates so the first two entries of v are not both zero
    let [x0, y0, z0] = v.components();
    let rotated = x0.is_zero() && y0.is_zero();
    let v_work = if rotated {
        QVec3::new(z0.clone(), x0.clone(), y0.clone())
    } else {
        v.clone()
    };
    let r = v.norm_sq();
    let four = Rational::from_integer(4.into());
    if !(&four * d - &r).is_positive() {
        return Err(GeomError::NotEmbeddable {
            r,
            d: d.clone(),
            reason: "degenerate triangle: 4d - r <= 0".into(),
        });
    }
    let form = isosceles_form(&r, d, &v_work)?;
    let (x, y, z) = match legendre_solution(&form) {
        Ok(sol) => sol,
        Err(NumError::Unsolvable(reason)) => {
            return Err(GeomError::NotEmbeddable {
                r,
                d: d.clone(),
                reason,
            })
        }
        Err(e) => return Err(e.into()),
    };
    let [a, b, c] = v_work.components();
    let planar = a * a + b * b;
    let u1 = QVec3::new(b.clone(), -a.clone(), Rational::zero());
    let u2 = QVec3::new(a * c, b * c, -planar.clone());
    let denom = Rational::from_integer(2.into()) * &planar * Rational::from_integer(z);
    let alpha = Rational::from_integer(x) / &denom;
    let beta = Rational::from_integer(y) / &denom;
    let half = Rational::new(1.into(), 2.into());
    let offset = &(&v_work.scale(&half) + &u1.scale(&alpha)) + &u2.scale(&beta);
    let offset = if rotated {
        let [p, q, s] = offset.components();
        QVec3::new(q.clone(), s.clone(), p.clone())
    } else {
        offset
    };
    let apex = p1 + &offset;
    debug_assert_eq!(apex.dist_sq(p1), *d);
    debug_assert_eq!(apex.dist_sq(p2), *d);
    Ok(apex)
}

/// A rational triangle `(p1, p2, apex)` with base `sqrt(r)` and legs `sqrt(d)`,
/// based at the origin along the canonical three-squares vector of `r`.
pub fn embed_isosceles(
    r: &Rational,
    d: &Rational,
) -> Result<(QPoint3, QPoint3, QPoint3), GeomError> {
    if !r.is_positive() {
        return Err(GeomError::NotPositive(r.clone()));
    }
    let base =
        rational_three_squares(r).ok_or_else(|| NumError::NotRepresentable(r.to_string()))?;
    let p1 = QPoint3::origin();
    let p2 = base.to_point();
    let apex = embed_isosceles_on(&p1, &p2, d)?;
    Ok((p1, p2, apex))
}
