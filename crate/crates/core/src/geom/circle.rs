use num_traits::{Signed, Zero};

use super::conic::{conic_point, ConicParam, Param};
use super::{GeomError, Plane, RCircle};
use crate::qcore::{rational_square_root, QPoint3, QVec3, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Axis {
    X,
    Y,
    Z,
}

impl Axis {
    fn index(self) -> usize {
        match self {
            Axis::X => 0,
            Axis::Y => 1,
            Axis::Z => 2,
        }
    }
}

/// Rational points of a circle as a one-parameter family.
///
/// The eliminated coordinate is `slope_u * u + slope_v * v + intercept`, where
/// `u`, `v` are the two remaining coordinates in axis order.
#[derive(Clone, Debug)]
pub struct CircleParam {
    pub circle: RCircle,
    pub conic: ConicParam,
    pub eliminated_axis: Axis,
    pub slope_u: Rational,
    pub slope_v: Rational,
    pub intercept: Rational,
}

impl CircleParam {
    fn kept(&self) -> [usize; 2] {
        match self.eliminated_axis {
            Axis::X => [1, 2],
            Axis::Y => [0, 2],
            Axis::Z => [0, 1],
        }
    }

    fn lift(&self, u: Rational, v: Rational) -> QPoint3 {
        let w = &self.slope_u * &u + &self.slope_v * &v + &self.intercept;
        let mut coords = [Rational::zero(), Rational::zero(), Rational::zero()];
        let [iu, iv] = self.kept();
        coords[iu] = u;
        coords[iv] = v;
        coords[self.eliminated_axis.index()] = w;
        let [x, y, z] = coords;
        QPoint3::new(x, y, z)
    }

    pub fn point(&self, s: &Param) -> Result<QPoint3, GeomError> {
        let (u, v) = conic_point(&self.conic, s)?;
        Ok(self.lift(u, v))
    }

    /// The parameter whose point is `p`.
    pub fn parameter_of(&self, p: &QPoint3) -> Result<Param, GeomError> {
        if !self.circle.contains(p) {
            return Err(GeomError::NotOnCircle(p.clone()));
        }
        let c = p.coords();
        let [iu, iv] = self.kept();
        Ok(self.conic.parameter_of(c[iu], c[iv]))
    }
}

/// Parameterize `circle` from a rational point on it.
///
/// The coordinate with the largest normal component is eliminated through the
/// plane equation (ties prefer z, then y, then x), and the sphere about the
/// circle's center becomes a conic in the other two.
pub fn circle_param(circle: &RCircle, known: &QPoint3) -> Result<CircleParam, GeomError> {
    if circle.is_degenerate() {
        return Err(GeomError::DegenerateCircle);
    }
    if !circle.contains(known) {
        return Err(GeomError::NotOnCircle(known.clone()));
    }
    let n = circle.plane.normal.components();
    let axis = [Axis::Z, Axis::Y, Axis::X]
        .into_iter()
        .max_by(|p, q| {
            n[p.index()]
                .abs()
                .cmp(&n[q.index()].abs())
                .then(std::cmp::Ordering::Greater)
        })
        .expect("three axes");
    let kept = match axis {
        Axis::X => [1, 2],
        Axis::Y => [0, 2],
        Axis::Z => [0, 1],
    };
    let gamma = n[axis.index()];
    let slope_u = -(n[kept[0]] / gamma);
    let slope_v = -(n[kept[1]] / gamma);
    let intercept = &circle.plane.offset / gamma;
    let m = circle.center.coords();
    let (mu, mv) = (m[kept[0]], m[kept[1]]);
    // (u - mu)^2 + (v - mv)^2 + (A u + B v + C')^2 = radius_sq with C' = C - mw
    let shifted = &intercept - m[axis.index()];
    let one = Rational::from_integer(1.into());
    let two = Rational::from_integer(2.into());
    let coeffs = [
        &one + &slope_u * &slope_u,
        &two * &slope_u * &slope_v,
        &one + &slope_v * &slope_v,
        -(&two * mu) + &two * &slope_u * &shifted,
        -(&two * mv) + &two * &slope_v * &shifted,
        mu * mu + mv * mv + &shifted * &shifted - &circle.radius_sq,
    ];
    let k = known.coords();
    let conic = ConicParam::new(coeffs, (k[kept[0]].clone(), k[kept[1]].clone()))?;
    Ok(CircleParam {
        circle: circle.clone(),
        conic,
        eliminated_axis: axis,
        slope_u,
        slope_v,
        intercept,
    })
}

/// How a circle meets a plane.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PlaneMeet {
    /// Rational intersection points (one when tangent).
    Points(Vec<QPoint3>),
    /// The intersection points exist but are irrational; carries the discriminant.
    Irrational(Rational),
    Disjoint,
    /// The circle lies in the plane.
    Contained,
}

/// Intersection of `circle` with `plane`, solved as a quadratic along the
/// line where the two planes meet.
pub fn circle_plane_intersection(circle: &RCircle, plane: &Plane) -> PlaneMeet {
    let (n1, w1) = (&circle.plane.normal, &circle.plane.offset);
    let (n2, w2) = (&plane.normal, &plane.offset);
    let dir = n1.cross(n2);
    if dir.is_zero() {
        return if plane.contains(&circle.center) {
            PlaneMeet::Contained
        } else {
            PlaneMeet::Disjoint
        };
    }
    let dd = dir.norm_sq();
    let base: QVec3 = &n2.cross(&dir).scale(w1) + &dir.cross(n1).scale(w2);
    let origin = base
        .scale(&(Rational::from_integer(1.into()) / &dd))
        .to_point();
    let offset = &origin - &circle.center;
    let half_b = offset.dot(&dir);
    let disc = &half_b * &half_b - &dd * (offset.norm_sq() - &circle.radius_sq);
    if disc.is_negative() {
        return PlaneMeet::Disjoint;
    }
    let root = match rational_square_root(&disc).expect("nonnegative") {
        Some(r) => r,
        None => return PlaneMeet::Irrational(disc),
    };
    let at = |s: Rational| &origin + &dir.scale(&s);
    let mut points = vec![at((-&half_b - &root) / &dd)];
    if !root.is_zero() {
        points.push(at((-&half_b + &root) / &dd));
    }
    points.sort();
    PlaneMeet::Points(points)
}
