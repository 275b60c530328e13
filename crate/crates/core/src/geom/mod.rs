//! Exact rational geometry: bisector planes, equidistant circles and their
//! rational parameterization, circumcenters, apex points and reflections.

mod circle;
mod conic;
mod triangle;

pub use circle::{circle_param, circle_plane_intersection, Axis, CircleParam, PlaneMeet};
pub use conic::{conic_point, farey_parameters, tangent_parameter, ConicParam, Param};
pub use triangle::{
    apex_points, circumcenter, embed_isosceles, embed_isosceles_on, ApexResult, Circumcircle,
};

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::numtheory::NumError;
use crate::qcore::{QPoint3, QVec3, Rational};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GeomError {
    #[error("points coincide: {0}")]
    Coincident(QPoint3),
    #[error("plane normal is zero")]
    ZeroNormal,
    #[error("mirror vector is zero")]
    ZeroMirror,
    #[error("no point is at squared distance {t} from both foci (radius_sq = {radius_sq})")]
    EmptyCircle { t: Rational, radius_sq: Rational },
    #[error("circle is degenerate (a single point)")]
    DegenerateCircle,
    #[error("point {0} is not on the circle")]
    NotOnCircle(QPoint3),
    #[error("points are collinear")]
    Collinear,
    #[error("parameter makes the conic denominator vanish")]
    VanishingDenominator,
    #[error("the point at infinity needs a nonzero y^2 coefficient")]
    NoPointAtInfinity,
    #[error("expected a positive value, got {0}")]
    NotPositive(Rational),
    #[error("triangle with base {r} and legs {d} is not embeddable: {reason}")]
    NotEmbeddable {
        r: Rational,
        d: Rational,
        reason: String,
    },
    #[error(transparent)]
    Num(#[from] NumError),
}

/// `normal . p = offset`, stored with a primitive integer normal whose first
/// nonzero entry is positive.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Plane {
    pub normal: QVec3,
    pub offset: Rational,
}

impl Plane {
    pub fn new(normal: QVec3, offset: Rational) -> Result<Plane, GeomError> {
        if normal.is_zero() {
            return Err(GeomError::ZeroNormal);
        }
        let comps = normal.components();
        let lcm = comps
            .iter()
            .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
        let ints: Vec<BigInt> = comps.iter().map(|q| (*q * &lcm).to_integer()).collect();
        let content = ints.iter().fold(BigInt::zero(), |acc, k| acc.gcd(k));
        let lead = ints.iter().find(|k| !k.is_zero()).expect("nonzero normal");
        let mut factor = Rational::new(lcm, content);
        if lead.is_negative() {
            factor = -factor;
        }
        Ok(Plane {
            normal: normal.scale(&factor),
            offset: offset * factor,
        })
    }

    pub fn through(point: &QPoint3, normal: QVec3) -> Result<Plane, GeomError> {
        let offset = normal.dot(&point.to_vec());
        Plane::new(normal, offset)
    }

    /// `normal . p - offset`; zero exactly on the plane.
    pub fn eval(&self, p: &QPoint3) -> Rational {
        self.normal.dot(&p.to_vec()) - &self.offset
    }

    pub fn contains(&self, p: &QPoint3) -> bool {
        self.eval(p).is_zero()
    }

    /// Mirror image of `p` across the plane.
    pub fn reflect_point(&self, p: &QPoint3) -> QPoint3 {
        let k = Rational::from_integer(BigInt::from(2)) * self.eval(p) / self.normal.norm_sq();
        p - &self.normal.scale(&k)
    }
}

impl fmt::Display for Plane {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, var) in self.normal.components().into_iter().zip(["x", "y", "z"]) {
            if k.is_zero() {
                continue;
            }
            let mag = k.abs();
            let sign = match (first, k.is_negative()) {
                (true, true) => "-".to_string(),
                (true, false) => String::new(),
                (false, true) => " - ".to_string(),
                (false, false) => " + ".to_string(),
            };
            if mag.is_one() {
                write!(f, "{sign}{var}")?;
            } else {
                write!(f, "{sign}{mag}{var}")?;
            }
            first = false;
        }
        write!(f, " = {}", self.offset)
    }
}

/// A circle of rational 3-space given by its center, squared radius and carrier plane.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RCircle {
    pub center: QPoint3,
    pub radius_sq: Rational,
    pub plane: Plane,
}

impl RCircle {
    pub fn is_degenerate(&self) -> bool {
        self.radius_sq.is_zero()
    }

    pub fn contains(&self, p: &QPoint3) -> bool {
        self.plane.contains(p) && p.dist_sq(&self.center) == self.radius_sq
    }
}

/// The plane of points equidistant from `p` and `q`.
pub fn bisector_plane(p: &QPoint3, q: &QPoint3) -> Result<Plane, GeomError> {
    if p == q {
        return Err(GeomError::Coincident(p.clone()));
    }
    Plane::through(&p.midpoint(q), q - p)
}

/// Points at squared distance `t` from both `p` and `q`.
pub fn equidistant_circle(p: &QPoint3, q: &QPoint3, t: &Rational) -> Result<RCircle, GeomError> {
    if !t.is_positive() {
        return Err(GeomError::NotPositive(t.clone()));
    }
    let plane = bisector_plane(p, q)?;
    let quarter = Rational::new(BigInt::one(), BigInt::from(4));
    let radius_sq = t - p.dist_sq(q) * quarter;
    if radius_sq.is_negative() {
        return Err(GeomError::EmptyCircle {
            t: t.clone(),
            radius_sq,
        });
    }
    Ok(RCircle {
        center: p.midpoint(q),
        radius_sq,
        plane,
    })
}

/// Reflection of `v` across the plane through the origin orthogonal to `mirror`.
pub fn reflect(v: &QVec3, mirror: &QVec3) -> Result<QVec3, GeomError> {
    if mirror.is_zero() {
        return Err(GeomError::ZeroMirror);
    }
    let k = Rational::from_integer(BigInt::from(2)) * v.dot(mirror) / mirror.norm_sq();
    Ok(v - &mirror.scale(&k))
}
