use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::Zero;

use super::rational::{parse_rational, Rational};
use super::QError;

/// A point of rational 3-space.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QPoint3 {
    pub x: Rational,
    pub y: Rational,
    pub z: Rational,
}

/// A displacement between two points of rational 3-space.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QVec3 {
    pub dx: Rational,
    pub dy: Rational,
    pub dz: Rational,
}

impl QPoint3 {
    pub fn new(x: Rational, y: Rational, z: Rational) -> Self {
        QPoint3 { x, y, z }
    }

    pub fn origin() -> Self {
        QPoint3::new(Rational::zero(), Rational::zero(), Rational::zero())
    }

    pub fn from_ints(x: i64, y: i64, z: i64) -> Self {
        QPoint3::new(int(x), int(y), int(z))
    }

    pub fn coords(&self) -> [&Rational; 3] {
        [&self.x, &self.y, &self.z]
    }

    /// Position vector relative to the origin.
    pub fn to_vec(&self) -> QVec3 {
        QVec3::new(self.x.clone(), self.y.clone(), self.z.clone())
    }

    pub fn dist_sq(&self, other: &QPoint3) -> Rational {
        (self - other).norm_sq()
    }

    pub fn midpoint(&self, other: &QPoint3) -> QPoint3 {
        let half = Rational::new(BigInt::from(1), BigInt::from(2));
        QPoint3::new(
            (&self.x + &other.x) * &half,
            (&self.y + &other.y) * &half,
            (&self.z + &other.z) * &half,
        )
    }

    /// Integer coordinates, when every coordinate is an integer that fits in `i64`.
    pub fn to_ints(&self) -> Option<[i64; 3]> {
        Some([
            super::to_i64(&self.x)?,
            super::to_i64(&self.y)?,
            super::to_i64(&self.z)?,
        ])
    }

    /// Point syntax: three rationals separated by single spaces.
    pub fn parse(text: &str) -> Result<QPoint3, QError> {
        let parts: Vec<&str> = text.split(' ').collect();
        if parts.len() != 3 {
            return Err(QError::Parse {
                text: text.to_string(),
                column: 1,
                reason: "expected three space-separated rationals",
            });
        }
        let mut column = 1;
        let mut coords = Vec::with_capacity(3);
        for part in parts {
            let value = parse_rational(part).map_err(|e| match e {
                QError::Parse {
                    column: c, reason, ..
                } => QError::Parse {
                    text: text.to_string(),
                    column: column + c - 1,
                    reason,
                },
                other => other,
            })?;
            coords.push(value);
            column += part.len() + 1;
        }
        let z = coords.pop().unwrap();
        let y = coords.pop().unwrap();
        let x = coords.pop().unwrap();
        Ok(QPoint3::new(x, y, z))
    }
}

impl fmt::Display for QPoint3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {}", self.x, self.y, self.z)
    }
}

impl QVec3 {
    pub fn new(dx: Rational, dy: Rational, dz: Rational) -> Self {
        QVec3 { dx, dy, dz }
    }

    pub fn zero() -> Self {
        QVec3::new(Rational::zero(), Rational::zero(), Rational::zero())
    }

    pub fn from_ints(x: i64, y: i64, z: i64) -> Self {
        QVec3::new(int(x), int(y), int(z))
    }

    pub fn is_zero(&self) -> bool {
        self.dx.is_zero() && self.dy.is_zero() && self.dz.is_zero()
    }

    pub fn components(&self) -> [&Rational; 3] {
        [&self.dx, &self.dy, &self.dz]
    }

    pub fn norm_sq(&self) -> Rational {
        self.dot(self)
    }

    pub fn dot(&self, other: &QVec3) -> Rational {
        &self.dx * &other.dx + &self.dy * &other.dy + &self.dz * &other.dz
    }

    pub fn cross(&self, other: &QVec3) -> QVec3 {
        QVec3::new(
            &self.dy * &other.dz - &self.dz * &other.dy,
            &self.dz * &other.dx - &self.dx * &other.dz,
            &self.dx * &other.dy - &self.dy * &other.dx,
        )
    }

    pub fn scale(&self, k: &Rational) -> QVec3 {
        QVec3::new(&self.dx * k, &self.dy * k, &self.dz * k)
    }

    /// The endpoint of this vector placed at the origin.
    pub fn to_point(&self) -> QPoint3 {
        QPoint3::new(self.dx.clone(), self.dy.clone(), self.dz.clone())
    }
}

impl fmt::Display for QVec3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.dx, self.dy, self.dz)
    }
}

/// Squared Euclidean norm, exact.
pub fn norm_sq(v: &QVec3) -> Rational {
    v.norm_sq()
}

pub fn dist_sq(p: &QPoint3, q: &QPoint3) -> Rational {
    p.dist_sq(q)
}

fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

impl<'a> Sub<&'a QPoint3> for &'a QPoint3 {
    type Output = QVec3;
    fn sub(self, rhs: &QPoint3) -> QVec3 {
        QVec3::new(&self.x - &rhs.x, &self.y - &rhs.y, &self.z - &rhs.z)
    }
}

impl<'a> Add<&'a QVec3> for &'a QPoint3 {
    type Output = QPoint3;
    fn add(self, rhs: &QVec3) -> QPoint3 {
        QPoint3::new(&self.x + &rhs.dx, &self.y + &rhs.dy, &self.z + &rhs.dz)
    }
}

impl<'a> Sub<&'a QVec3> for &'a QPoint3 {
    type Output = QPoint3;
    fn sub(self, rhs: &QVec3) -> QPoint3 {
        QPoint3::new(&self.x - &rhs.dx, &self.y - &rhs.dy, &self.z - &rhs.dz)
    }
}

impl<'a> Add<&'a QVec3> for &'a QVec3 {
    type Output = QVec3;
    fn add(self, rhs: &QVec3) -> QVec3 {
        QVec3::new(&self.dx + &rhs.dx, &self.dy + &rhs.dy, &self.dz + &rhs.dz)
    }
}

impl<'a> Sub<&'a QVec3> for &'a QVec3 {
    type Output = QVec3;
    fn sub(self, rhs: &QVec3) -> QVec3 {
        QVec3::new(&self.dx - &rhs.dx, &self.dy - &rhs.dy, &self.dz - &rhs.dz)
    }
}

impl<'a> Mul<&'a Rational> for &'a QVec3 {
    type Output = QVec3;
    fn mul(self, k: &Rational) -> QVec3 {
        self.scale(k)
    }
}

impl Neg for &QVec3 {
    type Output = QVec3;
    fn neg(self) -> QVec3 {
        QVec3::new(-&self.dx, -&self.dy, -&self.dz)
    }
}

impl Add for QVec3 {
    type Output = QVec3;
    fn add(self, rhs: QVec3) -> QVec3 {
        &self + &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qcore::parse_rational;
    use proptest::prelude::*;

    fn q(s: &str) -> Rational {
        parse_rational(s).unwrap()
    }

    fn v(a: &str, b: &str, c: &str) -> QVec3 {
        QVec3::new(q(a), q(b), q(c))
    }

    #[test]
    fn norms() {
        assert_eq!(v("14/3", "1/3", "1/3").norm_sq(), q("22"));
        assert_eq!(QVec3::zero().norm_sq(), q("0"));
        assert_eq!(v("19/3", "38/15", "19/15").norm_sq(), q("722/15"));
    }

    #[test]
    fn distances() {
        let o = QPoint3::origin();
        assert_eq!(o.dist_sq(&QPoint3::from_ints(3, 3, 2)), q("22"));
        let a = QPoint3::from_ints(1, 3, 4);
        let b = QPoint3::from_ints(-1, -2, 5);
        assert_eq!(b.dist_sq(&QPoint3::from_ints(0, 0, 0)), q("30"));
        assert_eq!(a.dist_sq(&a), q("0"));
        assert_eq!(a.dist_sq(&b), b.dist_sq(&a));
    }

    #[test]
    fn point_syntax() {
        let p = QPoint3::parse("13/6 -11/15 169/30").unwrap();
        assert_eq!(p.to_string(), "13/6 -11/15 169/30");
        assert!(QPoint3::parse("1 2").is_err());
        assert!(QPoint3::parse("1  2 3").is_err());
        match QPoint3::parse("1 2 3/x") {
            Err(QError::Parse { column, .. }) => assert_eq!(column, 7),
            other => panic!("{other:?}"),
        }
    }

    fn arb_q() -> impl Strategy<Value = Rational> {
        (-500i64..500, 1i64..60).prop_map(|(n, d)| Rational::new(n.into(), d.into()))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn norm_scales_quadratically(k in arb_q(), a in arb_q(), b in arb_q(), c in arb_q()) {
            let w = QVec3::new(a, b, c);
            prop_assert_eq!(w.scale(&k).norm_sq(), &k * &k * w.norm_sq());
        }
    }
}
