//! Rational points on a plane conic `a x^2 + b xy + c y^2 + d x + e y + f = 0`
//! from one known rational point, by the pencil of lines through that point.

use std::fmt;

use num_traits::Zero;

use super::GeomError;
use crate::qcore::Rational;

/// A slope through the base point, or the vertical line.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Param {
    Finite(Rational),
    Infinity,
}

impl fmt::Display for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Param::Finite(s) => write!(f, "{s}"),
            Param::Infinity => write!(f, "inf"),
        }
    }
}

impl From<Rational> for Param {
    fn from(s: Rational) -> Self {
        Param::Finite(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConicParam {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
    pub d: Rational,
    pub e: Rational,
    pub f: Rational,
    pub base: (Rational, Rational),
}

impl ConicParam {
    pub fn new(coeffs: [Rational; 6], base: (Rational, Rational)) -> Result<ConicParam, GeomError> {
        let [a, b, c, d, e, f] = coeffs;
        let conic = ConicParam {
            a,
            b,
            c,
            d,
            e,
            f,
            base,
        };
        if !conic.eval(&conic.base.0, &conic.base.1).is_zero() {
            return Err(GeomError::NotOnCircle(crate::qcore::QPoint3::new(
                conic.base.0.clone(),
                conic.base.1.clone(),
                Rational::zero(),
            )));
        }
        Ok(conic)
    }

    pub fn eval(&self, x: &Rational, y: &Rational) -> Rational {
        &self.a * x * x + &self.b * x * y + &self.c * y * y + &self.d * x + &self.e * y + &self.f
    }
}

/// The point of the conic on the line through the base point with slope `s`.
pub fn conic_point(cp: &ConicParam, s: &Param) -> Result<(Rational, Rational), GeomError> {
    let (xi, eta) = &cp.base;
    let (a, b, c, d, e) = (&cp.a, &cp.b, &cp.c, &cp.d, &cp.e);
    match s {
        Param::Infinity => {
            if c.is_zero() {
                return Err(GeomError::NoPointAtInfinity);
            }
            Ok((xi.clone(), (-(b * xi) - c * eta - e) / c))
        }
        Param::Finite(s) => {
            let denom = a + b * s + c * s * s;
            if denom.is_zero() {
                return Err(GeomError::VanishingDenominator);
            }
            let two = Rational::from_integer(2.into());
            let x = -d - a * xi - b * eta - (&two * c * eta + e) * s + c * xi * s * s;
            let y = a * eta - (&two * a * xi + d) * s - (b * xi + c * eta + e) * s * s;
            Ok((x / &denom, y / &denom))
        }
    }
}

/// The slope of the tangent at the base point, which is the parameter that
/// returns the base point itself.
pub fn tangent_parameter(cp: &ConicParam) -> Param {
    let (xi, eta) = &cp.base;
    let two = Rational::from_integer(2.into());
    let gx = &two * &cp.a * xi + &cp.b * eta + &cp.d;
    let gy = &cp.b * xi + &two * &cp.c * eta + &cp.e;
    if gy.is_zero() {
        Param::Infinity
    } else {
        Param::Finite(-gx / gy)
    }
}

impl ConicParam {
    /// The parameter producing `(x, y)`, assumed to lie on the conic.
    pub fn parameter_of(&self, x: &Rational, y: &Rational) -> Param {
        let (xi, eta) = &self.base;
        if x == xi && y == eta {
            return tangent_parameter(self);
        }
        if x == xi {
            Param::Infinity
        } else {
            Param::Finite((y - eta) / (x - xi))
        }
    }
}

/// Slopes `p/q` in lowest terms with `|p|, q <= height`, in shells of growing
/// `max(|p|, q)` and by value inside a shell: `0`, then `-1, 1, inf`, then
/// `-2, -1/2, 1/2, 2`, and so on. Raising `height` only appends.
pub fn farey_parameters(height: u64) -> Vec<Param> {
    let mut out = vec![Param::Finite(Rational::zero())];
    for h in 1..=height as i64 {
        let mut shell: Vec<Rational> = Vec::new();
        for q in 1..=h {
            for p in -h..=h {
                if (p.abs() == h || q == h) && p != 0 && num_integer::gcd(p, q) == 1 {
                    shell.push(Rational::new(p.into(), q.into()));
                }
            }
        }
        shell.sort();
        out.extend(shell.into_iter().map(Param::Finite));
        if h == 1 {
            out.push(Param::Infinity);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qcore::parse_rational;
    use proptest::prelude::*;

    fn q(s: &str) -> Rational {
        parse_rational(s).unwrap()
    }

    fn unit_circle() -> ConicParam {
        ConicParam::new(
            [q("1"), q("0"), q("1"), q("0"), q("0"), q("-1")],
            (q("-1"), q("0")),
        )
        .unwrap()
    }

    #[test]
    fn unit_circle_points() {
        let cp = unit_circle();
        assert_eq!(
            conic_point(&cp, &Param::Finite(q("1"))).unwrap(),
            (q("0"), q("1"))
        );
        assert_eq!(
            conic_point(&cp, &Param::Finite(q("0"))).unwrap(),
            (q("1"), q("0"))
        );
        assert_eq!(
            conic_point(&cp, &Param::Infinity).unwrap(),
            (q("-1"), q("0"))
        );
        assert_eq!(cp.parameter_of(&q("0"), &q("1")), Param::Finite(q("1")));
        assert_eq!(cp.parameter_of(&q("-1"), &q("0")), Param::Infinity);
    }

    #[test]
    fn farey_order() {
        let shown: Vec<String> = farey_parameters(2).iter().map(|p| p.to_string()).collect();
        assert_eq!(shown, ["0", "-1", "1", "inf", "-2", "-1/2", "1/2", "2"]);
        let long = farey_parameters(12);
        assert_eq!(&long[..8], &farey_parameters(2)[..]);
        let distinct: std::collections::BTreeSet<_> = long.iter().collect();
        assert_eq!(distinct.len(), long.len());
    }

    #[test]
    fn rejects_off_conic_base() {
        let bad = ConicParam::new(
            [q("1"), q("0"), q("1"), q("0"), q("0"), q("-1")],
            (q("1"), q("1")),
        );
        assert!(bad.is_err());
    }

    #[test]
    fn vanishing_denominator() {
        // hyperbola xy = 1: denominator b s vanishes at s = 0
        let cp = ConicParam::new(
            [q("0"), q("1"), q("0"), q("0"), q("0"), q("-1")],
            (q("1"), q("1")),
        )
        .unwrap();
        assert_eq!(
            conic_point(&cp, &Param::Finite(q("0"))),
            Err(GeomError::VanishingDenominator)
        );
        assert_eq!(
            conic_point(&cp, &Param::Infinity),
            Err(GeomError::NoPointAtInfinity)
        );
    }

    fn small_q() -> impl Strategy<Value = Rational> {
        (-30i64..30, 1i64..8).prop_map(|(n, d)| Rational::new(n.into(), d.into()))
    }

    /// A conic through `(xi, eta)` with random remaining coefficients.
    fn arb_conic() -> impl Strategy<Value = ConicParam> {
        (
            small_q(),
            small_q(),
            small_q(),
            small_q(),
            small_q(),
            small_q(),
            small_q(),
        )
            .prop_map(|(a, b, c, d, e, xi, eta)| {
                let f =
                    -(&a * &xi * &xi + &b * &xi * &eta + &c * &eta * &eta + &d * &xi + &e * &eta);
                ConicParam::new([a, b, c, d, e, f], (xi, eta)).unwrap()
            })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(10))]

        #[test]
        fn produced_points_lie_on_conic(cp in arb_conic(), params in proptest::collection::vec(small_q(), 100)) {
            for s in params {
                if let Ok((x, y)) = conic_point(&cp, &Param::Finite(s)) {
                    prop_assert!(cp.eval(&x, &y).is_zero());
                }
            }
            if let Ok((x, y)) = conic_point(&cp, &Param::Infinity) {
                prop_assert!(cp.eval(&x, &y).is_zero());
            }
        }
    }
}
