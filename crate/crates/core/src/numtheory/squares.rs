use num_bigint::BigInt;
use num_integer::{Integer, Roots};
use num_traits::ToPrimitive;

use crate::qcore::{QVec3, Rational};

fn isqrt(n: u64) -> u64 {
    n.sqrt()
}

fn is_square(n: u64) -> Option<u64> {
    let r = isqrt(n);
    (r * r == n).then_some(r)
}

/// `a >= b >= c >= 0` with `a^2 + b^2 + c^2 = n`, scanning `a` then `b`
/// downward so the first hit is lexicographically largest.
fn largest_triple(n: u64, primitive: bool) -> Option<(u64, u64, u64)> {
    let mut a = isqrt(n);
    while 3 * (a as u128).pow(2) >= n as u128 {
        let rem = n - a * a;
        let mut b = isqrt(rem).min(a);
        while 2 * (b as u128).pow(2) >= rem as u128 {
            if let Some(c) = is_square(rem - b * b) {
                if c <= b && (!primitive || a.gcd(&b).gcd(&c) == 1) {
                    return Some((a, b, c));
                }
            }
            if b == 0 {
                break;
            }
            b -= 1;
        }
        if a == 0 {
            break;
        }
        a -= 1;
    }
    None
}

/// The lexicographically largest primitive representation `n = a^2 + b^2 + c^2`
/// with `a >= b >= c >= 0` and `gcd(a, b, c) = 1`.
///
/// Primitive representations exist exactly when `n` is not 0, 4 or 7 mod 8.
pub fn three_squares(n: u64) -> Option<(u64, u64, u64)> {
    if n == 0 || matches!(n % 8, 0 | 4 | 7) {
        return None;
    }
    let found = largest_triple(n, true);
    debug_assert!(
        found.is_some(),
        "primitive representation must exist for {n}"
    );
    found
}

/// Whether `n` is a sum of three integer squares (`n != 4^k (8m + 7)`).
pub fn is_sum_of_three_squares(mut n: u64) -> bool {
    if n == 0 {
        return true;
    }
    while n.is_multiple_of(4) {
        n /= 4;
    }
    n % 8 != 7
}

/// The lexicographically largest representation, primitive or not.
pub fn sum_of_three_squares(n: u64) -> Option<(u64, u64, u64)> {
    if !is_sum_of_three_squares(n) {
        return None;
    }
    largest_triple(n, false)
}

/// A rational vector with squared norm `q`, when one exists.
///
/// For `q = p / d` in lowest terms this is `rep(p * d) / d`, so the first two
/// entries are never both zero for `q > 0`.
pub fn rational_three_squares(q: &Rational) -> Option<QVec3> {
    if q.numer() < &BigInt::from(0) {
        return None;
    }
    let p = q.numer().to_u64()?;
    let d = q.denom().to_u64()?;
    let (a, b, c) = sum_of_three_squares(p.checked_mul(d)?)?;
    let scale = |x: u64| Rational::new(BigInt::from(x), BigInt::from(d));
    Some(QVec3::new(scale(a), scale(b), scale(c)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_primitive(n: u64) -> Option<(u64, u64, u64)> {
        let mut best = None;
        let r = isqrt(n);
        for a in 0..=r {
            for b in 0..=a {
                for c in 0..=b {
                    if a * a + b * b + c * c == n && a.gcd(&b).gcd(&c) == 1 {
                        best = best.max(Some((a, b, c)));
                    }
                }
            }
        }
        best
    }

    #[test]
    fn examples() {
        assert_eq!(three_squares(2), Some((1, 1, 0)));
        assert_eq!(three_squares(7), None);
        // the lexicographically largest primitive triple for 198
        assert_eq!(three_squares(198), Some((14, 1, 1)));
        let (a, b, c) = (13u64, 5u64, 2u64);
        assert_eq!(a * a + b * b + c * c, 198);
        assert_eq!(a.gcd(&b).gcd(&c), 1);
        assert_eq!(three_squares(30), Some((5, 2, 1)));
        assert_eq!(three_squares(4), None);
        assert_eq!(sum_of_three_squares(4), Some((2, 0, 0)));
        assert_eq!(sum_of_three_squares(28), None);
    }

    #[test]
    fn matches_brute_force_small() {
        for n in 1..=600u64 {
            assert_eq!(three_squares(n), brute_primitive(n), "n={n}");
        }
    }

    #[test]
    fn primitive_and_correct_up_to_1e5() {
        for n in 1..=100_000u64 {
            match three_squares(n) {
                Some((a, b, c)) => {
                    assert_eq!(a * a + b * b + c * c, n);
                    assert!(a >= b && b >= c);
                    assert_eq!(a.gcd(&b).gcd(&c), 1);
                }
                None => assert!(matches!(n % 8, 0 | 4 | 7), "n={n}"),
            }
        }
    }

    #[test]
    fn rational_representations() {
        let q = Rational::new(BigInt::from(539), BigInt::from(30));
        let v = rational_three_squares(&q).unwrap();
        assert_eq!(v.norm_sq(), q);
        let seven = Rational::from_integer(BigInt::from(7));
        assert!(rational_three_squares(&seven).is_none());
        let seven_quarters = Rational::new(BigInt::from(7), BigInt::from(4));
        assert!(rational_three_squares(&seven_quarters).is_none());
    }
}
