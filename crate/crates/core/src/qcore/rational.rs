use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::factor::squarefree_decompose;
use super::QError;

/// Arbitrary-precision rational in lowest terms with a positive denominator.
///
/// `num_rational` already keeps `BigRational` canonical, so it is used
/// directly rather than wrapped.
pub type Rational = BigRational;

/// Parses `a/b` or `a` with an optional leading `-`.
///
/// Only ASCII digits are accepted; `+`, whitespace and a zero denominator are
/// rejected. Columns in errors are 1-based.
pub fn parse_rational(text: &str) -> Result<Rational, QError> {
    let err = |column: usize, reason: &'static str| QError::Parse {
        text: text.to_string(),
        column,
        reason,
    };
    if text.is_empty() {
        return Err(err(1, "empty"));
    }
    let (negative, body, offset) = match text.strip_prefix('-') {
        Some(rest) => (true, rest, 1),
        None => (false, text, 0),
    };
    let (num_text, den_text) = match body.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (body, None),
    };
    let digits = |s: &str, start: usize| -> Result<BigInt, QError> {
        if s.is_empty() {
            return Err(err(start + 1, "missing digits"));
        }
        if let Some(pos) = s.bytes().position(|b| !b.is_ascii_digit()) {
            return Err(err(start + pos + 1, "unexpected character"));
        }
        Ok(s.parse::<BigInt>().expect("ascii digits"))
    };
    let mut num = digits(num_text, offset)?;
    let den = match den_text {
        Some(d) => {
            let den = digits(d, offset + num_text.len() + 1)?;
            if den.is_zero() {
                return Err(err(offset + num_text.len() + 2, "zero denominator"));
            }
            den
        }
        None => BigInt::one(),
    };
    if negative {
        num = -num;
    }
    Ok(Rational::new(num, den))
}

/// Returns `s >= 0` with `s^2 = q` exactly, or `None` when `q` is not the
/// square of a rational.
pub fn rational_square_root(q: &Rational) -> Result<Option<Rational>, QError> {
    if q.is_negative() {
        return Err(QError::Negative(q.to_string()));
    }
    let n = exact_isqrt(q.numer());
    let d = exact_isqrt(q.denom());
    Ok(match (n, d) {
        (Some(n), Some(d)) => Some(Rational::new(n, d)),
        _ => None,
    })
}

fn exact_isqrt(n: &BigInt) -> Option<BigInt> {
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

/// Writes `sqrt(q) = scale * sqrt(r)` with `r` a square-free positive integer.
pub fn reduce_distance(q: &Rational) -> Result<(BigInt, Rational), QError> {
    if !q.is_positive() {
        return Err(QError::NotPositive(q.to_string()));
    }
    let p = q
        .numer()
        .to_u64()
        .ok_or_else(|| QError::TooLarge(q.numer().to_string()))?;
    let d = q
        .denom()
        .to_u64()
        .ok_or_else(|| QError::TooLarge(q.denom().to_string()))?;
    let (kp, p0) = squarefree_decompose(p)?;
    let (kd, d0) = squarefree_decompose(d)?;
    // sqrt(p0 / d0) = sqrt(p0 * d0) / d0, and gcd(p, d) = 1 keeps p0 * d0 square-free.
    let r = BigInt::from(p0) * BigInt::from(d0);
    let scale = Rational::new(BigInt::from(kp), BigInt::from(kd) * BigInt::from(d0));
    Ok((r, scale))
}

pub fn is_integer(q: &Rational) -> bool {
    q.denom().is_one()
}

/// The value as an `i64` when it is an integer in range.
pub fn to_i64(q: &Rational) -> Option<i64> {
    if is_integer(q) {
        q.numer().to_i64()
    } else {
        None
    }
}
