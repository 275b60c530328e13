//! Additive closure of the sphere of radius `sqrt(h)`.
//!
//! A sufficient condition on `h` guarantees that every vector of squared norm
//! `t` in the distance set is a finite sum of vectors of squared norm `h`.
//! [`construct_chain`] produces that sum explicitly.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive};

use super::squares::three_squares;
use super::{in_T, NumError};
use crate::geom::reflect;
use crate::qcore::{squarefree_decompose, QVec3, Rational};

/// Which of the three sufficient conditions holds for `h = m / n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PhiCase {
    /// `m = 2 (mod 4)`.
    NumeratorTwoModFour,
    /// The square-free part of `n` is even.
    EvenSquarefreeDenominator,
    /// The square-free part `n0` of `n` is odd and `m * n0 = 1 (mod 4)`.
    OddProductOneModFour,
}

fn positive_parts(h: &Rational) -> Result<(u64, u64), NumError> {
    if !h.is_positive() {
        return Err(NumError::NotPositive(h.to_string()));
    }
    let m = h
        .numer()
        .to_u64()
        .ok_or_else(|| NumError::TooLarge(h.to_string()))?;
    let n = h
        .denom()
        .to_u64()
        .ok_or_else(|| NumError::TooLarge(h.to_string()))?;
    Ok((m, n))
}

/// The first condition that holds, or `None` when all three fail (which
/// leaves membership undecided, not refuted).
pub fn phi_case(h: &Rational) -> Result<Option<PhiCase>, NumError> {
    let (m, n) = positive_parts(h)?;
    if m % 4 == 2 {
        return Ok(Some(PhiCase::NumeratorTwoModFour));
    }
    // n = 2^v * odd; the square-free part is even iff v is odd, and when v is
    // even it agrees with the odd part mod 8 since odd squares are 1 mod 8
    let v = n.trailing_zeros();
    if v % 2 == 1 {
        return Ok(Some(PhiCase::EvenSquarefreeDenominator));
    }
    let odd = n >> v;
    if (m % 4) * (odd % 4) % 4 == 1 {
        return Ok(Some(PhiCase::OddProductOneModFour));
    }
    Ok(None)
}

pub fn phi_criteria(h: &Rational) -> Result<bool, NumError> {
    Ok(phi_case(h)?.is_some())
}

/// Squared distance between antipodal points of a circle whose squared
/// radius is `m / n` with `n = 2 (mod 4)`.
pub fn antipodal_dist_sq(radius_sq: &Rational) -> Result<Rational, NumError> {
    if !radius_sq.is_positive() {
        return Err(NumError::NotPositive(radius_sq.to_string()));
    }
    let four = BigInt::from(4);
    if radius_sq.denom().mod_floor(&four) != BigInt::from(2) {
        return Err(NumError::Precondition(format!(
            "denominator of {radius_sq} is not 2 mod 4"
        )));
    }
    let p = radius_sq.denom() / 2;
    Ok(Rational::new(radius_sq.numer() * 2, p))
}

/// `count` copies of `vector`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainStep {
    pub vector: QVec3,
    pub count: u64,
}

/// A witness that `target` is a sum of vectors of squared norm `step_norm_sq`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainCertificate {
    pub target: QVec3,
    pub step_norm_sq: Rational,
    pub steps: Vec<ChainStep>,
}

impl ChainCertificate {
    pub fn step_count(&self) -> u64 {
        self.steps.iter().map(|s| s.count).sum()
    }

    /// The steps one vector at a time.
    pub fn expanded(&self) -> impl Iterator<Item = &QVec3> {
        self.steps
            .iter()
            .flat_map(|s| std::iter::repeat_n(&s.vector, s.count as usize))
    }

    pub fn validate(&self) -> Result<(), NumError> {
        let mut sum = QVec3::zero();
        for step in &self.steps {
            if step.vector.norm_sq() != self.step_norm_sq {
                return Err(NumError::Internal(format!(
                    "step {} has squared norm {}, expected {}",
                    step.vector,
                    step.vector.norm_sq(),
                    self.step_norm_sq
                )));
            }
            let k = Rational::from_integer(BigInt::from(step.count));
            sum = &sum + &step.vector.scale(&k);
        }
        if sum != self.target {
            return Err(NumError::Internal(format!(
                "steps sum to {sum}, expected {}",
                self.target
            )));
        }
        Ok(())
    }
}

type IVec = [i64; 3];

/// Signed multiset of integer vectors, with `w` and `-w` sharing one slot.
#[derive(Default)]
struct Tally(BTreeMap<IVec, i64>);

impl Tally {
    fn add(&mut self, w: IVec, copies: i64) {
        let neg = w.map(|x| -x);
        let (key, sign) = if w >= neg { (w, 1) } else { (neg, -1) };
        *self.0.entry(key).or_insert(0) += sign * copies;
    }

    fn into_steps(self) -> impl Iterator<Item = (IVec, u64)> {
        self.0.into_iter().filter(|(_, c)| *c != 0).map(|(w, c)| {
            if c > 0 {
                (w, c as u64)
            } else {
                (w.map(|x| -x), c.unsigned_abs())
            }
        })
    }
}

fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    if b == 0 {
        (a.abs(), a.signum(), 0)
    } else {
        let (g, x, y) = ext_gcd(b, a.rem_euclid(b));
        (g, y, x - a.div_euclid(b) * y)
    }
}

/// Signed permutations of `rep` realizing `(2, 0, 0)` as a sum:
/// `(r_k, o, o') + (r_k, -o, -o')` contributes `2 r_k`, and Bezout makes
/// the `2 r_k` combine to 2.
fn double_unit(rep: IVec) -> Result<Vec<(IVec, i64)>, NumError> {
    let [a, b, c] = rep;
    let (g1, x, y) = ext_gcd(a, b);
    let (g, u, w) = ext_gcd(g1, c);
    if g != 1 {
        return Err(NumError::Internal(format!(
            "representation {rep:?} is not primitive"
        )));
    }
    let coeffs = [u * x, u * y, w];
    let mut out = Vec::new();
    for (k, &d) in coeffs.iter().enumerate() {
        if d == 0 || rep[k] == 0 {
            continue;
        }
        let others: Vec<i64> = (0..3).filter(|&j| j != k).map(|j| rep[j]).collect();
        let lead = rep[k] * d.signum();
        out.push(([lead, others[0], others[1]], d.abs()));
        out.push(([lead, -others[0], -others[1]], d.abs()));
    }
    let check: i64 = out.iter().map(|(w, n)| w[0] * n).sum();
    debug_assert_eq!(check, 2);
    Ok(out)
}

/// Move coordinate 0 to `axis` and multiply it by `sign`.
fn orient(w: IVec, axis: usize, sign: i64) -> IVec {
    let mut out = w;
    out.swap(0, axis);
    out[axis] *= sign;
    out
}

/// A signed permutation of `rep` whose odd entries land exactly on `odd` slots.
fn place_odd(rep: IVec, odd: &[usize]) -> Option<IVec> {
    let (odds, evens): (Vec<i64>, Vec<i64>) = rep.into_iter().partition(|x| *x % 2 != 0);
    if odds.len() != odd.len() {
        return None;
    }
    let mut out = [0i64; 3];
    let mut oi = odds.into_iter();
    let mut ei = evens.into_iter();
    for (slot, value) in out.iter_mut().enumerate() {
        *value = if odd.contains(&slot) {
            oi.next()?
        } else {
            ei.next()?
        };
    }
    Some(out)
}

/// Integer-vector chain (in units of `1 / denom` per step entry) for an
/// integer `target` with exactly two odd coordinates.
fn integer_chain(target: IVec, rep: IVec, case: PhiCase) -> Result<Tally, NumError> {
    let odd: Vec<usize> = (0..3).filter(|&i| target[i] % 2 != 0).collect();
    if odd.len() != 2 {
        return Err(NumError::Precondition(format!(
            "target {target:?} must have exactly two odd coordinates"
        )));
    }
    let mut tally = Tally::default();
    let mut start = [0i64; 3];
    let mut push = |tally: &mut Tally, w: IVec, copies: i64| {
        for i in 0..3 {
            start[i] += w[i] * copies;
        }
        tally.add(w, copies);
    };
    match case {
        PhiCase::NumeratorTwoModFour | PhiCase::EvenSquarefreeDenominator => {
            let w = place_odd(rep, &odd).ok_or_else(|| {
                NumError::Internal(format!("{rep:?} should have two odd entries"))
            })?;
            push(&mut tally, w, 1);
        }
        PhiCase::OddProductOneModFour => {
            for &slot in &odd {
                let w = place_odd(rep, &[slot]).ok_or_else(|| {
                    NumError::Internal(format!("{rep:?} should have one odd entry"))
                })?;
                push(&mut tally, w, 1);
            }
        }
    }
    let unit = double_unit(rep)?;
    for axis in 0..3 {
        let gap = target[axis] - start[axis];
        debug_assert_eq!(gap % 2, 0);
        let copies = gap / 2;
        if copies == 0 {
            continue;
        }
        for &(w, n) in &unit {
            tally.add(orient(w, axis, copies.signum()), n * copies.abs());
        }
    }
    Ok(tally)
}

fn to_ivec(v: &QVec3) -> Option<IVec> {
    let c = v.components();
    let get = |q: &Rational| {
        if q.is_integer() {
            q.to_integer().to_i64()
        } else {
            None
        }
    };
    Some([get(c[0])?, get(c[1])?, get(c[2])?])
}

/// A chain of vectors of squared norm `h` summing to `target`.
///
/// The target's squared norm must lie in the distance set and `h` must satisfy
/// [`phi_criteria`]. Non-integer targets are handled by building the chain for
/// an integer vector of the same norm and reflecting it.
pub fn construct_chain(target: &QVec3, h: &Rational) -> Result<ChainCertificate, NumError> {
    let norm = target.norm_sq();
    if &norm == h {
        return Ok(ChainCertificate {
            target: target.clone(),
            step_norm_sq: h.clone(),
            steps: vec![ChainStep {
                vector: target.clone(),
                count: 1,
            }],
        });
    }
    let t = norm
        .is_integer()
        .then(|| norm.to_integer().to_u64())
        .flatten()
        .filter(|&t| in_T(t))
        .ok_or_else(|| {
            NumError::Precondition(format!("squared norm {norm} is not in the distance set"))
        })?;
    let case = phi_case(h)?.ok_or_else(|| {
        NumError::Precondition(format!("{h} satisfies none of the closure conditions"))
    })?;
    let (m, n) = positive_parts(h)?;
    // steps are rep / denom with |rep|^2 = product
    let (product, denom) = match case {
        PhiCase::NumeratorTwoModFour => (m.checked_mul(n), n),
        _ => {
            let (f, n0) = squarefree_decompose(n).expect("n >= 1");
            (m.checked_mul(n0), f * n0)
        }
    };
    let product = product.ok_or_else(|| NumError::TooLarge(format!("{m} * {n}")))?;
    let (a, b, c) = three_squares(product)
        .ok_or_else(|| NumError::Internal(format!("no primitive representation of {product}")))?;
    let rep = [a as i64, b as i64, c as i64];

    let integer_target = match to_ivec(target) {
        Some(w) => w,
        None => {
            let (x, y, z) = three_squares(t)
                .ok_or_else(|| NumError::Internal(format!("no primitive representation of {t}")))?;
            [x as i64, y as i64, z as i64]
        }
    };
    let tally = integer_chain(integer_target, rep, case)?;
    let as_q = |w: IVec| QVec3::from_ints(w[0], w[1], w[2]);
    let mirror = &as_q(integer_target) - target;
    let scale = Rational::new(BigInt::one(), BigInt::from(denom));
    let place = |w: QVec3| {
        if mirror.is_zero() {
            w
        } else {
            reflect(&w, &mirror).expect("nonzero mirror")
        }
    };
    let steps = tally
        .into_steps()
        .map(|(w, copies)| ChainStep {
            vector: place(as_q(w).scale(&scale)),
            count: copies * denom,
        })
        .collect();
    let cert = ChainCertificate {
        target: target.clone(),
        step_norm_sq: h.clone(),
        steps,
    };
    cert.validate()?;
    Ok(cert)
}
