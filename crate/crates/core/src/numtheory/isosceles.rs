//! Embeddability of isosceles triangles `T(sqrt r, sqrt d, sqrt d)` in rational
//! 3-space, decided through the ternary form
//! `x^2 + r y^2 - (4d - r)(a^2 + b^2) z^2 = 0` where `r = a^2 + b^2 + c^2`.

use num_traits::{Signed, Zero};

use super::legendre::{legendre_solvable, TernaryForm};
use super::squares::rational_three_squares;
use super::NumError;
use crate::qcore::{QVec3, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IsoscelesVerdict {
    Embeddable(TernaryForm),
    NotEmbeddable(TernaryForm),
    /// `4d - r <= 0`: the legs cannot span the base.
    Degenerate,
    /// The leg length is not a distance between rational points.
    LegNotRealized,
}

impl IsoscelesVerdict {
    pub fn is_embeddable(&self) -> bool {
        matches!(self, IsoscelesVerdict::Embeddable(_))
    }

    pub fn reason(&self) -> String {
        match self {
            IsoscelesVerdict::Embeddable(f) => format!("{f} is solvable"),
            IsoscelesVerdict::NotEmbeddable(f) => format!("{f} has no non-trivial solution"),
            IsoscelesVerdict::Degenerate => "degenerate triangle: 4d - r <= 0".to_string(),
            IsoscelesVerdict::LegNotRealized => "leg length is not a rational distance".to_string(),
        }
    }
}

/// The canonical representation of `q` with the possibly-zero entry last.
fn canonical_rep(q: &Rational) -> Option<QVec3> {
    rational_three_squares(q)
}

/// The integer form for base `r`, leg `d`, using the base vector `base`
/// (`|base|^2 = r`, first two entries not both zero).
pub fn isosceles_form(r: &Rational, d: &Rational, base: &QVec3) -> Result<TernaryForm, NumError> {
    let [a, b, _] = base.components();
    let planar = a * a + b * b;
    if planar.is_zero() {
        return Err(NumError::Precondition(format!(
            "base vector {base} has no component in the first two coordinates"
        )));
    }
    let four = Rational::from_integer(4.into());
    let gap = &four * d - r;
    let one = Rational::from_integer(1.into());
    TernaryForm::from_rationals(&one, r, &-(gap * planar))
}

/// Embeddability using a caller-chosen representation `base` of `r`.
pub fn isosceles_embeddable_with(
    r: &Rational,
    d: &Rational,
    base: &QVec3,
) -> Result<IsoscelesVerdict, NumError> {
    if &base.norm_sq() != r {
        return Err(NumError::Precondition(format!(
            "{base} does not have squared norm {r}"
        )));
    }
    let four = Rational::from_integer(4.into());
    if !(&four * d - r).is_positive() {
        return Ok(IsoscelesVerdict::Degenerate);
    }
    if canonical_rep(d).is_none() {
        return Ok(IsoscelesVerdict::LegNotRealized);
    }
    let form = isosceles_form(r, d, base)?;
    Ok(if legendre_solvable(&form)? {
        IsoscelesVerdict::Embeddable(form)
    } else {
        IsoscelesVerdict::NotEmbeddable(form)
    })
}

pub fn isosceles_check(r: &Rational, d: &Rational) -> Result<IsoscelesVerdict, NumError> {
    for (name, v) in [("r", r), ("d", d)] {
        if !v.is_positive() {
            return Err(NumError::NotPositive(format!("{name} = {v}")));
        }
    }
    let base = canonical_rep(r).ok_or_else(|| NumError::NotRepresentable(r.to_string()))?;
    isosceles_embeddable_with(r, d, &base)
}

pub fn isosceles_embeddable(r: &Rational, d: &Rational) -> Result<bool, NumError> {
    Ok(isosceles_check(r, d)?.is_embeddable())
}

/// Verdicts for the two triangles of a symmetric 5-cycle: base `t` with legs
/// `d`, and base `d` with legs `t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairVerdict {
    pub first: IsoscelesVerdict,
    pub second: IsoscelesVerdict,
}

impl PairVerdict {
    pub fn feasible(&self) -> bool {
        self.first.is_embeddable() && self.second.is_embeddable()
    }
}

/// Both triangle conditions; they need not share a solution. An unrepresentable
/// `d` yields an infeasible verdict rather than an error.
pub fn eq_pair_feasible(t: u64, d: &Rational) -> Result<PairVerdict, NumError> {
    let t = Rational::from_integer(t.into());
    if !d.is_positive() {
        return Err(NumError::NotPositive(d.to_string()));
    }
    let first = isosceles_check(&t, d)?;
    let second = match canonical_rep(d) {
        None => IsoscelesVerdict::LegNotRealized,
        Some(base) => isosceles_embeddable_with(d, &t, &base)?,
    };
    Ok(PairVerdict { first, second })
}
