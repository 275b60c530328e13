//! Ternary forms `a x^2 + b y^2 + c z^2 = 0`.
//!
//! Solvability is decided by reducing to a square-free, pairwise coprime form
//! and applying the three quadratic-residue conditions. Solutions come from an
//! exhaustive search inside Holzer's bounds for the reduced form, mapped back
//! through the recorded substitutions.

use std::fmt;

use num_bigint::BigInt;
use num_integer::{Integer, Roots};
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::residues::{is_quadratic_residue, sqrt_mod_squarefree};
use super::NumError;
use crate::qcore::{squarefree_decompose, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TernaryForm {
    pub a: i128,
    pub b: i128,
    pub c: i128,
}

impl TernaryForm {
    pub fn new(a: i128, b: i128, c: i128) -> Self {
        TernaryForm { a, b, c }
    }

    pub fn coefficients(&self) -> [i128; 3] {
        [self.a, self.b, self.c]
    }

    pub fn eval(&self, x: i128, y: i128, z: i128) -> i128 {
        self.a * x * x + self.b * y * y + self.c * z * z
    }

    fn eval_big(&self, v: &[BigInt; 3]) -> BigInt {
        self.coefficients()
            .iter()
            .zip(v)
            .map(|(&k, x)| BigInt::from(k) * x * x)
            .sum()
    }

    /// The integer form proportional to `a x^2 + b y^2 + c z^2` with rational
    /// coefficients, scaled by the lcm of the denominators and divided by the
    /// content.
    pub fn from_rationals(
        a: &Rational,
        b: &Rational,
        c: &Rational,
    ) -> Result<TernaryForm, NumError> {
        let lcm = a.denom().lcm(b.denom()).lcm(c.denom());
        let scaled: Vec<BigInt> = [a, b, c]
            .iter()
            .map(|q| q.numer() * (&lcm / q.denom()))
            .collect();
        let content = scaled[0].gcd(&scaled[1]).gcd(&scaled[2]);
        let mut out = [0i128; 3];
        for (slot, v) in out.iter_mut().zip(&scaled) {
            let reduced = if content.is_zero() {
                v.clone()
            } else {
                v / &content
            };
            *slot = reduced
                .to_i128()
                .ok_or_else(|| NumError::TooLarge(reduced.to_string()))?;
        }
        Ok(TernaryForm::new(out[0], out[1], out[2]))
    }
}

impl fmt::Display for TernaryForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, var) in self.coefficients().iter().zip(["x", "y", "z"]) {
            let sign = if *k < 0 {
                "-"
            } else if first {
                ""
            } else {
                "+"
            };
            let mag = k.unsigned_abs();
            let sep = if first { "" } else { " " };
            let space = if first || sign.is_empty() { "" } else { " " };
            if mag == 1 {
                write!(f, "{sep}{sign}{space}{var}^2")?;
            } else {
                write!(f, "{sep}{sign}{space}{mag}{var}^2")?;
            }
            first = false;
        }
        write!(f, " = 0")
    }
}

/// One substitution performed while reducing a form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NormalizationStep {
    /// All three coefficients divided by their common factor.
    DividedContent(u128),
    /// `coef[var] = k^2 * core`; the variable absorbs `k`.
    AbsorbedSquare { var: usize, k: u128 },
    /// `g` divided `coef[i]` and `coef[j]`, so `g` divides variable `var`;
    /// substituting `var = g * var'` and dividing by `g` moved `g` onto `coef[var]`.
    MovedCommonFactor { var: usize, g: u128 },
}

impl fmt::Display for NormalizationStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        const VARS: [&str; 3] = ["x", "y", "z"];
        match self {
            NormalizationStep::DividedContent(g) => write!(f, "divide all coefficients by {g}"),
            NormalizationStep::AbsorbedSquare { var, k } => {
                write!(f, "absorb square {k}^2 into {}", VARS[*var])
            }
            NormalizationStep::MovedCommonFactor { var, g } => {
                write!(f, "common factor {g} forces {0} = {g}*{0}'", VARS[*var])
            }
        }
    }
}

#[derive(Clone, Debug)]
pub struct NormalizedForm {
    pub original: TernaryForm,
    pub reduced: TernaryForm,
    pub steps: Vec<NormalizationStep>,
    /// Original variable `i` equals reduced variable `i` times `scale[i]`.
    pub scale: [Rational; 3],
}

/// The outcome of the three residue tests on a reduced form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LegendreVerdict {
    Solvable,
    SameSign,
    /// `-(coef[i] * coef[j])` is not a square modulo `|coef[k]|`.
    NonResidue {
        residue: i128,
        modulus: u128,
    },
}

pub fn normalize(form: &TernaryForm) -> Result<NormalizedForm, NumError> {
    if form.coefficients().contains(&0) {
        return Err(NumError::ZeroCoefficient);
    }
    let mut coef = form.coefficients();
    let mut scale = [Rational::one(), Rational::one(), Rational::one()];
    let mut steps = Vec::new();
    loop {
        let mut changed = false;
        let content = coef[0].gcd(&coef[1]).gcd(&coef[2]);
        if content > 1 {
            coef.iter_mut().for_each(|k| *k /= content);
            steps.push(NormalizationStep::DividedContent(content as u128));
            changed = true;
        }
        for (i, k) in coef.iter_mut().enumerate() {
            let mag =
                u64::try_from(k.unsigned_abs()).map_err(|_| NumError::TooLarge(k.to_string()))?;
            let (root, core) = squarefree_decompose(mag).expect("nonzero");
            if root > 1 {
                *k = k.signum() * core as i128;
                scale[i] = &scale[i] / Rational::from_integer(BigInt::from(root));
                steps.push(NormalizationStep::AbsorbedSquare {
                    var: i,
                    k: root as u128,
                });
                changed = true;
            }
        }
        for (i, j, l) in [(0, 1, 2), (0, 2, 1), (1, 2, 0)] {
            let g = coef[i].gcd(&coef[j]);
            if g > 1 {
                coef[i] /= g;
                coef[j] /= g;
                coef[l] = coef[l]
                    .checked_mul(g)
                    .ok_or_else(|| NumError::TooLarge(format!("{} * {g}", coef[l])))?;
                scale[l] = &scale[l] * Rational::from_integer(BigInt::from(g));
                steps.push(NormalizationStep::MovedCommonFactor {
                    var: l,
                    g: g as u128,
                });
                changed = true;
                break;
            }
        }
        if !changed {
            break;
        }
    }
    Ok(NormalizedForm {
        original: *form,
        reduced: TernaryForm::new(coef[0], coef[1], coef[2]),
        steps,
        scale,
    })
}

/// Residue tests on an already reduced (square-free, pairwise coprime) form.
pub fn legendre_verdict(reduced: &TernaryForm) -> LegendreVerdict {
    let k = reduced.coefficients();
    if k.iter().all(|&c| c > 0) || k.iter().all(|&c| c < 0) {
        return LegendreVerdict::SameSign;
    }
    for (i, j, l) in [(0, 1, 2), (0, 2, 1), (1, 2, 0)] {
        let residue = -(k[i] * k[j]);
        let modulus = k[l].unsigned_abs();
        if !is_quadratic_residue(residue, modulus as u64) {
            return LegendreVerdict::NonResidue { residue, modulus };
        }
    }
    LegendreVerdict::Solvable
}

/// Exact solvability of the original form in non-trivial integers.
pub fn legendre_solvable(form: &TernaryForm) -> Result<bool, NumError> {
    let normalized = normalize(form)?;
    Ok(legendre_verdict(&normalized.reduced) == LegendreVerdict::Solvable)
}

/// Square roots certifying the three residue conditions of a reduced form,
/// as `(residue, modulus, root)` triples. `None` unless the verdict is solvable.
pub fn residue_witnesses(reduced: &TernaryForm) -> Option<Vec<(i128, u128, u64)>> {
    if legendre_verdict(reduced) != LegendreVerdict::Solvable {
        return None;
    }
    let k = reduced.coefficients();
    [(0, 1, 2), (0, 2, 1), (1, 2, 0)]
        .iter()
        .map(|&(i, j, l)| {
            let residue = -(k[i] * k[j]);
            let modulus = k[l].unsigned_abs();
            sqrt_mod_squarefree(residue, modulus as u64).map(|r| (residue, modulus, r))
        })
        .collect()
}

/// Holzer's bounds `(sqrt|bc|, sqrt|ac|, sqrt|ab|)` for a reduced form.
pub fn holzer_bounds(reduced: &TernaryForm) -> [u128; 3] {
    let k = reduced.coefficients().map(|c| c.unsigned_abs());
    [
        (k[1] * k[2]).sqrt(),
        (k[0] * k[2]).sqrt(),
        (k[0] * k[1]).sqrt(),
    ]
}

/// 0, 1, -1, 2, -2, ... up to `bound`.
fn signed_range(bound: i128) -> impl Iterator<Item = i128> {
    std::iter::once(0).chain((1..=bound).flat_map(|v| [v, -v]))
}

/// A non-trivial primitive solution of the original form.
pub fn legendre_solution(form: &TernaryForm) -> Result<(BigInt, BigInt, BigInt), NumError> {
    let normalized = normalize(form)?;
    match legendre_verdict(&normalized.reduced) {
        LegendreVerdict::Solvable => {}
        other => return Err(NumError::Unsolvable(format!("{form}: {other:?}"))),
    }
    let reduced = normalized.reduced;
    let bounds = holzer_bounds(&reduced);
    let k = reduced.coefficients();
    // loop over the two variables with the smallest bounds, solve for the third
    let mut order = [0usize, 1, 2];
    order.sort_by_key(|&i| (bounds[i], std::cmp::Reverse(i)));
    let (outer, inner, solved) = (order[0], order[1], order[2]);
    let mut found = None;
    'search: for u in 0..=bounds[outer] as i128 {
        for v in signed_range(bounds[inner] as i128) {
            if u == 0 && v == 0 {
                continue;
            }
            let rest = -(k[outer] * u * u + k[inner] * v * v);
            if rest % k[solved] != 0 {
                continue;
            }
            let sq = rest / k[solved];
            if sq < 0 {
                continue;
            }
            let w = sq.sqrt();
            if w * w == sq {
                let mut sol = [0i128; 3];
                sol[outer] = u;
                sol[inner] = v;
                sol[solved] = w;
                found = Some(sol);
                break 'search;
            }
        }
    }
    let reduced_solution = found.ok_or_else(|| {
        NumError::Internal(format!(
            "no solution of {reduced} inside Holzer bounds {bounds:?}"
        ))
    })?;
    let mut values: Vec<Rational> = reduced_solution
        .iter()
        .zip(&normalized.scale)
        .map(|(&x, s)| Rational::from_integer(BigInt::from(x)) * s)
        .collect();
    let lcm = values
        .iter()
        .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    values
        .iter_mut()
        .for_each(|q| *q = &*q * Rational::from_integer(lcm.clone()));
    let ints: Vec<BigInt> = values.into_iter().map(|q| q.to_integer()).collect();
    let g = ints[0].gcd(&ints[1]).gcd(&ints[2]);
    let mut sol = [&ints[0] / &g, &ints[1] / &g, &ints[2] / &g];
    if let Some(first) = sol.iter().find(|x| !x.is_zero()) {
        if first.is_negative() {
            sol.iter_mut().for_each(|x| *x = -&*x);
        }
    }
    if !form.eval_big(&sol).is_zero() {
        return Err(NumError::Internal(format!("mapped solution fails {form}")));
    }
    let [x, y, z] = sol;
    Ok((x, y, z))
}
