//! Diophantine decision procedures used by the searches: membership in the
//! distance set, ternary forms, sums of three squares, closure chains and the
//! isosceles feasibility test.

mod closure;
mod isosceles;
mod legendre;
mod residues;
mod squares;

pub use closure::{
    antipodal_dist_sq, construct_chain, phi_case, phi_criteria, ChainCertificate, ChainStep,
    PhiCase,
};
pub use isosceles::{
    eq_pair_feasible, isosceles_check, isosceles_embeddable, isosceles_embeddable_with,
    isosceles_form, IsoscelesVerdict, PairVerdict,
};
pub use legendre::{
    holzer_bounds, legendre_solution, legendre_solvable, legendre_verdict, normalize,
    residue_witnesses, LegendreVerdict, NormalizationStep, NormalizedForm, TernaryForm,
};
pub use residues::{is_quadratic_residue, sqrt_mod_squarefree};
pub use squares::{
    is_sum_of_three_squares, rational_three_squares, sum_of_three_squares, three_squares,
};

use thiserror::Error;

use crate::qcore::factorize;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NumError {
    #[error("ternary form has a zero coefficient")]
    ZeroCoefficient,
    #[error("form has no non-trivial solution: {0}")]
    Unsolvable(String),
    #[error("value out of supported range: {0}")]
    TooLarge(String),
    #[error("expected a positive value, got {0}")]
    NotPositive(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("{0} is not a sum of three rational squares")]
    NotRepresentable(String),
    #[error("internal arithmetic failure: {0}")]
    Internal(String),
}

/// Whether `t` is square-free, even, and has an odd prime factor `p = 2 (mod 3)`.
#[allow(non_snake_case)]
pub fn in_T(t: u64) -> bool {
    if t == 0 || t % 2 == 1 {
        return false;
    }
    let factors = factorize(t);
    factors.iter().all(|&(_, e)| e == 1) && factors.iter().any(|&(p, _)| p % 3 == 2 && p != 2)
}

/// The members of the distance set up to `limit`.
pub fn t_values(limit: u64) -> impl Iterator<Item = u64> {
    (1..=limit).filter(|&t| in_T(t))
}
