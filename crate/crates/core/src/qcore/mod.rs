//! Exact scalars and points of rational 3-space.
//!
//! Every quantity in the crate is an exact [`Rational`]; adjacency in a
//! distance graph is an equation, so nothing here ever rounds.

mod factor;
mod point;
mod rational;

pub use factor::{factorize, is_prime, squarefree_decompose, squarefree_part};
pub use point::{dist_sq, norm_sq, QPoint3, QVec3};
pub use rational::{
    is_integer, parse_rational, rational_square_root, reduce_distance, to_i64, Rational,
};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QError {
    #[error("square-free part of 0 is undefined")]
    Zero,
    #[error("expected a positive value, got {0}")]
    NotPositive(String),
    #[error("square root of negative value {0}")]
    Negative(String),
    #[error("value {0} does not fit in 64 bits")]
    TooLarge(String),
    #[error("malformed rational {text:?} at column {column}: {reason}")]
    Parse {
        text: String,
        column: usize,
        reason: &'static str,
    },
}
