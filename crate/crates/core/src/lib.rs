//! Exact search and verification of triangle-free 4-chromatic subgraphs of
//! the rational distance graphs `G(Q^3, sqrt(t))`.
//!
//! The modules stack bottom-up: [`qcore`] scalars and points, [`numtheory`]
//! Diophantine decisions, [`geom`] rational circles and apexes, [`graph`]
//! exact coloring, [`cycles`] 5-cycle search, and [`hunts`] for the three
//! search pipelines plus the certificate verifier.

// Errors carry the offending exact values; they are built rarely, so size is fine.
#![allow(clippy::result_large_err)]

pub mod cycles;
pub mod geom;
pub mod graph;
pub mod hunts;
pub mod numtheory;
pub mod qcore;

pub use qcore::{QPoint3, QVec3, Rational};
