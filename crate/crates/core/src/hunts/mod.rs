//! The three search pipelines and the certificate verifier.
//!
//! Every pipeline ends in a [`Certificate`] that [`verify_certificate`]
//! re-checks from the raw points alone.

mod certificate;
mod greedy;
mod grotzsch_type;
mod report;
mod subgraph;
mod verify;

pub use certificate::{Certificate, CertificateKind};
pub use greedy::{greedy_hunt, CandidateSpec, GreedyConfig, GreedyOutcome, GreedyRun, GreedyStep};
pub use grotzsch_type::{
    grotzsch_type_hunt, GrotzschTypeGraph, TypeHuntOutcome, GROTZSCH_TYPE_LABELS,
};
pub use report::{Line, Report, Verdict};
pub use subgraph::{grotzsch_subgraph_hunt, shell_pairs, Branch, HDevice, SubgraphFound};
pub use verify::{verify_certificate, verify_points};

use thiserror::Error;

use crate::cycles::CycleError;
use crate::geom::GeomError;
use crate::graph::GraphError;
use crate::numtheory::NumError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HuntError {
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("malformed certificate, line {line}: {reason}")]
    Malformed { line: usize, reason: String },
    #[error("internal inconsistency: {0}")]
    Internal(String),
    #[error(transparent)]
    Cycle(#[from] CycleError),
    #[error(transparent)]
    Geom(#[from] GeomError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Num(#[from] NumError),
}

/// Index tuples over `0..n` grouped by their largest entry, lexicographic
/// inside each group. Concatenated, the groups visit every tuple once, and
/// any prefix only uses the first few parameters.
pub(crate) fn shells<const K: usize>(n: usize) -> impl Iterator<Item = Vec<[usize; K]>> {
    (0..n).map(|m| {
        let mut out = Vec::new();
        let mut tuple = [0usize; K];
        loop {
            if tuple.contains(&m) {
                out.push(tuple);
            }
            // odometer over [0, m]^K, last entry fastest
            let mut k = K;
            loop {
                if k == 0 {
                    return out;
                }
                k -= 1;
                if tuple[k] < m {
                    tuple[k] += 1;
                    tuple[k + 1..].iter_mut().for_each(|x| *x = 0);
                    break;
                }
            }
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shells_cover_each_tuple_once() {
        let all: Vec<[usize; 3]> = shells::<3>(4).flatten().collect();
        assert_eq!(all.len(), 64);
        let set: std::collections::BTreeSet<_> = all.iter().collect();
        assert_eq!(set.len(), 64);
        assert_eq!(
            &all[..8],
            &[
                [0, 0, 0],
                [0, 0, 1],
                [0, 1, 0],
                [0, 1, 1],
                [1, 0, 0],
                [1, 0, 1],
                [1, 1, 0],
                [1, 1, 1]
            ]
        );
        let pairs: Vec<[usize; 2]> = shells::<2>(3).flatten().collect();
        assert_eq!(pairs[..4], [[0, 0], [0, 1], [1, 0], [1, 1]]);
    }
}
