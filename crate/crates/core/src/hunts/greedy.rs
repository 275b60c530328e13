use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_bigint::BigInt;
use num_integer::Roots;
use num_traits::ToPrimitive;

use super::certificate::{Certificate, CertificateKind};
use super::HuntError;
use crate::cycles::validate_5cycle;
use crate::graph::{build_graph, k_colorable, AbstractGraph, Coloring, DistGraph};
use crate::qcore::{QPoint3, Rational};

type IPoint = [i64; 3];

/// Candidate points `p` with `denominator * p` integral and every coordinate
/// in `[-box_radius, box_radius]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CandidateSpec {
    pub denominator: i64,
    pub box_radius: i64,
}

impl CandidateSpec {
    fn contains(&self, p: &IPoint) -> bool {
        let r = self.box_radius * self.denominator;
        p.iter().all(|c| c.abs() <= r)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GreedyConfig {
    pub candidates: CandidateSpec,
    pub cap: usize,
}

impl Default for GreedyConfig {
    fn default() -> Self {
        GreedyConfig {
            candidates: CandidateSpec {
                denominator: 3,
                box_radius: 10,
            },
            cap: 1000,
        }
    }
}

/// One accepted vertex and the scores that selected it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GreedyStep {
    pub point: QPoint3,
    /// Neighbors already in the graph.
    pub neighbors: usize,
    /// Distinct colors among those neighbors under the stored coloring.
    pub colors: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GreedyOutcome {
    NotThreeColorable,
    CapReached {
        last_coloring: Coloring,
    },
    /// Every candidate is already used or has no neighbor in the graph.
    NoCandidates {
        last_coloring: Coloring,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GreedyRun {
    pub graph: DistGraph,
    pub trace: Vec<GreedyStep>,
    pub outcome: GreedyOutcome,
}

impl GreedyRun {
    pub fn succeeded(&self) -> bool {
        self.outcome == GreedyOutcome::NotThreeColorable
    }

    pub fn certificate(&self, t: u64) -> Certificate {
        Certificate::new(
            CertificateKind::DirectChromatic,
            t,
            self.graph.vertices().to_vec(),
        )
    }
}

fn scaled(p: &QPoint3, k: i64) -> Option<IPoint> {
    let k = Rational::from_integer(BigInt::from(k));
    let c = p.coords();
    let get = |q: &Rational| {
        let s = q * &k;
        if s.is_integer() {
            s.to_integer().to_i64()
        } else {
            None
        }
    };
    Some([get(c[0])?, get(c[1])?, get(c[2])?])
}

fn unscaled(p: &IPoint, k: i64) -> QPoint3 {
    let q = |x: i64| Rational::new(x.into(), k.into());
    QPoint3::new(q(p[0]), q(p[1]), q(p[2]))
}

/// Integer offsets of squared norm `n`, in lexicographic order.
fn offsets(n: i64) -> Vec<IPoint> {
    let r = n.sqrt();
    let mut out = Vec::new();
    for a in -r..=r {
        for b in -r..=r {
            let rest = n - a * a - b * b;
            if rest < 0 {
                continue;
            }
            let c = rest.sqrt();
            if c * c == rest {
                out.push([a, b, -c]);
                if c != 0 {
                    out.push([a, b, c]);
                }
            }
        }
    }
    out
}

fn add(p: &IPoint, o: &IPoint) -> IPoint {
    [p[0] + o[0], p[1] + o[1], p[2] + o[2]]
}

struct State {
    steps: Vec<IPoint>,
    spec: CandidateSpec,
    points: Vec<IPoint>,
    index: HashMap<IPoint, usize>,
    edges: Vec<(usize, usize)>,
    /// Candidates outside the graph with at least one neighbor in it.
    count: HashMap<IPoint, usize>,
    by_count: BTreeMap<usize, BTreeSet<IPoint>>,
}

impl State {
    fn unbucket(&mut self, p: &IPoint, c: usize) {
        let bucket = self.by_count.get_mut(&c).expect("bucket");
        bucket.remove(p);
        if bucket.is_empty() {
            self.by_count.remove(&c);
        }
    }

    fn insert(&mut self, p: IPoint) {
        let id = self.points.len();
        if let Some(c) = self.count.remove(&p) {
            self.unbucket(&p, c);
        }
        for i in 0..self.steps.len() {
            let q = add(&p, &self.steps[i]);
            if let Some(&j) = self.index.get(&q) {
                self.edges.push((j, id));
            } else if self.spec.contains(&q) {
                let c = self.count.get(&q).copied().unwrap_or(0);
                if c > 0 {
                    self.unbucket(&q, c);
                }
                self.count.insert(q, c + 1);
                self.by_count.entry(c + 1).or_default().insert(q);
            }
        }
        self.index.insert(p, id);
        self.points.push(p);
    }

    fn neighbor_colors(&self, p: &IPoint, coloring: &Coloring) -> usize {
        let seen: BTreeSet<usize> = self
            .steps
            .iter()
            .filter_map(|o| self.index.get(&add(p, o)))
            .map(|&j| coloring.color(j))
            .collect();
        seen.len()
    }
}

/// Grow a 5-cycle greedily until it is not 3-colorable.
///
/// Each round 3-colors the current graph from scratch, then adds the
/// candidate adjacent to the most current vertices, breaking ties by the
/// number of distinct colors among those neighbors and then by the smallest
/// point.
pub fn greedy_hunt(
    t: u64,
    seed: &[QPoint3],
    config: &GreedyConfig,
) -> Result<GreedyRun, HuntError> {
    let tq = Rational::from_integer(t.into());
    validate_5cycle(seed, &tq).map_err(|e| HuntError::Precondition(format!("seed: {e}")))?;
    let k = config.candidates.denominator;
    if k <= 0 || config.candidates.box_radius < 0 || config.cap < seed.len() {
        return Err(HuntError::Precondition(
            "denominator, box and cap must be positive".into(),
        ));
    }
    let norm = (t as i64)
        .checked_mul(k * k)
        .ok_or_else(|| HuntError::Precondition("t * denominator^2 overflows".into()))?;
    let steps = offsets(norm);

    let mut state = State {
        steps,
        spec: config.candidates.clone(),
        points: Vec::new(),
        index: HashMap::new(),
        edges: Vec::new(),
        count: HashMap::new(),
        by_count: BTreeMap::new(),
    };
    for p in seed {
        let s = scaled(p, k)
            .ok_or_else(|| HuntError::Precondition(format!("seed point {p} is not a candidate")))?;
        if state.index.contains_key(&s) {
            return Err(HuntError::Precondition(format!("seed point {p} repeats")));
        }
        state.insert(s);
    }

    let mut trace = Vec::new();
    let outcome = loop {
        let g = AbstractGraph::new(state.points.len(), state.edges.iter().copied())?;
        let Some(coloring) = k_colorable(&g, 3) else {
            break GreedyOutcome::NotThreeColorable;
        };
        if state.points.len() >= config.cap {
            break GreedyOutcome::CapReached {
                last_coloring: coloring,
            };
        }
        let Some((&best, tied)) = state.by_count.iter().next_back() else {
            break GreedyOutcome::NoCandidates {
                last_coloring: coloring,
            };
        };
        // ties: most colors, then the smallest point (sets iterate ascending)
        let mut choice: Option<(usize, IPoint)> = None;
        for p in tied {
            let colors = state.neighbor_colors(p, &coloring);
            if choice.is_none_or(|(c, _)| colors > c) {
                choice = Some((colors, *p));
            }
        }
        let (colors, chosen) = choice.expect("nonempty bucket");
        trace.push(GreedyStep {
            point: unscaled(&chosen, k),
            neighbors: best,
            colors,
        });
        state.insert(chosen);
    };
    let State { points, edges, .. } = state;

    let qpoints: Vec<QPoint3> = points.iter().map(|p| unscaled(p, k)).collect();
    let (graph, dups) = build_graph(&qpoints, &tq)?;
    if !dups.is_empty() || graph.structure().edges().len() != edges.len() {
        return Err(HuntError::Internal(
            "incremental edges disagree with a rebuild".into(),
        ));
    }
    if outcome == GreedyOutcome::NotThreeColorable && k_colorable(graph.structure(), 3).is_some() {
        return Err(HuntError::Internal("rebuilt graph is 3-colorable".into()));
    }
    Ok(GreedyRun {
        graph,
        trace,
        outcome,
    })
}
