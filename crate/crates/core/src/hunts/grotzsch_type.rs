use rayon::prelude::*;

use super::certificate::{Certificate, CertificateKind};
use super::{shells, HuntError};
use crate::cycles::validate_5cycle;
use crate::geom::{apex_points, circle_param, equidistant_circle, CircleParam, Param, RCircle};
use crate::graph::AbstractGraph;
use crate::qcore::{QPoint3, Rational};

/// Vertex names in certificate order: the cycle, then the three circle
/// points of each circle, then the apexes.
pub const GROTZSCH_TYPE_LABELS: [&str; 25] = [
    "v0", "v1", "v2", "v3", "v4", "X0", "X1", "X2", "X3", "X4", "Y0", "Y1", "Y2", "Y3", "Y4", "Z0",
    "Z1", "Z2", "Z3", "Z4", "Q0", "Q1", "Q2", "Q3", "Q4",
];

const fn v(i: usize) -> usize {
    i % 5
}
const fn xl(i: usize) -> usize {
    5 + i % 5
}
const fn yl(i: usize) -> usize {
    10 + i % 5
}
const fn zl(i: usize) -> usize {
    15 + i % 5
}
const fn ql(i: usize) -> usize {
    20 + i % 5
}

/// A 5-cycle `v0..v4` with three points `X_i, Y_i, Z_i` on each circle `C_i`
/// (squared distance `t` from `v_{i-1}` and `v_{i+1}`) and apexes `Q_i`
/// joined to `X_{i-1}, Y_i, Z_{i+1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrotzschTypeGraph {
    pub cycle: [QPoint3; 5],
    pub x: [QPoint3; 5],
    pub y: [QPoint3; 5],
    pub z: [QPoint3; 5],
    pub q: [QPoint3; 5],
}

impl GrotzschTypeGraph {
    /// The 25 labeled vertices with 50 edges, independent of coordinates.
    pub fn abstract_graph() -> AbstractGraph {
        let mut edges = Vec::with_capacity(50);
        for i in 0..5 {
            edges.push((v(i), v(i + 1)));
            for p in [xl(i), yl(i), zl(i)] {
                edges.push((p, v(i + 4)));
                edges.push((p, v(i + 1)));
            }
            edges.push((ql(i), xl(i + 4)));
            edges.push((ql(i), yl(i)));
            edges.push((ql(i), zl(i + 1)));
        }
        AbstractGraph::new(25, edges).expect("valid labels")
    }

    pub fn from_points(points: &[QPoint3]) -> Result<GrotzschTypeGraph, HuntError> {
        if points.len() != 25 {
            return Err(HuntError::Precondition(format!(
                "expected 25 points, got {}",
                points.len()
            )));
        }
        let block =
            |k: usize| -> [QPoint3; 5] { std::array::from_fn(|i| points[5 * k + i].clone()) };
        Ok(GrotzschTypeGraph {
            cycle: block(0),
            x: block(1),
            y: block(2),
            z: block(3),
            q: block(4),
        })
    }

    pub fn points(&self) -> Vec<QPoint3> {
        [&self.cycle, &self.x, &self.y, &self.z, &self.q]
            .into_iter()
            .flat_map(|b| b.iter().cloned())
            .collect()
    }

    /// `C_i`, the circle of points at squared distance `t` from `v_{i-1}` and `v_{i+1}`.
    pub fn circle(&self, i: usize, t: &Rational) -> Result<RCircle, HuntError> {
        Ok(equidistant_circle(
            &self.cycle[(i + 4) % 5],
            &self.cycle[(i + 1) % 5],
            t,
        )?)
    }

    /// Labeled edges whose endpoints are not at squared distance `t`.
    pub fn inexact_edges(&self, t: &Rational) -> Vec<(usize, usize, Rational)> {
        let pts = self.points();
        Self::abstract_graph()
            .edges()
            .iter()
            .filter_map(|&(a, b)| {
                let d = pts[a].dist_sq(&pts[b]);
                (&d != t).then_some((a, b, d))
            })
            .collect()
    }

    pub fn certificate(&self, t: u64) -> Certificate {
        Certificate::new(CertificateKind::GrotzschTypeStructural, t, self.points())
            .with_edges(Self::abstract_graph().edges().iter().copied())
    }
}

/// Result of a Grötzsch-type hunt.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TypeHuntOutcome {
    Found(Box<(GrotzschTypeGraph, Certificate)>),
    /// Index into the parameter triples at which each apex was found; `None`
    /// for the first apex that could not be placed and all after it.
    Exhausted {
        progress: [Option<usize>; 5],
    },
}

/// Extend a 5-cycle to a Grötzsch-type graph.
///
/// Apexes are placed in order `Q0, ..., Q4`. For `Q_i` the parameter triples
/// `(a, b, c)` giving `X_{i-1} = C_{i-1}(a)`, `Y_i = C_i(b)`, `Z_{i+1} = C_{i+1}(c)`
/// are visited in shells of the largest index, and the first triple with a
/// rational apex is kept.
///
/// Coincident points and extra unit pairs are allowed. Identifying two
/// non-adjacent labels or adding edges can only raise the chromatic number, so
/// the labeled graph still certifies 4 colors; the verifier reports both.
pub fn grotzsch_type_hunt(
    t: u64,
    cycle: &[QPoint3; 5],
    params: &[Param],
) -> Result<TypeHuntOutcome, HuntError> {
    let tq = Rational::from_integer(t.into());
    validate_5cycle(cycle, &tq).map_err(|e| HuntError::Precondition(e.to_string()))?;
    let circles: Vec<CircleParam> = (0..5)
        .map(|i| {
            let c = equidistant_circle(&cycle[(i + 4) % 5], &cycle[(i + 1) % 5], &tq)?;
            circle_param(&c, &cycle[i])
        })
        .collect::<Result<_, _>>()?;
    // per circle, the points for each parameter (None where undefined)
    let on_circle: Vec<Vec<Option<QPoint3>>> = circles
        .iter()
        .enumerate()
        .map(|(i, cp)| {
            params
                .iter()
                .map(|s| cp.point(s).ok().filter(|p| p != &cycle[i]))
                .collect()
        })
        .collect();

    let mut placed: Vec<(usize, QPoint3)> = (0..5).map(|i| (v(i), cycle[i].clone())).collect();
    let mut progress = [None; 5];
    let n = params.len();
    for i in 0..5 {
        let (left, mid, right) = ((i + 4) % 5, i, (i + 1) % 5);
        let mut counter = 0usize;
        let mut hit = None;
        for shell in shells::<3>(n) {
            let base = counter;
            counter += shell.len();
            let found = shell
                .par_iter()
                .enumerate()
                .find_map_first(|(k, &[a, b, c])| {
                    let px = on_circle[left][a].as_ref()?;
                    let py = on_circle[mid][b].as_ref()?;
                    let pz = on_circle[right][c].as_ref()?;
                    let apex = apex_points(px, py, pz, &tq).ok()?;
                    let q = apex.points().first()?.clone();
                    Some((
                        base + k,
                        [
                            (xl(left), px.clone()),
                            (yl(mid), py.clone()),
                            (zl(right), pz.clone()),
                            (ql(i), q),
                        ],
                    ))
                });
            if let Some(f) = found {
                hit = Some(f);
                break;
            }
        }
        match hit {
            Some((index, new)) => {
                progress[i] = Some(index);
                placed.extend(new);
            }
            None => return Ok(TypeHuntOutcome::Exhausted { progress }),
        }
    }
    placed.sort_by_key(|(label, _)| *label);
    let points: Vec<QPoint3> = placed.into_iter().map(|(_, p)| p).collect();
    let graph = GrotzschTypeGraph::from_points(&points)?;
    let bad = graph.inexact_edges(&tq);
    if !bad.is_empty() {
        return Err(HuntError::Internal(format!(
            "{} labeled edges are inexact",
            bad.len()
        )));
    }
    let cert = graph.certificate(t);
    Ok(TypeHuntOutcome::Found(Box::new((graph, cert))))
}
