//! Distance graphs, abstract graphs and exact coloring.

mod color;
mod families;

pub use color::{
    chromatic_number, critical_reduce, enumerate_colorings, forced_relations, k_colorable,
    ForcedRelations, FORCED_ORDER_BOUND,
};
pub use families::{
    cycle_graph, grotzsch_graph, h_device, mod3_color, GrotzschLabel, GROTZSCH_LABELS,
    H_DEVICE_LABELS,
};

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

use crate::qcore::{QPoint3, Rational};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph has no vertices")]
    Empty,
    #[error("graph is not {0}-colorable")]
    NotColorable(usize),
    #[error("order {order} exceeds the enumeration bound {bound}")]
    TooLarge { order: usize, bound: usize },
    #[error("edge ({0}, {1}) is a loop or out of range")]
    BadEdge(usize, usize),
    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },
    #[error("precondition violated: {0}")]
    Precondition(String),
}

/// A simple loop-free graph on vertices `0..order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbstractGraph {
    order: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl AbstractGraph {
    /// Duplicate edges are merged; both orientations count as one edge.
    pub fn new(
        order: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, GraphError> {
        let mut adj = vec![Vec::new(); order];
        let mut list = Vec::new();
        for (u, v) in edges {
            if u == v || u >= order || v >= order {
                return Err(GraphError::BadEdge(u, v));
            }
            let (a, b) = (u.min(v), u.max(v));
            if !adj[a].contains(&b) {
                adj[a].push(b);
                adj[b].push(a);
                list.push((a, b));
            }
        }
        adj.iter_mut().for_each(|n| n.sort_unstable());
        list.sort_unstable();
        Ok(AbstractGraph {
            order,
            edges: list,
            adj,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// The subgraph induced on `keep`, relabeled by position in `keep`.
    pub fn induced(&self, keep: &[usize]) -> AbstractGraph {
        let position: HashMap<usize, usize> =
            keep.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let edges = self
            .edges
            .iter()
            .filter_map(|&(u, v)| Some((*position.get(&u)?, *position.get(&v)?)));
        AbstractGraph::new(keep.len(), edges).expect("induced edges are valid")
    }

    pub fn without(&self, v: usize) -> AbstractGraph {
        let keep: Vec<usize> = (0..self.order).filter(|&u| u != v).collect();
        self.induced(&keep)
    }

    pub fn is_triangle_free(&self) -> bool {
        self.edges.iter().all(|&(u, v)| {
            let (a, b) = (&self.adj[u], &self.adj[v]);
            let (mut i, mut j) = (0, 0);
            while i < a.len() && j < b.len() {
                match a[i].cmp(&b[j]) {
                    std::cmp::Ordering::Less => i += 1,
                    std::cmp::Ordering::Greater => j += 1,
                    std::cmp::Ordering::Equal => return false,
                }
            }
            true
        })
    }

    /// Edge list: `u v` per line, 0-based, `#` starts a comment. The order is
    /// one more than the largest index mentioned.
    pub fn parse_edge_list(text: &str) -> Result<AbstractGraph, GraphError> {
        let mut edges = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let parse_err = |reason: &str| GraphError::Parse {
                line: i + 1,
                reason: reason.to_string(),
            };
            let fields: Vec<&str> = line.split_whitespace().collect();
            if fields.len() != 2 {
                return Err(parse_err("expected two vertex indices"));
            }
            let u = fields[0]
                .parse::<usize>()
                .map_err(|_| parse_err("bad vertex index"))?;
            let v = fields[1]
                .parse::<usize>()
                .map_err(|_| parse_err("bad vertex index"))?;
            edges.push((u, v));
        }
        let order = edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0);
        AbstractGraph::new(order, edges)
    }

    pub fn to_edge_list(&self) -> String {
        self.edges
            .iter()
            .map(|(u, v)| format!("{u} {v}\n"))
            .collect()
    }
}

/// Points joined when their squared distance is exactly `t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistGraph {
    vertices: Vec<QPoint3>,
    t: Rational,
    structure: AbstractGraph,
}

/// Input positions merged into an earlier identical point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Duplicate {
    pub input_index: usize,
    pub kept_index: usize,
}

impl DistGraph {
    pub fn vertices(&self) -> &[QPoint3] {
        &self.vertices
    }

    pub fn t(&self) -> &Rational {
        &self.t
    }

    pub fn structure(&self) -> &AbstractGraph {
        &self.structure
    }

    pub fn order(&self) -> usize {
        self.vertices.len()
    }

    /// Full rescan confirming the stored edges are exactly the pairs at squared distance `t`.
    pub fn verify_edges(&self) -> bool {
        let n = self.order();
        (0..n).all(|u| {
            (u + 1..n).all(|v| {
                (self.vertices[u].dist_sq(&self.vertices[v]) == self.t)
                    == self.structure.has_edge(u, v)
            })
        })
    }
}

/// Build the distance graph on `points`, merging repeated points.
pub fn build_graph(
    points: &[QPoint3],
    t: &Rational,
) -> Result<(DistGraph, Vec<Duplicate>), GraphError> {
    if points.is_empty() {
        return Err(GraphError::Empty);
    }
    let mut seen: HashMap<&QPoint3, usize> = HashMap::new();
    let mut vertices = Vec::new();
    let mut duplicates = Vec::new();
    for (i, p) in points.iter().enumerate() {
        match seen.get(p) {
            Some(&k) => duplicates.push(Duplicate {
                input_index: i,
                kept_index: k,
            }),
            None => {
                seen.insert(p, vertices.len());
                vertices.push(p.clone());
            }
        }
    }
    let n = vertices.len();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if &vertices[u].dist_sq(&vertices[v]) == t {
                edges.push((u, v));
            }
        }
    }
    let structure = AbstractGraph::new(n, edges).expect("pairs are in range");
    Ok((
        DistGraph {
            vertices,
            t: t.clone(),
            structure,
        },
        duplicates,
    ))
}

/// A color per vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coloring(pub Vec<usize>);

impl Coloring {
    pub fn color(&self, v: usize) -> usize {
        self.0[v]
    }

    pub fn colors_used(&self) -> usize {
        self.0.iter().max().map_or(0, |m| m + 1)
    }

    pub fn is_proper(&self, g: &AbstractGraph) -> bool {
        self.0.len() == g.order() && g.edges().iter().all(|&(u, v)| self.0[u] != self.0[v])
    }
}

impl fmt::Display for Coloring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}
