use std::collections::BTreeSet;

use super::{AbstractGraph, Coloring, GraphError};

const NONE: usize = usize::MAX;

/// Default largest order for which all colorings are enumerated.
pub const FORCED_ORDER_BOUND: usize = 20;

/// DSATUR backtracking with forward checking. Colors are introduced in order,
/// so the first vertex gets 0, the first one adjacent to it gets 1, and so on.
struct Dsatur<'a> {
    g: &'a AbstractGraph,
    k: usize,
    color: Vec<usize>,
    /// `counts[v * k + c]`: neighbors of `v` currently colored `c`.
    counts: Vec<u32>,
    saturation: Vec<usize>,
}

impl<'a> Dsatur<'a> {
    fn new(g: &'a AbstractGraph, k: usize) -> Self {
        let n = g.order();
        Dsatur {
            g,
            k,
            color: vec![NONE; n],
            counts: vec![0; n * k],
            saturation: vec![0; n],
        }
    }

    fn pick(&self) -> Option<usize> {
        (0..self.g.order())
            .filter(|&v| self.color[v] == NONE)
            .max_by(|&a, &b| {
                (self.saturation[a], self.g.degree(a))
                    .cmp(&(self.saturation[b], self.g.degree(b)))
                    .then(b.cmp(&a))
            })
    }

    /// Returns false if some uncolored neighbor lost its last option.
    fn assign(&mut self, v: usize, c: usize) -> bool {
        self.color[v] = c;
        let mut ok = true;
        for &u in self.g.neighbors(v) {
            let slot = &mut self.counts[u * self.k + c];
            *slot += 1;
            if *slot == 1 {
                self.saturation[u] += 1;
                if self.color[u] == NONE && self.saturation[u] == self.k {
                    ok = false;
                }
            }
        }
        ok
    }

    fn unassign(&mut self, v: usize, c: usize) {
        self.color[v] = NONE;
        for &u in self.g.neighbors(v) {
            let slot = &mut self.counts[u * self.k + c];
            *slot -= 1;
            if *slot == 0 {
                self.saturation[u] -= 1;
            }
        }
    }

    fn solve(&mut self, used: usize) -> bool {
        let Some(v) = self.pick() else { return true };
        for c in 0..self.k.min(used + 1) {
            if self.counts[v * self.k + c] != 0 {
                continue;
            }
            let ok = self.assign(v, c);
            if ok && self.solve(used.max(c + 1)) {
                return true;
            }
            self.unassign(v, c);
        }
        false
    }
}

/// A proper coloring with at most `k` colors, or `None` if there is none.
pub fn k_colorable(g: &AbstractGraph, k: usize) -> Option<Coloring> {
    if g.order() == 0 {
        return Some(Coloring(Vec::new()));
    }
    if k == 0 {
        return None;
    }
    let mut solver = Dsatur::new(g, k);
    if solver.solve(0) {
        let coloring = Coloring(solver.color);
        debug_assert!(coloring.is_proper(g));
        Some(coloring)
    } else {
        None
    }
}

pub fn chromatic_number(g: &AbstractGraph) -> usize {
    (0..=g.order())
        .find(|&k| k_colorable(g, k).is_some())
        .expect("n colors always suffice")
}

/// Delete vertices in ascending index order while the chromatic number stays
/// `k`. Returns the reduced graph and the original indices it keeps.
///
/// A vertex found critical stays critical in every subgraph, so one pass over
/// the indices gives the same result as restarting after each deletion.
pub fn critical_reduce(
    g: &AbstractGraph,
    k: usize,
) -> Result<(AbstractGraph, Vec<usize>), GraphError> {
    let chi = chromatic_number(g);
    if chi != k {
        return Err(GraphError::Precondition(format!(
            "chromatic number is {chi}, not {k}"
        )));
    }
    let mut keep: Vec<usize> = (0..g.order()).collect();
    let mut i = 0;
    while i < keep.len() {
        let mut trial = keep.clone();
        trial.remove(i);
        if k_colorable(&g.induced(&trial), k - 1).is_none() {
            keep = trial;
        } else {
            i += 1;
        }
    }
    Ok((g.induced(&keep), keep))
}

/// Every proper `k`-coloring up to renaming colors: vertex `i` may only open
/// the next unused color.
pub fn enumerate_colorings(g: &AbstractGraph, k: usize) -> Vec<Coloring> {
    fn go(
        g: &AbstractGraph,
        k: usize,
        v: usize,
        used: usize,
        color: &mut Vec<usize>,
        out: &mut Vec<Coloring>,
    ) {
        if v == g.order() {
            out.push(Coloring(color.clone()));
            return;
        }
        for c in 0..k.min(used + 1) {
            if g.neighbors(v).iter().any(|&u| u < v && color[u] == c) {
                continue;
            }
            color[v] = c;
            go(g, k, v + 1, used.max(c + 1), color, out);
        }
        color[v] = NONE;
    }
    let mut out = Vec::new();
    go(g, k, 0, 0, &mut vec![NONE; g.order()], &mut out);
    out
}

/// Vertex pairs colored alike, or differently, in every proper `k`-coloring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ForcedRelations {
    pub same: BTreeSet<(usize, usize)>,
    pub different: BTreeSet<(usize, usize)>,
}

pub fn forced_relations(
    g: &AbstractGraph,
    k: usize,
    order_bound: usize,
) -> Result<ForcedRelations, GraphError> {
    if g.order() > order_bound {
        return Err(GraphError::TooLarge {
            order: g.order(),
            bound: order_bound,
        });
    }
    let colorings = enumerate_colorings(g, k);
    if colorings.is_empty() {
        return Err(GraphError::NotColorable(k));
    }
    let n = g.order();
    let mut same = BTreeSet::new();
    let mut different = BTreeSet::new();
    for u in 0..n {
        for v in u + 1..n {
            if colorings.iter().all(|c| c.color(u) == c.color(v)) {
                same.insert((u, v));
            } else if colorings.iter().all(|c| c.color(u) != c.color(v)) {
                different.insert((u, v));
            }
        }
    }
    Ok(ForcedRelations { same, different })
}
