use super::AbstractGraph;

/// Vertex names of the Grötzsch graph in index order: outer cycle `x0..x4`,
/// `y_i` joined to `x_{i-1}` and `x_{i+1}`, and `z` joined to every `y_i`.
pub const GROTZSCH_LABELS: [&str; 11] = [
    "x0", "x1", "x2", "x3", "x4", "y0", "y1", "y2", "y3", "y4", "z",
];

/// The Grötzsch graph without `y2`, in index order.
pub const H_DEVICE_LABELS: [&str; 10] = ["x0", "x1", "x2", "x3", "x4", "y0", "y1", "y3", "y4", "z"];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GrotzschLabel {
    X(usize),
    Y(usize),
    Z,
}

impl GrotzschLabel {
    pub fn index(self) -> usize {
        match self {
            GrotzschLabel::X(i) => i,
            GrotzschLabel::Y(i) => 5 + i,
            GrotzschLabel::Z => 10,
        }
    }
}

pub fn cycle_graph(n: usize) -> AbstractGraph {
    AbstractGraph::new(n, (0..n).map(|i| (i, (i + 1) % n))).expect("valid cycle")
}

fn grotzsch_edges() -> Vec<(GrotzschLabel, GrotzschLabel)> {
    use GrotzschLabel::*;
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((X(i), X((i + 1) % 5)));
        edges.push((Y(i), X((i + 4) % 5)));
        edges.push((Y(i), X((i + 1) % 5)));
        edges.push((Y(i), Z));
    }
    edges
}

pub fn grotzsch_graph() -> AbstractGraph {
    AbstractGraph::new(
        11,
        grotzsch_edges()
            .into_iter()
            .map(|(a, b)| (a.index(), b.index())),
    )
    .expect("valid")
}

/// Grötzsch graph minus `y2`, labeled as [`H_DEVICE_LABELS`].
pub fn h_device() -> AbstractGraph {
    let position = |l: GrotzschLabel| -> Option<usize> {
        let name = GROTZSCH_LABELS[l.index()];
        H_DEVICE_LABELS.iter().position(|n| *n == name)
    };
    let edges = grotzsch_edges()
        .into_iter()
        .filter_map(|(a, b)| Some((position(a)?, position(b)?)));
    AbstractGraph::new(10, edges).expect("valid")
}

/// `x + y + z (mod 3)`.
pub fn mod3_color(p: [i64; 3]) -> u8 {
    (p.iter().sum::<i64>().rem_euclid(3)) as u8
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shapes() {
        let g = grotzsch_graph();
        assert_eq!((g.order(), g.edges().len()), (11, 20));
        assert!(g.is_triangle_free());
        let h = h_device();
        assert_eq!((h.order(), h.edges().len()), (10, 17));
    }

    #[test]
    fn mod3() {
        assert_eq!(mod3_color([0, 0, 0]), 0);
        assert_eq!(mod3_color([3, 0, 1]), 1);
        assert_eq!(mod3_color([-1, 0, 0]), 2);
        // every vector of squared norm 10 changes the color
        for a in -3i64..=3 {
            for b in -3i64..=3 {
                for c in -3i64..=3 {
                    if a * a + b * b + c * c == 10 {
                        assert_ne!(mod3_color([0, 0, 0]), mod3_color([a, b, c]));
                        assert_ne!(mod3_color([5, -7, 2]), mod3_color([5 + a, -7 + b, 2 + c]));
                    }
                }
            }
        }
    }

    #[test]
    fn lattice_distances_two_d_change_color() {
        for d in [5i64, 11, 17, 23] {
            let mut count = 0;
            for a in -20i64..=20 {
                for b in -20i64..=20 {
                    for c in -20i64..=20 {
                        if a * a + b * b + c * c == 2 * d {
                            count += 1;
                            assert_ne!(mod3_color([0, 0, 0]), mod3_color([a, b, c]), "d={d}");
                        }
                    }
                }
            }
            assert!(count > 0);
        }
    }
}
