//! Fixtures shared by the criterion benches.

use scavenger_core::QPoint3;

/// The 29 vertices of the t = 22 unit-distance graph.
pub fn t22_points() -> Vec<QPoint3> {
    include_str!("../../../data/t22_critical.txt")
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty() && !l.starts_with("t="))
        .map(|l| {
            QPoint3::parse(&l.split_whitespace().collect::<Vec<_>>().join(" "))
                .expect("fixture point")
        })
        .collect()
}

/// The seed 5-cycle used for greedy growth at t = 22.
pub fn t22_seed() -> Vec<QPoint3> {
    ["0 0 0", "14/3 1/3 1/3", "19/3 -1/3 14/3", "6 0 0", "3 3 2"]
        .map(|s| QPoint3::parse(s).expect("fixture point"))
        .to_vec()
}
