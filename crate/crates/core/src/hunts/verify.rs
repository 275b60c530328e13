use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;

use super::certificate::{Certificate, CertificateKind};
use super::grotzsch_type::{GrotzschTypeGraph, GROTZSCH_TYPE_LABELS};
use super::report::Report;
use super::subgraph::HDevice;
use super::HuntError;
use crate::cycles::{validate_5cycle, SymCycle};
use crate::geom::equidistant_circle;
use crate::graph::{
    build_graph, chromatic_number, critical_reduce, forced_relations, h_device, k_colorable,
    FORCED_ORDER_BOUND, H_DEVICE_LABELS,
};
use crate::numtheory::{antipodal_dist_sq, construct_chain, phi_case, phi_criteria};
use crate::qcore::{parse_rational, QPoint3, Rational};

pub fn verify_certificate(c: &Certificate) -> Result<Report, HuntError> {
    match c.kind {
        CertificateKind::DirectChromatic => verify_direct(c),
        CertificateKind::GrotzschTypeStructural => verify_grotzsch_type(c),
        CertificateKind::HDevice => verify_h_device(c),
    }
}

/// A bare point set claimed to need four colors.
pub fn verify_points(points: &[QPoint3], t: u64) -> Result<Report, HuntError> {
    verify_direct(&Certificate::new(
        CertificateKind::DirectChromatic,
        t,
        points.to_vec(),
    ))
}

fn t_of(c: &Certificate) -> Rational {
    Rational::from_integer(c.t.into())
}

fn data_rational(c: &Certificate, key: &str) -> Result<Option<Rational>, HuntError> {
    c.get(key)
        .map(|s| {
            parse_rational(s).map_err(|e| HuntError::Malformed {
                line: 0,
                reason: format!("{key}: {e}"),
            })
        })
        .transpose()
}

fn data_point(c: &Certificate, key: &str) -> Result<Option<QPoint3>, HuntError> {
    c.get(key)
        .map(|s| {
            QPoint3::parse(s).map_err(|e| HuntError::Malformed {
                line: 0,
                reason: format!("{key}: {e}"),
            })
        })
        .transpose()
}

/// Listed abstract edges, when present, must be the expected ones.
fn check_listed_edges(report: &mut Report, c: &Certificate, expected: &[(usize, usize)]) {
    if c.edges.is_empty() {
        return;
    }
    let listed: BTreeSet<(usize, usize)> =
        c.edges.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
    let wanted: BTreeSet<(usize, usize)> = expected.iter().copied().collect();
    report.check(
        "listed-edges",
        listed == wanted,
        format!("{} listed, {} expected", listed.len(), wanted.len()),
    );
}

fn verify_direct(c: &Certificate) -> Result<Report, HuntError> {
    let t = t_of(c);
    let mut report = Report::default();
    let (g, dups) = build_graph(&c.vertices, &t)?;
    for d in &dups {
        report.warn(format!(
            "vertex {} repeats vertex {} and was merged",
            d.input_index, d.kept_index
        ));
    }
    let n = g.order();
    report.check("vertices", n > 0, format!("{n} distinct vertices"));
    if !c.edges.is_empty() {
        let bad: Vec<String> = c
            .edges
            .iter()
            .filter_map(|&(u, v)| {
                let d = c.vertices[u].dist_sq(&c.vertices[v]);
                (d != t).then(|| format!("{u}-{v} at {d}"))
            })
            .collect();
        report.check(
            "listed-edges",
            bad.is_empty(),
            if bad.is_empty() {
                "all exact".into()
            } else {
                bad.join(", ")
            },
        );
    }
    let edges = g.structure().edges().len();
    report.check(
        "edges-exact",
        g.verify_edges(),
        format!("{edges} edges at squared distance {t}"),
    );
    let triangle_free = g.structure().is_triangle_free();
    report.check(
        "triangle-free",
        triangle_free,
        if triangle_free {
            "no triangles"
        } else {
            "contains a triangle"
        },
    );
    let three = k_colorable(g.structure(), 3);
    report.check(
        "not-3-colorable",
        three.is_none(),
        match &three {
            None => "exhaustive search finds no proper 3-coloring".to_string(),
            Some(col) => format!("proper 3-coloring: {col}"),
        },
    );
    if three.is_none() {
        let chi = chromatic_number(g.structure());
        report.check("chromatic-number", chi >= 4, format!("χ = {chi}"));
        if chi == 4 {
            let (critical, _) = critical_reduce(g.structure(), 4)?;
            report.note(format!("4-critical subgraph of order {}", critical.order()));
        }
        report.note(format!(
            "χ = {chi}, {}, {n} vertices",
            if triangle_free {
                "triangle-free"
            } else {
                "not triangle-free"
            }
        ));
    }
    Ok(report)
}

fn verify_grotzsch_type(c: &Certificate) -> Result<Report, HuntError> {
    if c.vertices.len() != 25 {
        return Err(HuntError::Malformed {
            line: 0,
            reason: format!("expected 25 vertices, got {}", c.vertices.len()),
        });
    }
    let t = t_of(c);
    let g = GrotzschTypeGraph::from_points(&c.vertices)?;
    let shape = GrotzschTypeGraph::abstract_graph();
    let pts = g.points();
    let label = |i: usize| GROTZSCH_TYPE_LABELS[i];
    let mut report = Report::default();
    check_listed_edges(&mut report, c, shape.edges());
    let degree3 = (0..25).filter(|&u| shape.degree(u) == 3).count();
    report.check(
        "shape",
        shape.order() == 25 && shape.edges().len() == 50 && degree3 == 20,
        format!(
            "{} labeled vertices, {} edges, {degree3} of degree 3",
            shape.order(),
            shape.edges().len()
        ),
    );
    let cycle_ok = validate_5cycle(&g.cycle, &t);
    report.check(
        "cycle",
        cycle_ok.is_ok(),
        match &cycle_ok {
            Ok(()) => "v0..v4 is a 5-cycle without collinear turns".to_string(),
            Err(e) => e.to_string(),
        },
    );

    let describe = |items: &[(usize, usize, Rational)]| -> String {
        items
            .iter()
            .map(|(a, b, d)| format!("|{} {}|^2 = {d}", label(*a), label(*b)))
            .collect::<Vec<_>>()
            .join(", ")
    };
    let bad = g.inexact_edges(&t);
    let on_circles: Vec<_> = bad
        .iter()
        .filter(|(a, b, _)| *a < 5 && (5..20).contains(b))
        .cloned()
        .collect();
    let at_apexes: Vec<_> = bad.iter().filter(|(_, b, _)| *b >= 20).cloned().collect();
    report.check(
        "circles",
        on_circles.is_empty(),
        if on_circles.is_empty() {
            "every X_i, Y_i, Z_i lies on C_i".to_string()
        } else {
            describe(&on_circles)
        },
    );
    report.check(
        "apexes",
        at_apexes.is_empty(),
        if at_apexes.is_empty() {
            "every Q_i is at squared distance t from X_{i-1}, Y_i, Z_{i+1}".to_string()
        } else {
            describe(&at_apexes)
        },
    );
    report.check(
        "edges",
        bad.is_empty(),
        if bad.is_empty() {
            format!("50 of 50 labeled edges at squared distance {t}")
        } else {
            format!(
                "{} of 50 exact; inexact: {}",
                50 - bad.len(),
                describe(&bad)
            )
        },
    );

    for i in 0..25 {
        for j in i + 1..25 {
            if pts[i] == pts[j] {
                report.note(format!(
                    "{} and {} coincide at {}",
                    label(i),
                    label(j),
                    pts[i]
                ));
            }
        }
    }
    let mut extra = Vec::new();
    for i in 0..25 {
        for j in i + 1..25 {
            if pts[i] != pts[j] && !shape.has_edge(i, j) && pts[i].dist_sq(&pts[j]) == t {
                extra.push(format!("{}-{}", label(i), label(j)));
            }
        }
    }
    if !extra.is_empty() {
        report.note(format!("additional unit pairs: {}", extra.join(", ")));
    }

    let labeled_chi = chromatic_number(&shape);
    report.check(
        "labeled-chromatic",
        labeled_chi == 4,
        format!("labeled graph has χ = {labeled_chi}"),
    );
    let (realized, _) = build_graph(&pts, &t)?;
    let colorable = k_colorable(realized.structure(), 3);
    report.check(
        "realized-not-3-colorable",
        colorable.is_none(),
        format!(
            "{} distinct points, {} edges, {}",
            realized.order(),
            realized.structure().edges().len(),
            if colorable.is_none() {
                "no proper 3-coloring"
            } else {
                "3-colorable"
            }
        ),
    );
    if bad.is_empty() && cycle_ok.is_ok() && colorable.is_some() {
        return Err(HuntError::Internal(
            "structural premises hold but the solver found a 3-coloring".into(),
        ));
    }
    Ok(report)
}

fn verify_h_device(c: &Certificate) -> Result<Report, HuntError> {
    if c.vertices.len() != H_DEVICE_LABELS.len() {
        return Err(HuntError::Malformed {
            line: 0,
            reason: format!("expected 10 vertices, got {}", c.vertices.len()),
        });
    }
    let t = t_of(c);
    let device = HDevice::from_points(&c.vertices)?;
    let pts = device.points();
    let h = h_device();
    let label = |i: usize| H_DEVICE_LABELS[i];
    let mut report = Report::default();
    check_listed_edges(&mut report, c, h.edges());

    let bad: Vec<String> = h
        .edges()
        .iter()
        .filter_map(|&(u, v)| {
            let d = pts[u].dist_sq(&pts[v]);
            (d != t).then(|| format!("|{} {}|^2 = {d}", label(u), label(v)))
        })
        .collect();
    report.check(
        "h-edges",
        bad.is_empty(),
        if bad.is_empty() {
            format!("17 of 17 at squared distance {t}")
        } else {
            bad.join(", ")
        },
    );

    let rel = forced_relations(&h, 3, FORCED_ORDER_BOUND)?;
    let (x1, x2, x3, z) = (1, 2, 3, 9);
    let forced = rel.same.contains(&(x2, z)) && rel.different.contains(&(x1, x3));
    let same: Vec<String> = rel
        .same
        .iter()
        .map(|&(u, v)| format!("({},{})", label(u), label(v)))
        .collect();
    report.check(
        "forced-relations",
        forced,
        format!(
            "every 3-coloring gives x2, z one color and x1, x3 two; same-color pairs {}",
            same.join(" ")
        ),
    );

    let x: [QPoint3; 5] = device.x.clone();
    let sym = SymCycle::new(x.clone(), &t);
    match &sym {
        Ok(s) => {
            let mid = s.x(1).midpoint(s.x(3));
            report.check(
                "symmetric-cycle",
                true,
                format!(
                    "|x2 x0|^2 = |x2 x4|^2 = {}; midpoint(x1, x3) = {mid} at squared distance {} from x0 and x4",
                    s.diagonal_sq(),
                    mid.dist_sq(s.x(0))
                ),
            );
        }
        Err(e) => {
            report.check("symmetric-cycle", false, e.to_string());
        }
    }

    if let Some(claimed) = data_point(c, "z")? {
        report.check(
            "z",
            claimed == device.z,
            format!("claimed {claimed}, vertex {}", device.z),
        );
    }
    let forced_sq = device.forced_same_sq();
    if let Some(claimed) = data_rational(c, "h")? {
        report.check(
            "forced-distance",
            claimed == forced_sq,
            format!("claimed {claimed}, recomputed {forced_sq}"),
        );
    }
    let target = &x[1] - &x[0];
    let branch = if phi_criteria(&forced_sq)? {
        let case = phi_case(&forced_sq)?.expect("criteria hold");
        report.check(
            "branch-a",
            true,
            format!("|x2 z|^2 = {forced_sq} meets {case:?}"),
        );
        Some(("A", forced_sq.clone()))
    } else {
        report.note(format!(
            "|x2 z|^2 = {forced_sq} meets none of the closure conditions"
        ));
        let s = equidistant_circle(&x[1], &x[3], &t)?;
        if let Some(claimed) = data_point(c, "center")? {
            report.check(
                "circle-center",
                claimed == s.center,
                format!("claimed {claimed}, recomputed {}", s.center),
            );
        }
        if let Some(claimed) = data_rational(c, "radius_sq")? {
            if claimed != s.radius_sq {
                report.warn(format!(
                    "claimed radius_sq {claimed} is inconsistent; |x1 - center|^2 = {} and the recomputed value {} is used",
                    x[1].dist_sq(&s.center),
                    s.radius_sq
                ));
            }
        }
        let n = s.radius_sq.denom().clone();
        let two_mod_four = n.mod_floor(&BigInt::from(4)) == BigInt::from(2);
        report.check(
            "radius-denominator",
            two_mod_four,
            format!(
                "radius_sq = {} with denominator {n} = {} (mod 4)",
                s.radius_sq,
                n.mod_floor(&BigInt::from(4))
            ),
        );
        if two_mod_four {
            let antipodal = antipodal_dist_sq(&s.radius_sq)?;
            if let Some(claimed) = data_rational(c, "antipodal_sq")? {
                report.check(
                    "antipodal-claim",
                    claimed == antipodal,
                    format!("claimed {claimed}, recomputed {antipodal}"),
                );
            }
            let ok = phi_criteria(&antipodal)?;
            report.check(
                "branch-b",
                ok,
                format!(
                    "antipodal squared distance {antipodal} meets the closure conditions: {ok}"
                ),
            );
            ok.then_some(("B", antipodal))
        } else {
            None
        }
    };
    match branch {
        Some((name, step)) => {
            if let Some(claimed) = c.get("branch") {
                report.check(
                    "branch-claim",
                    claimed == name,
                    format!("claimed {claimed}, established {name}"),
                );
            }
            match construct_chain(&target, &step) {
                Ok(chain) => {
                    report.check(
                        "chain",
                        chain.validate().is_ok(),
                        format!(
                            "x1 - x0 = sum of {} vectors of squared norm {step}",
                            chain.step_count()
                        ),
                    );
                }
                Err(e) => {
                    report.check("chain", false, e.to_string());
                }
            }
        }
        None => {
            report.check("branch", false, "neither branch closes");
        }
    }
    Ok(report)
}
