//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Runs without the libtest harness so the lines print in order. The process
//! fails when a criterion fails, except criterion 2, whose literal form cannot
//! hold (see `TABLE_TYPOS`); that one must fail for exactly that reason.

use std::path::PathBuf;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_integer::Roots;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use scavenger_cli::{parse_vertex_file, run};
use scavenger_core::cycles::{find_5cycle, gen_vectors, integer_d_limit, scan_d, validate_5cycle};
use scavenger_core::geom::{circle_param, equidistant_circle, farey_parameters};
use scavenger_core::graph::{
    build_graph, forced_relations, h_device, k_colorable, mod3_color, AbstractGraph,
};
use scavenger_core::hunts::{
    greedy_hunt, verify_certificate, Certificate, GreedyConfig, Line, Report, Verdict,
};
use scavenger_core::numtheory::{
    antipodal_dist_sq, construct_chain, eq_pair_feasible, legendre_solvable, phi_criteria,
    t_values, TernaryForm,
};
use scavenger_core::qcore::{parse_rational, squarefree_part};
use scavenger_core::{QPoint3, QVec3, Rational};

/// Criterion 2 names a single substitution, but the t=34 row for Q4 and the
/// t=66 rows for Y2 and Q2 also disagree with the exact distances.
const TABLE_TYPOS: &str = "t=34 Q4 denominators 11 -> 111; t=66 Y2.z and Q2.y signs";

type Criterion = (u32, fn() -> Outcome, Duration);

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        passed,
        detail: detail.into(),
    }
}

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../data")
        .join(name)
}

fn cert(name: &str) -> Certificate {
    Certificate::parse(&std::fs::read_to_string(data(name)).unwrap()).unwrap()
}

fn q(s: &str) -> Rational {
    parse_rational(s).unwrap()
}

fn detail<'a>(r: &'a Report, name: &str) -> &'a str {
    r.lines
        .iter()
        .find_map(|l| match l {
            Line::Check {
                name: n, detail, ..
            } if n == name => Some(detail.as_str()),
            _ => None,
        })
        .unwrap_or("")
}

fn criterion_1() -> Outcome {
    let file = parse_vertex_file(&data("t22_critical.txt")).unwrap();
    let (g, dups) = build_graph(&file.points, &file.t).unwrap();
    let rescan = (0..g.order()).all(|i| {
        (i + 1..g.order()).all(|j| {
            g.structure().has_edge(i, j) == (g.vertices()[i].dist_sq(&g.vertices()[j]) == file.t)
        })
    });
    let tri_free = g.structure().is_triangle_free();
    let no3 = k_colorable(g.structure(), 3).is_none();
    let four = k_colorable(g.structure(), 4).is_some();
    let ok = file.t == q("22")
        && g.order() == 29
        && dups.is_empty()
        && rescan
        && tri_free
        && no3
        && four;
    outcome(
        ok,
        format!(
            "{} vertices, {} exact edges, triangle-free {tri_free}, χ = 4 {}",
            g.order(),
            g.structure().edges().len(),
            no3 && four
        ),
    )
}

fn criterion_2() -> Outcome {
    let original = verify_certificate(&cert("t34_type_original.cert")).unwrap();
    let x4_fail = original.verdict() == Verdict::Fail
        && detail(&original, "circles") == "|v0 X4|^2 = 41, |v3 X4|^2 = 41";
    let x4_only = verify_certificate(&cert("t34_type_x4_only.cert")).unwrap();
    let t66_original = verify_certificate(&cert("t66_type_original.cert")).unwrap();
    let corrected: Vec<bool> = ["t34_type.cert", "t66_type.cert"]
        .iter()
        .map(|n| {
            let c = cert(n);
            let r = verify_certificate(&c).unwrap();
            r.verdict() == Verdict::Pass
                && detail(&r, "shape") == "25 labeled vertices, 50 edges, 20 of degree 3"
        })
        .collect();
    let literal =
        x4_fail && x4_only.verdict() == Verdict::Pass && t66_original.verdict() == Verdict::Pass;
    let d = format!(
        "t=34 original fails at X4: {x4_fail}; X4 = (0,5,3) alone: {} ({}); t=66 original: {} ({}); with {TABLE_TYPOS} also fixed: t=34 {}, t=66 {}",
        x4_only.verdict(),
        detail(&x4_only, "apexes"),
        t66_original.verdict(),
        detail(&t66_original, "circles"),
        if corrected[0] { "PASS" } else { "FAIL" },
        if corrected[1] { "PASS" } else { "FAIL" },
    );
    // the only acceptable failure: X4 itemized, corrected tables pass, and
    // the remaining failures sit exactly on the rows named in TABLE_TYPOS
    let explained = x4_fail
        && corrected.iter().all(|&c| c)
        && detail(&x4_only, "apexes")
            .split(", ")
            .all(|i| i.contains("Q4"))
        && detail(&t66_original, "circles").contains("Y2");
    Outcome {
        passed: literal,
        detail: if literal || explained {
            d
        } else {
            format!("UNEXPLAINED {d}")
        },
    }
}

fn criterion_3() -> Outcome {
    let path = data("t30_h_device.cert");
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(
        ["scavenger", "verify", path.to_str().unwrap()],
        None,
        &mut out,
        &mut err,
    );
    let text = String::from_utf8(out).unwrap();
    let c = cert("t30_h_device.cert");
    let x = &c.vertices;
    let t = q("30");
    let edges = h_device()
        .edges()
        .iter()
        .filter(|&&(u, v)| x[u].dist_sq(&x[v]) == t)
        .count();
    let rel = forced_relations(&h_device(), 3, 12).unwrap();
    let relations = rel.same.contains(&(2, 9)) && rel.different.contains(&(1, 3));
    let mid = x[1].midpoint(&x[3]);
    let sym = x[2].dist_sq(&x[0]) == q("26")
        && x[2].dist_sq(&x[4]) == q("26")
        && mid.dist_sq(&x[0]) == q("33270/900")
        && mid.dist_sq(&x[4]) == q("33270/900");
    let s = equidistant_circle(&x[1], &x[3], &t).unwrap();
    let center = s.center == QPoint3::parse("13/6 -11/15 169/30").unwrap();
    let radius = s.radius_sq == q("539/30")
        && text.contains("WARN claimed radius_sq 1081/10 is inconsistent");
    let antipodal = antipodal_dist_sq(&s.radius_sq).unwrap();
    let branch = s.radius_sq.denom() % 4u32 == 2u32.into()
        && antipodal == q("1078/15")
        && phi_criteria(&antipodal).unwrap();
    let ok = code == 2 && edges == 17 && relations && sym && center && radius && branch;
    outcome(
        ok,
        format!("exit {code}; {edges}/17 H-edges; forced {relations}; symmetric {sym}; center {center}; radius^2 {} flagged {radius}; antipodal {antipodal} closes {branch}", s.radius_sq),
    )
}

fn brute_colorable(g: &AbstractGraph, k: usize) -> bool {
    let n = g.order();
    let total = k.pow(n as u32);
    (0..total).any(|mut code| {
        let mut color = vec![0; n];
        for c in color.iter_mut() {
            *c = code % k;
            code /= k;
        }
        g.edges().iter().all(|&(u, v)| color[u] != color[v])
    })
}

fn criterion_4() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut checked = 0;
    let mut bad = Vec::new();
    for instance in 0..200 {
        let n = rng.gen_range(1..=9);
        let p: f64 = rng.gen_range(0.1..0.9);
        let edges: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|_| rng.gen_bool(p))
            .collect();
        let g = AbstractGraph::new(n, edges).unwrap();
        for k in 2..=4 {
            let solver = k_colorable(&g, k);
            let sound = solver
                .as_ref()
                .is_none_or(|c| c.is_proper(&g) && c.colors_used() <= k);
            if !sound || solver.is_some() != brute_colorable(&g, k) {
                bad.push((instance, k));
            }
            checked += 1;
        }
    }
    outcome(
        bad.is_empty(),
        format!("{checked} (graph, k) cases, disagreements {bad:?}"),
    )
}

/// Nontrivial solution within Holzer's bounds, found by scanning `x, y`.
fn holzer_search(a: i128, b: i128, c: i128) -> bool {
    let (xb, yb, zb) = (
        (b * c).abs().sqrt(),
        (a * c).abs().sqrt(),
        (a * b).abs().sqrt(),
    );
    (0..=xb).any(|x| {
        (0..=yb).any(|y| {
            let rest = -(a * x * x + b * y * y);
            if rest % c != 0 {
                return false;
            }
            let z2 = rest / c;
            if z2 < 0 {
                return false;
            }
            let z = z2.sqrt();
            z * z == z2 && z <= zb && (x, y, z) != (0, 0, 0)
        })
    })
}

fn criterion_5() -> Outcome {
    let mut forms = 0;
    let mut solvable = 0;
    let mut bad = Vec::new();
    let range: Vec<i128> = (-30..=30).filter(|&v| v != 0).collect();
    for &a in &range {
        for &b in &range {
            for &c in &range {
                let mixed = !(a > 0 && b > 0 && c > 0) && !(a < 0 && b < 0 && c < 0);
                let product = (a * b * c).unsigned_abs() as u64;
                if !mixed || squarefree_part(product).unwrap() != product {
                    continue;
                }
                forms += 1;
                let exact = legendre_solvable(&TernaryForm::new(a, b, c)).unwrap();
                solvable += exact as usize;
                if exact != holzer_search(a, b, c) {
                    bad.push((a, b, c));
                }
            }
        }
    }
    outcome(
        bad.is_empty(),
        format!("{forms} forms, {solvable} solvable, disagreements {bad:?}"),
    )
}

fn criterion_6() -> Outcome {
    let mut vectors = 0;
    let mut bad = Vec::new();
    for d in [5i64, 11, 17, 23] {
        for a in -20i64..=20 {
            for b in -20i64..=20 {
                for c in -20i64..=20 {
                    if a * a + b * b + c * c != 2 * d {
                        continue;
                    }
                    vectors += 1;
                    for base in (0..27).map(|i| [i % 3, i / 3 % 3, i / 9]) {
                        let end = [base[0] + a, base[1] + b, base[2] + c];
                        if mod3_color(base) == mod3_color(end) {
                            bad.push((d, [a, b, c]));
                        }
                    }
                }
            }
        }
    }
    outcome(
        bad.is_empty() && vectors > 0,
        format!(
            "{vectors} vectors over 27 base residues, same-color {}",
            bad.len()
        ),
    )
}

fn criterion_7() -> Outcome {
    let hs = [
        "2", "1/2", "6", "10", "5", "13/5", "2/9", "6/7", "1078/15", "1/8",
    ];
    let targets = [
        QVec3::from_ints(3, 1, 0),
        QVec3::new(q("14/3"), q("1/3"), q("1/3")),
    ];
    let mut pairs = 0;
    let mut bad = Vec::new();
    for h in hs.map(q) {
        for v in &targets {
            pairs += 1;
            let ok = phi_criteria(&h).unwrap()
                && construct_chain(v, &h).is_ok_and(|chain| {
                    let mut sum = QVec3::zero();
                    let mut norms = true;
                    for step in &chain.steps {
                        norms &= step.vector.norm_sq() == h && step.count > 0;
                        sum = &sum
                            + &step
                                .vector
                                .scale(&Rational::from_integer(BigInt::from(step.count)));
                    }
                    norms && &sum == v
                });
            if !ok {
                bad.push(format!("({v}, {h})"));
            }
        }
    }
    outcome(
        bad.is_empty() && pairs == 20,
        format!("{pairs} pairs including h = 2 on (3, 1, 0); failures {bad:?}"),
    )
}

fn criterion_8() -> Outcome {
    let ts: Vec<u64> = t_values(2000).collect();
    let mut bad = Vec::new();
    let mut fractional = Vec::new();
    for &t in &ts {
        match scan_d(t, integer_d_limit(t)) {
            Ok(Some(choice)) if eq_pair_feasible(t, &choice.d).is_ok_and(|v| v.feasible()) => {
                if !choice.d.is_integer() {
                    fractional.push(format!("{t} -> {}", choice.d));
                }
            }
            _ => bad.push(t),
        }
    }
    outcome(bad.is_empty(), format!("{} values of t, all re-certified; non-integer d only for {fractional:?}; failures {bad:?}", ts.len()))
}

fn criterion_9() -> Outcome {
    let ts: Vec<u64> = t_values(500).collect();
    let mut bad = Vec::new();
    for &t in &ts {
        let pool = gen_vectors(t, &[1, 3], 60).unwrap();
        let ok = find_5cycle(&pool)
            .is_some_and(|c| validate_5cycle(&c, &Rational::from_integer(t.into())).is_ok());
        if !ok {
            bad.push(t);
        }
    }
    outcome(
        bad.is_empty(),
        format!(
            "{} values of t with denominators {{1, 3}} and height 60; failures {bad:?}",
            ts.len()
        ),
    )
}

fn criterion_10() -> Outcome {
    let mut circles = 0;
    let mut points = 0;
    let mut off = 0;
    for t in [10u64, 22] {
        let tq = Rational::from_integer(t.into());
        let cycle = find_5cycle(&gen_vectors(t, &[1, 3], 30).unwrap()).unwrap();
        for i in 0..5 {
            let (f0, f1) = (&cycle[(i + 4) % 5], &cycle[(i + 1) % 5]);
            let cp = circle_param(&equidistant_circle(f0, f1, &tq).unwrap(), &cycle[i]).unwrap();
            circles += 1;
            let pts: Vec<QPoint3> = farey_parameters(12)
                .iter()
                .filter_map(|s| cp.point(s).ok())
                .take(100)
                .collect();
            points += pts.len();
            off += pts
                .iter()
                .filter(|p| f0.dist_sq(p) != tq || f1.dist_sq(p) != tq)
                .count();
        }
    }
    outcome(
        circles == 10 && points == 1000 && off == 0,
        format!("{circles} circles, {points} points, {off} off either sphere"),
    )
}

fn criterion_11() -> Outcome {
    let seed: Vec<QPoint3> = ["0 0 0", "14/3 1/3 1/3", "19/3 -1/3 14/3", "6 0 0", "3 3 2"]
        .map(|s| QPoint3::parse(s).unwrap())
        .to_vec();
    let config = GreedyConfig::default();
    let run = greedy_hunt(22, &seed, &config).unwrap();
    let verified = run.succeeded()
        && k_colorable(run.graph.structure(), 3).is_none()
        && verify_certificate(&run.certificate(22)).unwrap().verdict() == Verdict::Pass;
    outcome(
        verified && run.graph.order() <= config.cap,
        format!(
            "box [-{0}, {0}]^3 with denominator {1}: order {2}, not 3-colorable {verified}",
            config.candidates.box_radius,
            config.candidates.denominator,
            run.graph.order()
        ),
    )
}

fn main() {
    // the pinned limits; exact arithmetic means no numeric tolerances
    let criteria: [Criterion; 11] = [
        (1, criterion_1, Duration::from_secs(60)),
        (2, criterion_2, Duration::from_secs(120)),
        (3, criterion_3, Duration::from_secs(60)),
        (4, criterion_4, Duration::from_secs(300)),
        (5, criterion_5, Duration::from_secs(300)),
        (6, criterion_6, Duration::from_secs(300)),
        (7, criterion_7, Duration::from_secs(300)),
        (8, criterion_8, Duration::from_secs(600)),
        (9, criterion_9, Duration::from_secs(600)),
        (10, criterion_10, Duration::from_secs(300)),
        (11, criterion_11, Duration::from_secs(300)),
    ];
    let mut unexpected = Vec::new();
    for (id, check, limit) in criteria {
        let start = Instant::now();
        let Outcome { passed, detail } = check();
        let elapsed = start.elapsed();
        let passed = passed && elapsed <= limit;
        let status = if passed { "PASS" } else { "FAIL" };
        println!(
            "{status} criterion {id}: {detail} [{:.2}s, limit {}s]",
            elapsed.as_secs_f64(),
            limit.as_secs()
        );
        let tolerated = id == 2 && !detail.starts_with("UNEXPLAINED") && elapsed <= limit;
        if !passed && !tolerated {
            unexpected.push(id);
        }
    }
    if !unexpected.is_empty() {
        eprintln!("unexpected failures: {unexpected:?}");
        std::process::exit(1);
    }
}
