//! One function per subcommand. Each returns the text for stdout and an exit
//! code; nothing here touches the process directly.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use anyhow::{bail, ensure, Context};
use num_bigint::BigInt;
use scavenger_core::cycles::{
    find_5cycle, find_symmetric_5cycle, gen_vectors, scan_d, SymCycle, SymSearch,
};
use scavenger_core::geom::{
    circle_param, embed_isosceles_on, equidistant_circle, farey_parameters, Param,
};
use scavenger_core::hunts::{
    greedy_hunt, grotzsch_subgraph_hunt, grotzsch_type_hunt, shell_pairs, verify_certificate,
    verify_points, CandidateSpec, Certificate, GreedyConfig, GreedyOutcome, Report,
    TypeHuntOutcome, Verdict,
};
use scavenger_core::numtheory::{
    legendre_solution, legendre_verdict, normalize, residue_witnesses, IsoscelesVerdict,
    LegendreVerdict, TernaryForm,
};
use scavenger_core::qcore::parse_rational;
use scavenger_core::{QPoint3, Rational};

use crate::config::RunConfig;
use crate::input::{parse_vertex_file, render_vertex_file};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_WARN: i32 = 2;
pub const EXIT_USAGE: i32 = 64;

/// What a command prints and how the process should exit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
}

impl Outcome {
    fn new(code: i32, stdout: String) -> Outcome {
        Outcome { code, stdout }
    }
}

pub fn verdict_code(v: Verdict) -> i32 {
    match v {
        Verdict::Pass => EXIT_PASS,
        Verdict::PassWithWarnings => EXIT_WARN,
        Verdict::Fail => EXIT_FAIL,
    }
}

/// `inf` or a rational.
pub fn parse_param(s: &str) -> anyhow::Result<Param> {
    if s == "inf" {
        return Ok(Param::Infinity);
    }
    Ok(Param::Finite(parse_rational(s)?))
}

/// Comma-separated parameters, or the Farey list of the given height.
pub fn parameter_list(explicit: Option<&str>, height: u64) -> anyhow::Result<Vec<Param>> {
    match explicit {
        Some(list) => list.split(',').map(|s| parse_param(s.trim())).collect(),
        None => Ok(farey_parameters(height)),
    }
}

fn commented(text: &str) -> String {
    text.lines().map(|l| format!("# {l}\n")).collect()
}

fn load_cycle(path: &Path) -> anyhow::Result<(u64, [QPoint3; 5])> {
    let file = parse_vertex_file(path)?;
    let t = file.integer_t()?;
    let n = file.points.len();
    let pts: [QPoint3; 5] = file.points.try_into().map_err(|_| {
        anyhow::anyhow!(
            "{} holds {n} distinct points, expected a 5-cycle",
            path.display()
        )
    })?;
    Ok((t, pts))
}

/// Self-verifies a hunt's certificate, then writes it to the configured
/// output or appends it to `out`. A certificate the verifier rejects is never
/// emitted.
fn emit(cert: &Certificate, config: &RunConfig, out: &mut String) -> anyhow::Result<i32> {
    let report = verify_certificate(cert)?;
    out.push_str(&commented(&report.to_string()));
    ensure!(
        report.verdict() != Verdict::Fail,
        "internal error: the hunt produced a certificate that fails verification"
    );
    match &config.output {
        Some(path) => {
            std::fs::write(path, cert.to_string())
                .with_context(|| format!("cannot write {}", path.display()))?;
            writeln!(out, "# certificate written to {}", path.display())?;
        }
        None => out.push_str(&cert.to_string()),
    }
    Ok(verdict_code(report.verdict()))
}

pub fn verify(path: &Path) -> anyhow::Result<Outcome> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    let report = if Certificate::sniff(&text) {
        let cert = Certificate::parse(&text).with_context(|| format!("in {}", path.display()))?;
        verify_certificate(&cert)?
    } else {
        let file = parse_vertex_file(path)?;
        let t = file.integer_t()?;
        let mut report = Report::default();
        file.warnings.iter().for_each(|w| report.warn(w.clone()));
        let inner = verify_points(&file.points, t)?;
        report.lines.extend(inner.lines);
        report
    };
    Ok(Outcome::new(
        verdict_code(report.verdict()),
        format!("{report}\n"),
    ))
}

pub struct GreedyArgs {
    pub seed: PathBuf,
    pub denominator: i64,
    pub box_radius: i64,
    pub cap: usize,
}

pub fn hunt_greedy(args: &GreedyArgs, config: &RunConfig) -> anyhow::Result<Outcome> {
    let seed = parse_vertex_file(&args.seed)?;
    let t = seed.integer_t()?;
    let greedy = GreedyConfig {
        candidates: CandidateSpec {
            denominator: args.denominator,
            box_radius: args.box_radius,
        },
        cap: args.cap,
    };
    let run = greedy_hunt(t, &seed.points, &greedy)?;
    let mut out = String::new();
    let added = run.trace.len();
    let order = run.graph.order();
    match &run.outcome {
        GreedyOutcome::NotThreeColorable => {
            writeln!(
                out,
                "# not 3-colorable after {added} additions; order {order}"
            )?;
            let code = emit(&run.certificate(t), config, &mut out)?;
            Ok(Outcome::new(code, out))
        }
        GreedyOutcome::CapReached { last_coloring } => {
            writeln!(
                out,
                "# cap {} reached with order {order}; still 3-colorable",
                args.cap
            )?;
            writeln!(out, "# last coloring: {:?}", last_coloring.0)?;
            Ok(Outcome::new(EXIT_FAIL, out))
        }
        GreedyOutcome::NoCandidates { last_coloring } => {
            writeln!(
                out,
                "# candidates exhausted at order {order}; still 3-colorable"
            )?;
            writeln!(out, "# last coloring: {:?}", last_coloring.0)?;
            Ok(Outcome::new(EXIT_FAIL, out))
        }
    }
}

pub fn hunt_grotzsch_type(
    cycle: &Path,
    params: &[Param],
    config: &RunConfig,
) -> anyhow::Result<Outcome> {
    let (t, pts) = load_cycle(cycle)?;
    let mut out = String::new();
    writeln!(
        out,
        "# {} parameters, {} triples per apex",
        params.len(),
        params.len().pow(3)
    )?;
    match grotzsch_type_hunt(t, &pts, params)? {
        TypeHuntOutcome::Found(found) => {
            let code = emit(&found.1, config, &mut out)?;
            Ok(Outcome::new(code, out))
        }
        TypeHuntOutcome::Exhausted { progress } => {
            for (i, p) in progress.iter().enumerate() {
                match p {
                    Some(k) => writeln!(out, "# Q{i} placed at triple {k}")?,
                    None => writeln!(out, "# Q{i} not placed")?,
                }
            }
            writeln!(out, "# exhausted the parameter list")?;
            Ok(Outcome::new(EXIT_FAIL, out))
        }
    }
}

pub fn hunt_grotzsch_subgraph(
    cycle: &Path,
    params: &[Param],
    config: &RunConfig,
) -> anyhow::Result<Outcome> {
    let (t, pts) = load_cycle(cycle)?;
    let sym = SymCycle::new(pts, &Rational::from_integer(t.into()))?;
    let pairs = shell_pairs(params);
    let mut out = String::new();
    writeln!(
        out,
        "# {} parameter pairs; mirror plane {}",
        pairs.len(),
        sym.plane()
    )?;
    match grotzsch_subgraph_hunt(&sym, &pairs)? {
        Some(found) => {
            writeln!(
                out,
                "# parameters ({}, {}) give branch {}",
                found.params.0,
                found.params.1,
                found.branch.name()
            )?;
            let code = emit(&found.certificate, config, &mut out)?;
            Ok(Outcome::new(code, out))
        }
        None => {
            writeln!(out, "# no pair gives a rational z that closes")?;
            Ok(Outcome::new(EXIT_FAIL, out))
        }
    }
}

pub fn find_cycle(t: u64, denominators: &[u64], height: u64) -> anyhow::Result<Outcome> {
    let pool = gen_vectors(t, denominators, height)?;
    let mut out = format!("# {} vectors of squared norm {t}\n", pool.len());
    match find_5cycle(&pool) {
        Some(c) => {
            out.push_str(&render_vertex_file(&Rational::from_integer(t.into()), &c));
            Ok(Outcome::new(EXIT_PASS, out))
        }
        None => {
            out.push_str("# no 5-cycle in this pool\n");
            Ok(Outcome::new(EXIT_FAIL, out))
        }
    }
}

pub fn find_symmetric_cycle(
    t: u64,
    denominators: &[u64],
    height: u64,
    search: &SymSearch,
) -> anyhow::Result<Outcome> {
    let pool = gen_vectors(t, denominators, height)?;
    let mut out = format!("# {} vectors of squared norm {t}\n", pool.len());
    match find_symmetric_5cycle(t, &pool, search) {
        Some(sym) => {
            writeln!(
                out,
                "# |x0 x2|^2 = {}; mirror plane {}",
                sym.diagonal_sq(),
                sym.plane()
            )?;
            out.push_str(&render_vertex_file(sym.t(), sym.points()));
            Ok(Outcome::new(EXIT_PASS, out))
        }
        None => {
            out.push_str("# no symmetric 5-cycle within the bounds\n");
            Ok(Outcome::new(EXIT_FAIL, out))
        }
    }
}

fn describe_triangle(
    out: &mut String,
    label: &str,
    verdict: &IsoscelesVerdict,
) -> anyhow::Result<()> {
    writeln!(out, "{label}: {}", verdict.reason())?;
    if let IsoscelesVerdict::Embeddable(form) = verdict {
        let reduced = normalize(form)?.reduced;
        writeln!(out, "  reduced {reduced}")?;
        for (residue, modulus, root) in residue_witnesses(&reduced).unwrap_or_default() {
            writeln!(out, "  {residue} = {root}^2 (mod {modulus})")?;
        }
    }
    Ok(())
}

pub fn scan_d_command(t: u64, bound: u64) -> anyhow::Result<Outcome> {
    let mut out = String::new();
    match scan_d(t, bound)? {
        Some(choice) => {
            writeln!(out, "d = {}", choice.d)?;
            describe_triangle(
                &mut out,
                &format!("base {t}, legs {}", choice.d),
                &choice.verdict.first,
            )?;
            describe_triangle(
                &mut out,
                &format!("base {}, legs {t}", choice.d),
                &choice.verdict.second,
            )?;
            Ok(Outcome::new(EXIT_PASS, out))
        }
        None => {
            writeln!(out, "no admissible d up to {bound}")?;
            Ok(Outcome::new(EXIT_FAIL, out))
        }
    }
}

pub fn solve_legendre(a: i128, b: i128, c: i128) -> anyhow::Result<Outcome> {
    let form = TernaryForm::new(a, b, c);
    let normalized = normalize(&form)?;
    let reduced = normalized.reduced;
    let mut out = format!("form {form}\n");
    if reduced != form {
        for step in &normalized.steps {
            writeln!(out, "  {step}")?;
        }
        writeln!(out, "reduced {reduced}")?;
    }
    match legendre_verdict(&reduced) {
        LegendreVerdict::Solvable => {
            let (x, y, z) = legendre_solution(&form)?;
            let k = form.coefficients().map(BigInt::from);
            let value = &k[0] * &x * &x + &k[1] * &y * &y + &k[2] * &z * &z;
            ensure!(
                value == BigInt::from(0),
                "internal error: solution does not satisfy the form"
            );
            writeln!(out, "solvable: x = {x}, y = {y}, z = {z}")?;
        }
        LegendreVerdict::SameSign => {
            writeln!(out, "unsolvable: all coefficients have the same sign")?
        }
        LegendreVerdict::NonResidue { residue, modulus } => {
            let k = reduced.coefficients();
            let names = ["a", "b", "c"];
            let (i, j) = [(0, 1, 2), (0, 2, 1), (1, 2, 0)]
                .into_iter()
                .find(|&(i, j, l)| -(k[i] * k[j]) == residue && k[l].unsigned_abs() == modulus)
                .map(|(i, j, _)| (i, j))
                .context("internal error: residue test not found")?;
            writeln!(
                out,
                "unsolvable: -{}{} = {residue} not a QR of {modulus}",
                names[i], names[j]
            )?;
        }
    }
    Ok(Outcome::new(EXIT_PASS, out))
}

pub fn param_circle(
    t: &Rational,
    foci: [&QPoint3; 2],
    known: Option<&QPoint3>,
    params: &[Param],
) -> anyhow::Result<Outcome> {
    let circle = equidistant_circle(foci[0], foci[1], t)?;
    if circle.is_degenerate() {
        bail!(
            "the circle about {} and {} at squared distance {t} is a single point",
            foci[0],
            foci[1]
        );
    }
    let known = match known {
        Some(p) => p.clone(),
        None => embed_isosceles_on(foci[0], foci[1], t)?,
    };
    let cp = circle_param(&circle, &known)?;
    let mut out = String::new();
    writeln!(out, "center {}", circle.center)?;
    writeln!(out, "radius_sq {}", circle.radius_sq)?;
    writeln!(out, "plane {}", circle.plane)?;
    writeln!(out, "known {known}")?;
    for s in params {
        match cp.point(s) {
            Ok(p) => {
                ensure!(
                    &foci[0].dist_sq(&p) == t && &foci[1].dist_sq(&p) == t,
                    "internal error: parameter {s} left the circle"
                );
                writeln!(out, "{s} -> {p}")?;
            }
            Err(e) => writeln!(out, "{s} -> undefined ({e})")?,
        }
    }
    Ok(Outcome::new(EXIT_PASS, out))
}
