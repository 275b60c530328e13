use std::path::PathBuf;

use scavenger_cli::{parse_vertex_text, run, EXIT_FAIL, EXIT_PASS, EXIT_USAGE, EXIT_WARN};

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../data")
        .join(name)
        .to_str()
        .unwrap()
        .to_owned()
}

struct Ran {
    code: i32,
    out: String,
    err: String,
}

fn cli(args: &[&str]) -> Ran {
    cli_env(args, None)
}

fn cli_env(args: &[&str], workers: Option<&str>) -> Ran {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let argv = std::iter::once("scavenger").chain(args.iter().copied());
    let code = run(argv, workers.map(String::from), &mut out, &mut err);
    Ran {
        code,
        out: String::from_utf8(out).unwrap(),
        err: String::from_utf8(err).unwrap(),
    }
}

#[test]
fn verify_exit_codes() {
    assert_eq!(cli(&["verify", &data("t22_critical.txt")]).code, EXIT_PASS);
    assert_eq!(cli(&["verify", &data("t34_type.cert")]).code, EXIT_PASS);
    assert_eq!(cli(&["verify", &data("t30_h_device.cert")]).code, EXIT_WARN);
    let printed = cli(&["verify", &data("t34_type_original.cert")]);
    assert_eq!(printed.code, EXIT_FAIL);
    assert!(printed.out.contains("|v0 X4|^2 = 41"), "{}", printed.out);
    let missing = cli(&["verify", "/nonexistent/file"]);
    assert_eq!(missing.code, EXIT_FAIL);
    assert!(missing.err.starts_with("error: cannot read"));
}

#[test]
fn usage_errors_and_help() {
    assert_eq!(cli(&["frobnicate"]).code, EXIT_USAGE);
    assert_eq!(cli(&["--workers", "0", "scan-d", "30"]).code, EXIT_USAGE);
    assert_eq!(cli_env(&["scan-d", "30"], Some("zero")).code, EXIT_FAIL);
    let help = cli(&["--help"]);
    assert_eq!(help.code, EXIT_PASS);
    assert!(help.out.contains("hunt-greedy"));
}

#[test]
fn duplicate_vertex_is_a_warning() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("dup.txt");
    let mut text = std::fs::read_to_string(data("t22_critical.txt")).unwrap();
    let first = text
        .lines()
        .position(|l| l.split('#').next().unwrap().trim() == "0 0 0")
        .expect("origin row")
        + 1;
    text.push_str("0 0 0\n");
    let last = text.lines().count();
    std::fs::write(&path, text).unwrap();
    let r = cli(&["verify", path.to_str().unwrap()]);
    assert_eq!(r.code, EXIT_WARN, "{}", r.out);
    assert!(
        r.out.contains(&format!("line {last} repeats line {first}")),
        "{}",
        r.out
    );

    std::fs::write(&path, "t=2\n0 0 1/0\n").unwrap();
    let r = cli(&["verify", path.to_str().unwrap()]);
    assert_eq!(r.code, EXIT_FAIL);
    assert!(r.err.contains("line 2, column"), "{}", r.err);
}

#[test]
fn legendre_messages() {
    let r = cli(&["solve-legendre", "1", "1", "-3"]);
    assert_eq!(r.code, EXIT_PASS);
    assert!(
        r.out.contains("unsolvable: -ab = -1 not a QR of 3"),
        "{}",
        r.out
    );
    let r = cli(&["solve-legendre", "1", "1", "-2"]);
    assert!(r.out.contains("solvable: x = "), "{}", r.out);
    let r = cli(&["solve-legendre", "2", "3", "5"]);
    assert!(r
        .out
        .contains("unsolvable: all coefficients have the same sign"));
}

#[test]
fn scan_d_reports_witnesses() {
    let r = cli(&["scan-d", "30"]);
    assert_eq!(r.code, EXIT_PASS);
    assert!(r.out.starts_with("d = 26\n"), "{}", r.out);
    assert!(r.out.contains("(mod "));
    assert_eq!(cli(&["scan-d", "7"]).code, EXIT_FAIL);
}

#[test]
fn worker_count_does_not_change_output() {
    let args = ["find-cycle", "58"];
    let one = cli(&["--workers", "1", args[0], args[1]]);
    let env = cli_env(&args, Some("3"));
    assert_eq!(one.code, EXIT_PASS);
    assert_eq!(one.out, env.out);
}

#[test]
fn hunt_outputs_reverify() {
    let dir = tempfile::tempdir().unwrap();
    let seed = dir.path().join("seed.txt");
    std::fs::write(
        &seed,
        "t=22\n0 0 0\n14/3 1/3 1/3\n19/3 -1/3 14/3\n6 0 0\n3 3 2\n",
    )
    .unwrap();
    let greedy = dir.path().join("greedy.cert");
    let r = cli(&[
        "hunt-greedy",
        "--seed",
        seed.to_str().unwrap(),
        "--out",
        greedy.to_str().unwrap(),
    ]);
    assert_eq!(r.code, EXIT_PASS, "{}{}", r.out, r.err);
    assert!(r.out.contains("not 3-colorable"));
    assert_eq!(cli(&["verify", greedy.to_str().unwrap()]).code, EXIT_PASS);

    let cycle = dir.path().join("cycle.txt");
    std::fs::write(
        &cycle,
        "t=30\n0 0 0\n-1 -2 5\n1 3 4\n16/3 8/15 94/15\n5 2 1\n",
    )
    .unwrap();
    let device = dir.path().join("device.cert");
    let r = cli(&[
        "hunt-grotzsch-subgraph",
        "--cycle",
        cycle.to_str().unwrap(),
        "--height",
        "6",
        "--out",
        device.to_str().unwrap(),
    ]);
    assert_eq!(r.code, EXIT_PASS, "{}{}", r.out, r.err);
    assert!(r.out.contains("branch B"), "{}", r.out);
    assert_ne!(cli(&["verify", device.to_str().unwrap()]).code, EXIT_FAIL);

    // stdout of a cycle search is a vertex file
    let r = cli(&["find-cycle", "22"]);
    let file = parse_vertex_text(&r.out).unwrap();
    assert_eq!(file.integer_t().unwrap(), 22);
    let p = &file.points;
    assert_eq!(p.len(), 5);
    assert!((0..5).all(|i| p[i].dist_sq(&p[(i + 1) % 5]) == file.t));
}

#[test]
fn param_circle_points_are_on_both_spheres() {
    let r = cli(&[
        "param-circle",
        "22",
        "--foci",
        "0 0 0",
        "19/3 -1/3 14/3",
        "--known",
        "14/3 1/3 1/3",
    ]);
    assert_eq!(r.code, EXIT_PASS, "{}{}", r.out, r.err);
    assert!(r.out.contains("radius_sq "));
    assert!(r.out.lines().filter(|l| l.contains(" -> ")).count() > 3);
}
