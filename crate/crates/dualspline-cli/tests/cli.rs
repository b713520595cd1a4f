//! End-to-end tests of the command-line interface.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_dualspline"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

/// Writes the demo outputs into a fresh temp dir and returns (dir, pear.json).
fn demo_dir(name: &str) -> (PathBuf, PathBuf) {
    let dir = std::env::temp_dir().join(format!("dualspline-cli-{name}-{}", std::process::id()));
    let _ = fs::remove_dir_all(&dir);
    let out = run(&["pear-demo", "--outdir", dir.to_str().unwrap()]);
    assert_eq!(code(&out), 0, "pear-demo failed: {}", stdout(&out));
    let pear = dir.join("pear.json");
    assert!(pear.exists());
    (dir, pear)
}

#[test]
fn pear_demo_reproduces_reported_errors() {
    let (dir, _) = demo_dir("demo");
    let text = stdout(&run(&["pear-demo", "--outdir", dir.to_str().unwrap()]));
    assert!(text.contains("1.08e-2"), "{text}");
    assert!(text.contains("2.95e-2"), "{text}");
    assert!(text.contains("3.58e-3"), "{text}");
    assert!(text.contains("7.92e-3"), "{text}");
    assert!(text.contains("2.76e-3"), "{text}");
    assert!(text.contains("3.41e-2"), "{text}");
    assert!(text.contains("4.64e-3"), "{text}");
    assert!(text.contains("1.55e-2"), "{text}");
    assert!(!text.contains("MISMATCH"), "{text}");
    for stem in ["remove7", "remove4", "reduce3", "reduce4_remove3"] {
        assert!(dir.join(format!("{stem}.json")).exists(), "{stem}.json");
        let svg = fs::read_to_string(dir.join(format!("{stem}.svg"))).unwrap();
        assert!(svg.starts_with("<svg"), "{stem}.svg malformed");
        assert!(svg.contains("stroke-dasharray"), "result curve not dashed");
    }
    assert!(dir.join("summary.txt").exists());
    let _ = fs::remove_dir_all(&dir);
}

#[test]
fn pear_demo_fails_on_unwritable_outdir() {
    // a path through an existing file cannot be created
    let blocker = std::env::temp_dir().join(format!("dualspline-blocker-{}", std::process::id()));
    fs::write(&blocker, "not a directory").unwrap();
    let out = run(&[
        "pear-demo",
        "--outdir",
        blocker.join("sub").to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 1);
    let _ = fs::remove_file(&blocker);
}

#[test]
fn reduce_prints_reported_error() {
    let (dir, pear) = demo_dir("reduce");
    let out_path = dir.join("r3.json");
    let svg_path = dir.join("r3.svg");
    let out = run(&[
        "reduce",
        pear.to_str().unwrap(),
        "--degree",
        "3",
        "--out",
        out_path.to_str().unwrap(),
        "--svg",
        svg_path.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("E2 = 2.76e-3"), "{text}");
    assert!(text.contains("Einf = 3.41e-2"), "{text}");
    assert!(svg_path.exists());
    // deterministic output documents
    let first = fs::read(&out_path).unwrap();
    let out = run(&[
        "reduce",
        pear.to_str().unwrap(),
        "--degree",
        "3",
        "--out",
        out_path.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    assert_eq!(
        first,
        fs::read(&out_path).unwrap(),
        "output not byte-stable"
    );
    let _ = fs::remove_dir_all(&dir);
}

#[test]
fn reduce_identity_run_is_exact() {
    let (dir, pear) = demo_dir("identity");
    let out_path = dir.join("same.json");
    let out = run(&[
        "reduce",
        pear.to_str().unwrap(),
        "--degree",
        "5",
        "--out",
        out_path.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));
    let text = stdout(&out);
    let e2_line = text.lines().find(|l| l.starts_with("E2 = ")).unwrap();
    let e2: f64 = e2_line.trim_start_matches("E2 = ").parse().unwrap();
    assert!(e2 <= 1e-12, "identity E2 = {e2}");
    let _ = fs::remove_dir_all(&dir);
}

#[test]
fn malformed_json_exits_one() {
    let path = std::env::temp_dir().join(format!("dualspline-bad-{}.json", std::process::id()));
    fs::write(&path, "{ not json").unwrap();
    let out = run(&[
        "reduce",
        path.to_str().unwrap(),
        "--degree",
        "3",
        "--out",
        "/dev/null",
    ]);
    assert_eq!(code(&out), 1);
    let missing = Path::new("/nonexistent/input.json");
    let out = run(&[
        "reduce",
        missing.to_str().unwrap(),
        "--degree",
        "3",
        "--out",
        "/dev/null",
    ]);
    assert_eq!(code(&out), 1);
    let _ = fs::remove_file(&path);
}

#[test]
fn remove_knots_matches_reported_errors() {
    let (dir, pear) = demo_dir("remove");
    let out_path = dir.join("k12.json");
    let out = run(&[
        "remove-knots",
        pear.to_str().unwrap(),
        "--drop-knots",
        "0.05,0.2,0.35,0.5,0.65,0.8,0.95",
        "--out",
        out_path.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));
    let text = stdout(&out);
    assert!(text.contains("E2 = 1.08e-2"), "{text}");
    assert!(text.contains("Einf = 2.95e-2"), "{text}");

    // dropping nothing: identity
    let out = run(&[
        "remove-knots",
        pear.to_str().unwrap(),
        "--out",
        out_path.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let e2: f64 = text
        .lines()
        .find(|l| l.starts_with("E2 = "))
        .unwrap()
        .trim_start_matches("E2 = ")
        .parse()
        .unwrap();
    assert!(e2 <= 1e-12, "{e2}");

    // dropping a knot that is not present: validation failure
    let out = run(&[
        "remove-knots",
        pear.to_str().unwrap(),
        "--drop-knots",
        "0.123",
        "--out",
        out_path.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 2);
    let _ = fs::remove_dir_all(&dir);
}

#[test]
fn check_random_and_trivial() {
    let out = run(&["check", "--random", "5", "10", "42"]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));
    assert!(stdout(&out).contains("max |D G - I|"));

    let out = run(&["check", "--random", "0", "0", "1"]);
    assert_eq!(code(&out), 0);
}

#[test]
fn check_flags_ill_conditioned_input() {
    let dir = std::env::temp_dir().join(format!("dualspline-cond-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    let path = dir.join("cluster.json");
    let knots: Vec<String> = (0..5)
        .map(|q| format!("{{\"t\": {}, \"mult\": 1}}", 0.5 + q as f64 * 1e-14))
        .collect();
    let points: Vec<String> = (0..9).map(|_| "[0.0, 0.0]".to_string()).collect();
    fs::write(
        &path,
        format!(
            "{{\"degree\": 3, \"interior_knots\": [{}], \"control_points\": [{}]}}",
            knots.join(", "),
            points.join(", ")
        ),
    )
    .unwrap();
    let out = run(&["check", path.to_str().unwrap()]);
    assert_eq!(code(&out), 3, "{}", String::from_utf8_lossy(&out.stderr));
    let _ = fs::remove_dir_all(&dir);
}

#[test]
fn convert_power_single_segment_cubic() {
    let dir = std::env::temp_dir().join(format!("dualspline-conv-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    let input = dir.join("cubic.json");
    fs::write(
        &input,
        r#"{
  "degree": 3,
  "interior_knots": [],
  "control_points": [[1.0], [2.0], [0.5], [-1.0]]
}"#,
    )
    .unwrap();
    let out_path = dir.join("cubic-power.json");
    let out = run(&[
        "convert-power",
        input.to_str().unwrap(),
        "--out",
        out_path.to_str().unwrap(),
        "--verify",
    ]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));
    assert!(stdout(&out).contains("max round-trip error"));
    let doc: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(&out_path).unwrap()).unwrap();
    // Bernstein-to-monomial of [1, 2, 0.5, -1]: 1 + 3t - 7.5t^2 + 2.5t^3
    let comps = doc["components"][0].as_array().unwrap();
    let want = [1.0, 3.0, -7.5, 2.5];
    for (got, want) in comps.iter().zip(&want) {
        assert!((got.as_f64().unwrap() - want).abs() < 1e-9);
    }
    let _ = fs::remove_dir_all(&dir);
}

#[test]
fn convert_power_rejects_multiple_knots() {
    let dir = std::env::temp_dir().join(format!("dualspline-conv2-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    let input = dir.join("double.json");
    fs::write(
        &input,
        r#"{
  "degree": 3,
  "interior_knots": [{"t": 0.5, "mult": 2}],
  "control_points": [[0.0], [1.0], [2.0], [3.0], [4.0], [5.0]]
}"#,
    )
    .unwrap();
    let out = run(&[
        "convert-power",
        input.to_str().unwrap(),
        "--out",
        dir.join("out.json").to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 2);
    let _ = fs::remove_dir_all(&dir);
}

#[test]
fn document_round_trip_via_reduce() {
    // parse(serialize(doc)) = doc: the demo document parses and re-serializes
    // to identical bytes through an identity reduce
    let (dir, pear) = demo_dir("roundtrip");
    let out1 = dir.join("a.json");
    let out2 = dir.join("b.json");
    for out_path in [&out1, &out2] {
        let out = run(&[
            "reduce",
            pear.to_str().unwrap(),
            "--degree",
            "5",
            "--out",
            out_path.to_str().unwrap(),
        ]);
        assert_eq!(code(&out), 0);
    }
    assert_eq!(fs::read(&out1).unwrap(), fs::read(&out2).unwrap());
    let _ = fs::remove_dir_all(&dir);
}

#[test]
fn validation_errors_exit_two() {
    let (dir, pear) = demo_dir("validate");
    // raising the degree is not degree reduction
    let out = run(&[
        "reduce",
        pear.to_str().unwrap(),
        "--degree",
        "7",
        "--out",
        dir.join("x.json").to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 2);
    // reduction below an interior multiplicity is caught by validation
    let bad = dir.join("mult.json");
    fs::write(
        &bad,
        r#"{
  "degree": 3,
  "interior_knots": [{"t": 0.5, "mult": 3}],
  "control_points": [[0.0], [1.0], [2.0], [3.0], [4.0], [5.0], [6.0]]
}"#,
    )
    .unwrap();
    let out = run(&[
        "reduce",
        bad.to_str().unwrap(),
        "--degree",
        "2",
        "--out",
        dir.join("y.json").to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 2);
    let _ = fs::remove_dir_all(&dir);
}
