//! Black-box tests of the `frenet5` binary: exit codes, report contents,
//! CSV shape, and byte determinism.

#![allow(clippy::excessive_precision)] // oracle values quoted in full

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_frenet5"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf-8 stderr")
}

fn scene_file(dir: &tempfile::TempDir, name: &str, text: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path
}

#[test]
fn check_reference_scene_passes_with_expected_transversality() {
    let out = run(&["check", fixture("paper_section5.json").to_str().unwrap()]);
    let text = stdout(&out);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    assert!(text.contains("transversality norm: 0.649073"), "{text}");
    assert!(text.contains("check passed"), "{text}");
    for name in ["X1", "X2", "X3", "X4"] {
        assert!(text.contains(&format!("regularity margin {name}:")), "{text}");
    }
}

#[test]
fn analyze_reference_scene_text_table() {
    let out = run(&["analyze", fixture("paper_section5.json").to_str().unwrap()]);
    let text = stdout(&out);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    assert!(text.contains("status: full"), "{text}");
    assert!(
        text.contains("tangent t: (-0.209657, 0, -0.741249, -0.628971, -0.104828)"),
        "{text}"
    );
    assert!(text.contains("kappa1: 1.25421"), "{text}");
    assert!(text.contains("kappa2: 1.60135"), "{text}");
    assert!(text.contains("kappa4: 2.32159"), "{text}");
}

#[test]
fn analyze_json_is_byte_identical_across_runs() {
    let path = fixture("paper_section5.json");
    let first = run(&["analyze", path.to_str().unwrap(), "--format", "json"]);
    let second = run(&["analyze", path.to_str().unwrap(), "--format", "json"]);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout, "JSON output must be deterministic");

    let doc: serde_json::Value = serde_json::from_slice(&first.stdout).expect("valid JSON");
    assert_eq!(doc["status"], "full");
    let kappa4 = doc["kappa4"].as_f64().unwrap();
    assert!((kappa4 - 2.3215886543608198).abs() < 1e-9, "kappa4 {kappa4}");
    // Every intermediate is present for auditing.
    for key in [
        "normals", "gram", "first_fundamentals", "second_fundamentals", "uprime", "kappa_n",
        "a", "mu", "xi", "eta", "c", "d", "m", "alpha2", "alpha3", "alpha4", "alpha5",
        "darboux",
    ] {
        assert!(!doc[key].is_null(), "missing {key}");
    }
}

#[test]
fn analyze_circle_reports_level_two_degeneracy() {
    let out = run(&["analyze", fixture("circle.json").to_str().unwrap()]);
    let text = stdout(&out);
    assert_eq!(out.status.code(), Some(2), "{text}");
    assert!(text.contains("status: degenerate_at_level_2"), "{text}");
    assert!(text.contains("kappa1: 1\n"), "{text}");
    assert!(text.contains("kappa3: -"), "{text}");
}

#[test]
fn analyze_hyperplanes_reports_level_one_degeneracy() {
    let out = run(&["analyze", fixture("four_hyperplanes.json").to_str().unwrap()]);
    let text = stdout(&out);
    assert_eq!(out.status.code(), Some(2), "{text}");
    assert!(text.contains("status: degenerate_at_level_1"), "{text}");
    assert!(text.contains("kappa1: 0\n"), "{text}");
}

#[test]
fn trace_circle_writes_eleven_uniform_rows() {
    let dir = tempfile::tempdir().unwrap();
    let csv_path = dir.path().join("circle.csv");
    let out = run(&[
        "trace",
        fixture("circle.json").to_str().unwrap(),
        "--steps",
        "10",
        "--step",
        "0.1",
        "--out",
        csv_path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    let csv = std::fs::read_to_string(&csv_path).unwrap();
    assert!(!csv.contains('\r'), "LF line endings only");
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines[0], "s,x1,x2,x3,x4,x5");
    assert_eq!(lines.len(), 12, "header plus 11 rows");
    for (k, line) in lines[1..].iter().enumerate() {
        let s: f64 = line.split(',').next().unwrap().parse().unwrap();
        assert!((s - 0.1 * k as f64).abs() < 1e-6, "row {k} s = {s}");
    }
}

#[test]
fn trace_profile_on_line_emits_zero_curvature_and_empty_cells() {
    let dir = tempfile::tempdir().unwrap();
    let csv_path = dir.path().join("line.csv");
    let out = run(&[
        "trace",
        fixture("four_hyperplanes.json").to_str().unwrap(),
        "--steps",
        "5",
        "--step",
        "0.01",
        "--profile",
        "--out",
        csv_path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    let csv = std::fs::read_to_string(&csv_path).unwrap();
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(
        lines[0],
        "s,x1,x2,x3,x4,x5,k1,k2,k3,k4,kn1,kn2,kn3,kn4,k1g1,k1g2,k1g3,k1g4"
    );
    for line in &lines[1..] {
        let cells: Vec<&str> = line.split(',').collect();
        assert_eq!(cells.len(), 18);
        let k1: f64 = cells[6].parse().unwrap();
        assert!(k1.abs() <= 1e-9, "k1 = {k1}");
        // Degenerate higher curvatures are empty cells.
        assert_eq!(cells[7], "");
        assert_eq!(cells[8], "");
        assert_eq!(cells[9], "");
    }
}

#[test]
fn trace_centered_brackets_the_start_point() {
    let dir = tempfile::tempdir().unwrap();
    let csv_path = dir.path().join("centered.csv");
    let out = run(&[
        "trace",
        fixture("paper_section5.json").to_str().unwrap(),
        "--steps",
        "20",
        "--centered",
        "--out",
        csv_path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    let csv = std::fs::read_to_string(&csv_path).unwrap();
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines.len(), 22, "header plus 21 rows");
    let first_s: f64 = lines[1].split(',').next().unwrap().parse().unwrap();
    let mid_s: f64 = lines[11].split(',').next().unwrap().parse().unwrap();
    assert!(first_s < 0.0 && mid_s.abs() < 1e-12, "{first_s} {mid_s}");
}

#[test]
fn three_surface_scene_is_an_input_error() {
    let dir = tempfile::tempdir().unwrap();
    let path = scene_file(
        &dir,
        "three.json",
        r#"{
            "surfaces": [
                {"name": "H1", "components": ["0", "u1", "u2", "u3", "u4"]},
                {"name": "H2", "components": ["u1", "0", "u2", "u3", "u4"]},
                {"name": "H3", "components": ["u1", "u2", "0", "u3", "u4"]}
            ],
            "point": {"params": [[0,0,0,0],[0,0,0,0],[0,0,0,0],[0,0,0,0]]}
        }"#,
    );
    let out = run(&["check", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("expected 4 surfaces"), "{}", stderr(&out));
}

#[test]
fn unknown_parameter_in_component_is_an_input_error() {
    let dir = tempfile::tempdir().unwrap();
    let path = scene_file(
        &dir,
        "u5.json",
        r#"{
            "surfaces": [
                {"name": "H1", "components": ["0", "u1", "u2", "u3", "sin(u5)"]},
                {"name": "H2", "components": ["u1", "0", "u2", "u3", "u4"]},
                {"name": "H3", "components": ["u1", "u2", "0", "u3", "u4"]},
                {"name": "H4", "components": ["u1", "u2", "u3", "0", "u4"]}
            ],
            "point": {"params": [[0,0,0,0],[0,0,0,0],[0,0,0,0],[0,0,0,0]]}
        }"#,
    );
    let out = run(&["analyze", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let msg = stderr(&out);
    assert!(msg.contains("H1") && msg.contains("component 5"), "{msg}");
}

#[test]
fn mismatched_point_tuples_fail_the_check() {
    let dir = tempfile::tempdir().unwrap();
    let path = scene_file(
        &dir,
        "mismatch.json",
        r#"{
            "surfaces": [
                {"name": "M1", "components": ["cos(u1)", "sin(u1)", "u2", "u3", "u4"]},
                {"name": "H3", "components": ["u1", "u2", "0", "u3", "u4"]},
                {"name": "H4", "components": ["u1", "u2", "u3", "0", "u4"]},
                {"name": "H5", "components": ["u1", "u2", "u3", "u4", "0"]}
            ],
            "point": {"params": [[0.1,0,0,0],[1,0,0,0],[1,0,0,0],[1,0,0,0]]}
        }"#,
    );
    let out = run(&["check", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2), "{}", stdout(&out));
    assert!(stdout(&out).contains("check failed: point agreement"), "{}", stdout(&out));
}

#[test]
fn duplicated_surfaces_fail_transversality() {
    let dir = tempfile::tempdir().unwrap();
    let path = scene_file(
        &dir,
        "dup.json",
        r#"{
            "surfaces": [
                {"name": "H5a", "components": ["u1", "u2", "u3", "u4", "0"]},
                {"name": "H5b", "components": ["u1", "u2", "u3", "u4", "0"]},
                {"name": "H3", "components": ["u1", "u2", "0", "u3", "u4"]},
                {"name": "H4", "components": ["u1", "u2", "u3", "0", "u4"]}
            ],
            "point": {"params": [[0,0,0,0],[0,0,0,0],[0,0,0,0],[0,0,0,0]]}
        }"#,
    );
    let out = run(&["check", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2), "{}", stdout(&out));
    assert!(stdout(&out).contains("check failed: transversality"), "{}", stdout(&out));
}

#[test]
fn trace_divergence_reports_failing_step_with_exit_three() {
    let dir = tempfile::tempdir().unwrap();
    let path = scene_file(
        &dir,
        "boxed.json",
        r#"{
            "surfaces": [
                {"name": "M1", "components": ["cos(u1)", "sin(u1)", "u2", "u3", "u4"],
                 "domain": [[-0.05, 0.05], [-1, 1], [-1, 1], [-1, 1]]},
                {"name": "H3", "components": ["u1", "u2", "0", "u3", "u4"]},
                {"name": "H4", "components": ["u1", "u2", "u3", "0", "u4"]},
                {"name": "H5", "components": ["u1", "u2", "u3", "u4", "0"]}
            ],
            "point": {"params": [[0,0,0,0],[1,0,0,0],[1,0,0,0],[1,0,0,0]]}
        }"#,
    );
    let csv_path = dir.path().join("never.csv");
    let out = run(&[
        "trace",
        path.to_str().unwrap(),
        "--steps",
        "100",
        "--step",
        "0.01",
        "--out",
        csv_path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(3), "{}", stderr(&out));
    assert!(stderr(&out).contains("step"), "{}", stderr(&out));
}

#[test]
fn help_exits_zero() {
    let out = run(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
}
