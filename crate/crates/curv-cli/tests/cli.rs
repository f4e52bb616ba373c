use std::process::Command;

use serde_json::Value;
use tempfile::TempDir;

use curv::cellcomplex::attach_two_cells;
use curv::{CellComplex, Rational, Scalar, WeightedGraph};
use curv_cli::input::Input;

fn curv_bin(args: &[&str], envs: &[(&str, &str)]) -> (i32, String, String) {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_curv"));
    cmd.args(args);
    for (key, value) in envs {
        cmd.env(key, value);
    }
    let out = cmd.output().expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).expect("utf-8 stdout"),
        String::from_utf8(out.stderr).expect("utf-8 stderr"),
    )
}

fn write_input(dir: &TempDir, name: &str, text: &str) -> String {
    let path = dir.path().join(name);
    std::fs::write(&path, text).expect("write input");
    path.to_str().expect("utf-8 path").to_string()
}

const TRIANGLE: &str = r#"{
  "vertices": [{"id": 1, "m": 1}, {"id": 2, "m": 1}, {"id": 3, "m": 1}],
  "edges": [{"u": 1, "v": 2, "m": 1}, {"u": 2, "v": 3, "m": 1}, {"u": 1, "v": 3, "m": 1}],
  "two_cells": [{"cycle": [1, 2, 3], "m": 1}]
}"#;

const SIX_VERTEX: &str = r#"{
  "vertices": [{"id": 1, "m": 1}, {"id": 2, "m": 1}, {"id": 3, "m": 1},
               {"id": 4, "m": 1}, {"id": 5, "m": 1}, {"id": 6, "m": 1}],
  "edges": [{"u": 1, "v": 2, "m": 1}, {"u": 1, "v": 3, "m": 1}, {"u": 2, "v": 3, "m": 1},
            {"u": 2, "v": 4, "m": 1}, {"u": 3, "v": 4, "m": 1}, {"u": 3, "v": 5, "m": 1},
            {"u": 4, "v": 5, "m": 1}, {"u": 4, "v": 6, "m": 1}, {"u": 5, "v": 6, "m": 1}]
}"#;

/// The six-vertex graph with the 2-cell weights that attain the max-min
/// optimum 2/3.
const SIX_VERTEX_OPTIMAL: &str = r#"{
  "vertices": [{"id": 1, "m": 1}, {"id": 2, "m": 1}, {"id": 3, "m": 1},
               {"id": 4, "m": 1}, {"id": 5, "m": 1}, {"id": 6, "m": 1}],
  "edges": [{"u": 1, "v": 2, "m": 1}, {"u": 1, "v": 3, "m": 1}, {"u": 2, "v": 3, "m": 1},
            {"u": 2, "v": 4, "m": 1}, {"u": 3, "v": 4, "m": 1}, {"u": 3, "v": 5, "m": 1},
            {"u": 4, "v": 5, "m": 1}, {"u": 4, "v": 6, "m": 1}, {"u": 5, "v": 6, "m": 1}],
  "two_cells": [{"cycle": [1, 2, 3], "m": "2/3"}, {"cycle": [2, 3, 4], "m": "1/3"},
                {"cycle": [3, 4, 5], "m": "1/3"}, {"cycle": [4, 5, 6], "m": "2/3"},
                {"cycle": [1, 2, 4, 3], "m": "2/3"}, {"cycle": [2, 3, 5, 4], "m": "2/3"},
                {"cycle": [3, 4, 6, 5], "m": "2/3"}]
}"#;

fn parse_stdout(stdout: &str) -> Value {
    serde_json::from_str(stdout).expect("stdout is JSON")
}

#[test]
fn triangle_all_methods_agree_exactly() {
    let dir = TempDir::new().unwrap();
    let path = write_input(&dir, "triangle.json", TRIANGLE);
    let (code, stdout, _) = curv_bin(
        &["ollivier", &path, "--all", "--verify-all-methods", "--exact"],
        &[],
    );
    assert_eq!(code, 0);
    let report = parse_stdout(&stdout);
    assert_eq!(report["schema"], 1);
    assert_eq!(report["agree"], true);
    let edges = report["edges"].as_array().unwrap();
    assert_eq!(edges.len(), 3);
    for entry in edges {
        for method in ["potential", "oneform", "kantorovich", "penalty"] {
            assert_eq!(entry["kappa"][method], "3", "method {method}");
        }
    }
}

#[test]
fn forman_reports_triangle_edges_and_cell() {
    let dir = TempDir::new().unwrap();
    let path = write_input(&dir, "triangle.json", TRIANGLE);
    let (code, stdout, _) = curv_bin(&["forman", &path, "--exact"], &[]);
    assert_eq!(code, 0);
    let report = parse_stdout(&stdout);
    assert_eq!(report["dim"], 1);
    for cell in report["cells"].as_array().unwrap() {
        assert_eq!(cell["f"], "3");
    }

    let (code, stdout, _) = curv_bin(&["forman", &path, "--dim", "2", "--exact"], &[]);
    assert_eq!(code, 0);
    let report = parse_stdout(&stdout);
    assert_eq!(report["cells"][0]["cell"], serde_json::json!([1, 2, 3]));
    assert_eq!(report["cells"][0]["f"], "3");
}

#[test]
fn forman_omega_adds_a_column() {
    let dir = TempDir::new().unwrap();
    let text = r#"{
      "vertices": [{"id": 1, "m": 1}, {"id": 2, "m": 1}, {"id": 3, "m": 1}],
      "edges": [{"u": 1, "v": 2, "m": 1, "omega": 1},
                {"u": 2, "v": 3, "m": 1, "omega": 2}]
    }"#;
    let path = write_input(&dir, "path.json", text);
    let (code, stdout, _) = curv_bin(&["forman", &path, "--omega", "--exact"], &[]);
    assert_eq!(code, 0);
    let report = parse_stdout(&stdout);
    let cells = report["cells"].as_array().unwrap();
    assert_eq!(cells[0]["f"], "1");
    assert_eq!(cells[0]["f_omega"], "0");
    assert_eq!(cells[1]["f"], "1");
    assert_eq!(cells[1]["f_omega"], "3/2");
}

#[test]
fn ollivier_single_edge_on_a_path() {
    let dir = TempDir::new().unwrap();
    let text = r#"{
      "vertices": [{"id": 1, "m": 1}, {"id": 2, "m": 1}, {"id": 3, "m": 1}],
      "edges": [{"u": 1, "v": 2, "m": 1}, {"u": 2, "v": 3, "m": 1}]
    }"#;
    let path = write_input(&dir, "path.json", text);
    let (code, stdout, _) = curv_bin(&["ollivier", &path, "--edge", "1", "2", "--exact"], &[]);
    assert_eq!(code, 0);
    let report = parse_stdout(&stdout);
    assert_eq!(report["edges"][0]["kappa"]["potential"], "1");
}

#[test]
fn maxmin_six_vertex_reaches_two_thirds() {
    let dir = TempDir::new().unwrap();
    let path = write_input(&dir, "six.json", SIX_VERTEX);
    let (code, stdout, _) = curv_bin(&["maxmin", &path, "--exact", "--emit-witness"], &[]);
    assert_eq!(code, 0);
    let report = parse_stdout(&stdout);
    assert_eq!(report["r_star"], "2/3");
    assert_eq!(report["dual_value"], "2/3");
    assert_eq!(report["min_forman"], "2/3");
    assert_eq!(report["primal_dual_equal"], true);
    assert_eq!(report["dual_feasible"], true);
    assert_eq!(report["candidates"], 9);
    let j = report["witness"]["j"].as_array().unwrap();
    assert_eq!(j.len(), 9);
    assert_eq!(j[0].as_array().unwrap().len(), 9);
    assert_eq!(report["witness"]["cycle_weights"].as_array().unwrap().len(), 9);
}

#[test]
fn maxmin_on_a_tree_is_plain_forman() {
    let dir = TempDir::new().unwrap();
    let text = r#"{
      "vertices": [{"id": 1, "m": 1}, {"id": 2, "m": 1}, {"id": 3, "m": 1}],
      "edges": [{"u": 1, "v": 2, "m": 1}, {"u": 2, "v": 3, "m": 1}]
    }"#;
    let path = write_input(&dir, "tree.json", text);
    let (code, stdout, _) = curv_bin(&["maxmin", &path, "--exact"], &[]);
    assert_eq!(code, 0);
    let report = parse_stdout(&stdout);
    assert_eq!(report["candidates"], 0);
    assert_eq!(report["r_star"], "1");
    assert_eq!(report["cycle_weights"].as_array().unwrap().len(), 0);
}

#[test]
fn check_passes_on_the_optimal_complex() {
    let dir = TempDir::new().unwrap();
    let path = write_input(&dir, "optimal.json", SIX_VERTEX_OPTIMAL);
    let (code, stdout, _) = curv_bin(&["check", &path, "--exact"], &[]);
    assert_eq!(code, 0, "stdout: {stdout}");
    let report = parse_stdout(&stdout);
    assert_eq!(report["pass"], true);
    let checks = report["checks"].as_array().unwrap();
    assert_eq!(checks.len(), 3);
    let diameter = checks.iter().find(|c| c["name"] == "diameter").unwrap();
    assert_eq!(diameter["status"], "pass");
    assert_eq!(diameter["r"], "2/3");
    assert_eq!(diameter["diam"], "3");
    assert_eq!(diameter["bound"], "9");
}

#[test]
fn check_subset_flags_run_only_requested() {
    let dir = TempDir::new().unwrap();
    let path = write_input(&dir, "six.json", SIX_VERTEX);
    let (code, stdout, _) = curv_bin(&["check", &path, "--coincidence", "--exact"], &[]);
    assert_eq!(code, 0);
    let report = parse_stdout(&stdout);
    let checks = report["checks"].as_array().unwrap();
    assert_eq!(checks.len(), 1);
    assert_eq!(checks[0]["name"], "coincidence");
    assert_eq!(checks[0]["status"], "pass");
}

#[test]
fn malformed_input_exits_2() {
    let dir = TempDir::new().unwrap();
    let path = write_input(&dir, "bad.json", "not json");
    let (code, _, stderr) = curv_bin(&["forman", &path], &[]);
    assert_eq!(code, 2);
    assert!(stderr.contains("error"));
}

#[test]
fn missing_file_exits_2() {
    let (code, _, stderr) = curv_bin(&["forman", "/nonexistent/input.json"], &[]);
    assert_eq!(code, 2);
    assert!(stderr.contains("cannot read"));
}

#[test]
fn negative_weight_exits_3() {
    let dir = TempDir::new().unwrap();
    let text = r#"{
      "vertices": [{"id": 1, "m": 1}, {"id": 2, "m": 1}],
      "edges": [{"u": 1, "v": 2, "m": -1}]
    }"#;
    let path = write_input(&dir, "negative.json", text);
    let (code, _, stderr) = curv_bin(&["forman", &path], &[]);
    assert_eq!(code, 3);
    assert!(stderr.contains("non-positive weight"));
}

#[test]
fn transport_methods_reject_edge_lengths() {
    let dir = TempDir::new().unwrap();
    let text = r#"{
      "vertices": [{"id": 1, "m": 1}, {"id": 2, "m": 1}, {"id": 3, "m": 1}],
      "edges": [{"u": 1, "v": 2, "m": 1, "omega": 1},
                {"u": 2, "v": 3, "m": 1, "omega": "19/10"}]
    }"#;
    let path = write_input(&dir, "omega.json", text);
    let (code, _, stderr) = curv_bin(
        &["ollivier", &path, "--all", "--method", "kantorovich"],
        &[],
    );
    assert_eq!(code, 2);
    assert!(stderr.contains("unit edge lengths"));

    // All-unit omegas are the same as no omegas; the method runs.
    let unit = r#"{
      "vertices": [{"id": 1, "m": 1}, {"id": 2, "m": 1}, {"id": 3, "m": 1}],
      "edges": [{"u": 1, "v": 2, "m": 1, "omega": 1}, {"u": 2, "v": 3, "m": 1, "omega": 1}]
    }"#;
    let path = write_input(&dir, "unit.json", unit);
    let (code, stdout, _) = curv_bin(
        &["ollivier", &path, "--all", "--method", "kantorovich", "--exact"],
        &[],
    );
    assert_eq!(code, 0);
    let report = parse_stdout(&stdout);
    assert_eq!(report["edges"][0]["kappa"]["kantorovich"], "1");
}

#[test]
fn disconnected_graph_fails_kantorovich_with_exit_3() {
    let dir = TempDir::new().unwrap();
    let text = r#"{
      "vertices": [{"id": 1, "m": 1}, {"id": 2, "m": 1}, {"id": 3, "m": 1}, {"id": 4, "m": 1}],
      "edges": [{"u": 1, "v": 2, "m": 1}, {"u": 3, "v": 4, "m": 1}]
    }"#;
    let path = write_input(&dir, "disconnected.json", text);
    let (code, _, stderr) = curv_bin(&["ollivier", &path, "--all", "--method", "kantorovich"], &[]);
    assert_eq!(code, 3);
    assert!(stderr.contains("different components"));
}

#[test]
fn usage_errors_exit_2() {
    let dir = TempDir::new().unwrap();
    let path = write_input(&dir, "triangle.json", TRIANGLE);
    let (code, _, _) = curv_bin(&["forman", &path, "--dim", "3"], &[]);
    assert_eq!(code, 2);
    let (code, _, _) = curv_bin(&["forman", &path, "--dim", "2", "--omega"], &[]);
    assert_eq!(code, 2);
    // Neither --edge nor --all.
    let (code, _, _) = curv_bin(&["ollivier", &path], &[]);
    assert_eq!(code, 2);
    let (code, _, _) = curv_bin(&["ollivier", &path, "--all"], &[("CURV_JOBS", "many")]);
    assert_eq!(code, 2);
}

#[test]
fn unknown_edge_exits_3() {
    let dir = TempDir::new().unwrap();
    let path = write_input(&dir, "triangle.json", TRIANGLE);
    let (code, _, stderr) = curv_bin(&["ollivier", &path, "--edge", "1", "5"], &[]);
    assert_eq!(code, 3);
    assert!(stderr.contains("error"));
}

#[test]
fn reports_are_deterministic_across_job_counts() {
    let dir = TempDir::new().unwrap();
    let path = write_input(&dir, "six.json", SIX_VERTEX);
    let args = ["ollivier", &path[..], "--all", "--verify-all-methods", "--exact"];
    let (code1, one_job, _) = curv_bin(&args, &[("CURV_JOBS", "1")]);
    let (code4, four_jobs, _) = curv_bin(&args, &[("CURV_JOBS", "4")]);
    assert_eq!(code1, 0);
    assert_eq!(code4, 0);
    assert_eq!(one_job, four_jobs);
}

#[test]
fn table_format_renders_maxmin() {
    let dir = TempDir::new().unwrap();
    let path = write_input(&dir, "six.json", SIX_VERTEX);
    let (code, stdout, _) = curv_bin(&["maxmin", &path, "--exact", "--format", "table"], &[]);
    assert_eq!(code, 0);
    assert!(stdout.contains("R*"));
    assert!(stdout.contains("2/3"));
    assert!(stdout.contains("cycle"));
}

#[test]
fn roundtrip_preserves_matrices_and_lengths() {
    let graph = WeightedGraph::<Rational>::new(
        vec![
            (1, Rational::one()),
            (2, Rational::ratio(1, 2)),
            (3, Rational::from_int(2)),
            (4, Rational::one()),
        ],
        vec![
            (1, 2, Rational::ratio(2, 3)),
            (2, 3, Rational::one()),
            (1, 3, Rational::ratio(3, 2)),
            (3, 4, Rational::one()),
            (2, 4, Rational::ratio(1, 3)),
        ],
    )
    .unwrap();
    let cells = vec![
        (graph.canonical_cycle(&[1, 2, 3]).unwrap(), Rational::ratio(1, 6)),
        (graph.canonical_cycle(&[2, 3, 4]).unwrap(), Rational::from_int(2)),
    ];
    let complex = attach_two_cells(graph, &cells).unwrap();
    let omega: Vec<Rational> = (1..=5).map(|k| Rational::ratio(k + 9, 10)).collect();

    let serialized = Input::from_complex(&complex, Some(&omega)).to_json_string();
    let reparsed = Input::parse(&serialized).unwrap();
    let complex2: CellComplex<Rational> = reparsed.complex().unwrap();
    let omega2 = reparsed.omega(complex2.skeleton()).unwrap().unwrap();

    assert_eq!(omega, omega2);
    for dim in 0..3 {
        assert_eq!(complex.n_cells(dim), complex2.n_cells(dim));
        for cell in 0..complex.n_cells(dim) {
            assert_eq!(complex.weight(dim, cell), complex2.weight(dim, cell));
        }
    }
    for k in 0..2 {
        assert_eq!(complex.coboundary_matrix(k), complex2.coboundary_matrix(k));
    }
    assert_eq!(complex.hodge_matrix(1), complex2.hodge_matrix(1));
}

#[test]
fn float_mode_reports_numbers() {
    let dir = TempDir::new().unwrap();
    let path = write_input(&dir, "triangle.json", TRIANGLE);
    let (code, stdout, _) = curv_bin(&["ollivier", &path, "--edge", "1", "2"], &[]);
    assert_eq!(code, 0);
    let report = parse_stdout(&stdout);
    let kappa = report["edges"][0]["kappa"]["potential"].as_f64().unwrap();
    assert!((kappa - 3.0).abs() < 1e-9);
}

/// A consumer that stops reading (`curv ... | head`) must not crash the
/// program: the report write sees a broken pipe and is quietly skipped.
#[cfg(unix)]
#[test]
fn closed_stdout_is_not_an_error() {
    use std::os::fd::OwnedFd;
    use std::os::unix::net::UnixStream;
    use std::process::Stdio;

    let dir = TempDir::new().unwrap();
    let path = write_input(&dir, "triangle.json", TRIANGLE);
    let (reader, writer) = UnixStream::pair().expect("socket pair");
    drop(reader); // the reading end is gone before the process even starts
    let status = Command::new(env!("CARGO_BIN_EXE_curv"))
        .args(["forman", "--exact", &path])
        .stdout(Stdio::from(OwnedFd::from(writer)))
        .stderr(Stdio::null())
        .status()
        .expect("binary runs");
    assert_eq!(status.code(), Some(0));
}
