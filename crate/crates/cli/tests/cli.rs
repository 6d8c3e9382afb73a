use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

fn golden(name: &str) -> String {
    std::fs::read_to_string(Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name))
        .unwrap()
}

fn subres(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_subres"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

#[test]
fn compute_prints_canonical_polynomials() {
    let sys = data("fixture.json");
    let sys = sys.to_str().unwrap();
    let out = subres(&["compute", "--system", sys, "--delta", "1", "--formula", "hybrid"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "-x + 1\n");
    let out = subres(&["compute", "--system", sys, "--delta", "2", "--formula", "bezout"]);
    assert_eq!(stdout(&out), "0\n");
}

#[test]
fn compute_inline_polys() {
    let out = subres(&["compute", "--poly", "(x-1)*(x-2)", "--poly", "x - 1", "--delta", "1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "-x + 1\n");
}

#[test]
fn compute_validation_exit_codes() {
    let sys = data("fixture.json");
    let sys = sys.to_str().unwrap();
    let out = subres(&["compute", "--system", sys, "--delta", "0"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("delta must be nonzero"));
    assert_eq!(subres(&["compute", "--system", sys, "--delta", "3"]).status.code(), Some(2));
    assert_eq!(subres(&["compute", "--system", sys, "--delta", "1,0"]).status.code(), Some(2));
    assert_eq!(
        subres(&["compute", "--system", sys, "--delta", "1", "--formula", "sylvester"]).status.code(),
        Some(2)
    );
    let missing = subres(&["compute", "--system", "/no/such/file.json", "--delta", "1"]);
    assert_eq!(missing.status.code(), Some(1));
    let bad = subres(&["compute", "--poly", "x^2 +", "--poly", "1", "--delta", "1"]);
    assert_eq!(bad.status.code(), Some(1));
}

#[test]
fn check_matches_golden() {
    let sys = data("fixture.json");
    let out = subres(&["check", "--system", sys.to_str().unwrap(), "--all-deltas"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), golden("check_fixture.txt"));
}

#[test]
fn check_with_roots_matches_golden() {
    let sys = data("fixture.json");
    let out = subres(&[
        "check", "--system", sys.to_str().unwrap(), "--all-deltas", "--roots", "2,1", "--lc", "1",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert_eq!(stdout(&out), golden("check_fixture_roots.txt"));
}

#[test]
fn check_repeated_roots_is_usage_error() {
    let sys = data("fixture.json");
    let out = subres(&["check", "--system", sys.to_str().unwrap(), "--all-deltas", "--roots", "1,1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("roots must be distinct"));
}

#[test]
fn check_example_degrees() {
    let sys = data("example_544.json");
    let out = subres(&["check", "--system", sys.to_str().unwrap(), "--delta", "2,2"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert!(stdout(&out).starts_with("delta 2,2: PASS"));
    let all = subres(&["check", "--system", sys.to_str().unwrap(), "--all-deltas"]);
    assert_eq!(all.status.code(), Some(0));
    assert!(stdout(&all).ends_with("20/20 deltas PASS (3 formulas)\n"));
}

#[test]
fn corrupted_check_fails() {
    let sys = data("fixture.json");
    let out = subres(&["check", "--system", sys.to_str().unwrap(), "--delta", "1", "--corrupt"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("FAIL"));
}

fn csv_lines(path: &Path) -> Vec<String> {
    std::fs::read_to_string(path).unwrap().lines().map(String::from).collect()
}

#[test]
fn bench_all_deltas_row_count() {
    let dir = tempfile::tempdir().unwrap();
    let out_path = dir.path().join("t.csv");
    let out = subres(&[
        "bench", "--degrees", "12,11,10", "--trials", "1", "--seed", "42",
        "--out", out_path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let lines = csv_lines(&out_path);
    assert_eq!(lines[0], "formula,degrees,delta,trial,t_matrix_ns,t_det_ns,t_total_ns");
    // 90 nonzero delta in N^2 with |delta| <= 12
    assert_eq!(lines.len(), 1 + 3 * 90);
    assert!(lines[1].starts_with("bezout,12-11-10,0-1,0,"));
    assert!(stdout(&out).contains("(12,11,10)"));
}

#[test]
fn bench_explicit_delta_and_parallel() {
    let dir = tempfile::tempdir().unwrap();
    let out_path = dir.path().join("d.csv");
    let out = subres(&[
        "bench", "--degrees", "5,4,4", "--deltas", "2,2", "--trials", "3", "--jobs", "2",
        "--out", out_path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert_eq!(csv_lines(&out_path).len(), 1 + 9);
}

#[test]
fn bench_table_one_profile() {
    let dir = tempfile::tempdir().unwrap();
    let out_path = dir.path().join("p.csv");
    let out = subres(&["bench", "--degrees", "14,10,5", "--out", out_path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    // (14+2 choose 2) - 1
    assert_eq!(csv_lines(&out_path).len(), 1 + 3 * 119);
}

#[test]
fn bench_rejects_bad_spec() {
    let dir = tempfile::tempdir().unwrap();
    let out_path = dir.path().join("x.csv");
    let p = out_path.to_str().unwrap();
    assert_eq!(subres(&["bench", "--degrees", "3,5", "--out", p]).status.code(), Some(2));
    assert_eq!(
        subres(&["bench", "--degrees", "3,2", "--deltas", "0", "--out", p]).status.code(),
        Some(2)
    );
    assert_eq!(
        subres(&["bench", "--degrees", "3,2", "--out", "/no/such/dir/x.csv"]).status.code(),
        Some(1)
    );
}
