use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn perfdel(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_perfdel"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn run_to(dir: &Path, name: &str, args: &[&str]) -> (i32, String) {
    let out = dir.join(name);
    let mut full: Vec<&str> = args.to_vec();
    let out_str = out.to_str().unwrap().to_owned();
    full.extend(["--out", &out_str]);
    let o = perfdel(&full);
    let body = std::fs::read_to_string(&out).unwrap_or_default();
    (o.status.code().unwrap(), body)
}

fn json(s: &str) -> Value {
    serde_json::from_str(s).expect("valid JSON")
}

#[test]
fn construct_counts_and_formats() {
    let dir = tempfile::tempdir().unwrap();
    let (code, csv) = run_to(dir.path(), "p.csv", &["construct", "--family", "P", "--d", "7", "--s", "1", "--k", "2", "--normalization", "half", "--format", "csv"]);
    assert_eq!(code, 0);
    assert_eq!(csv.lines().count(), 56);

    let o = perfdel(&["construct", "--family", "G", "--d", "6", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(String::from_utf8(o.stdout).unwrap().lines().count(), 27);
    assert!(String::from_utf8(o.stderr).unwrap().contains("count=27 affine_dim=6"));

    let (code, body) = run_to(dir.path(), "p.json", &["construct", "--family", "P", "--d", "7", "--normalization", "integral"]);
    assert_eq!(code, 0);
    let v = json(&body);
    assert_eq!(v["meta"]["family"], "P-integral");
    assert_eq!(v["vertices"].as_array().unwrap().len(), 56);
}

#[test]
fn construct_rejects_bad_parameters() {
    let o = perfdel(&["construct", "--family", "P", "--d", "7", "--s", "1", "--k", "4"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8(o.stderr).unwrap().contains("d − 2k must be ≥ 1"));
    assert!(o.stdout.is_empty());

    let o = perfdel(&["construct", "--family", "Q", "--d", "7"]);
    assert_eq!(o.status.code(), Some(2));
    let o = perfdel(&["construct", "--family", "G", "--d", "5"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn certify_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let (code, body) = run_to(dir.path(), "a.json", &["certify", "--family", "P", "--d", "7", "--s", "1", "--k", "2"]);
    assert_eq!(code, 0);
    let v = json(&body);
    assert_eq!(v["delaunay"]["alpha"], "3/7");
    assert_eq!(v["delaunay"]["beta"], "2/3");
    assert_eq!(v["perfection"]["nullity"], 1);
    assert_eq!(v["status"], "certified");

    let (code, body) = run_to(dir.path(), "b.json", &["certify", "--family", "G", "--d", "6", "--oracle"]);
    assert_eq!(code, 0);
    let v = json(&body);
    assert_eq!(v["oracle"]["boundary_points"], 27);
    assert_eq!(v["section"]["vertices_on_section"], true);

    let (code, body) = run_to(dir.path(), "c.json", &["certify", "--family", "P", "--d", "7", "--s", "3", "--k", "2"]);
    assert_eq!(code, 1);
    let v = json(&body);
    assert_eq!(v["status"], "failed");
    assert!(v["delaunay"]["failure_witness"].is_object());

    let o = perfdel(&["certify", "--family", "P", "--d", "8", "--oracle", "--node-budget", "5"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8(o.stderr).unwrap().contains("node budget"));
}

#[test]
fn outputs_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let cases: [&[&str]; 4] = [
        &["construct", "--family", "P", "--d", "9", "--s", "2", "--k", "2", "--format", "csv"],
        &["construct", "--family", "G", "--d", "7"],
        &["certify", "--family", "P", "--d", "8", "--oracle"],
        &["diagram", "--d", "19", "--k", "3", "--s", "1"],
    ];
    for (i, args) in cases.iter().enumerate() {
        let (_, a) = run_to(dir.path(), &format!("{i}a"), args);
        let (_, b) = run_to(dir.path(), &format!("{i}b"), args);
        assert!(!a.is_empty());
        assert_eq!(a, b, "{args:?}");
    }
}

#[test]
fn diagram_rows() {
    let o = perfdel(&["diagram", "--d", "7", "--k", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let out = String::from_utf8(o.stdout).unwrap();
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("l,a,phi1,phi2,on_line"));
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 4);
    assert!(rows.iter().any(|r| r.starts_with("0,1,49/9,0,")));
    assert!(!out.contains('.'), "no floating-point values");

    let o = perfdel(&["diagram", "--d", "7", "--k", "2", "--s", "1"]);
    let marked = String::from_utf8(o.stdout).unwrap().lines().filter(|r| r.ends_with(",true")).count();
    assert_eq!(marked, 2);

    // n = 1 is admissible
    assert_eq!(perfdel(&["diagram", "--d", "7", "--k", "3"]).status.code(), Some(0));
    assert_eq!(perfdel(&["diagram", "--d", "6", "--k", "3"]).status.code(), Some(2));
}

#[test]
fn scan_small_grid() {
    let dir = tempfile::tempdir().unwrap();
    let (code, body) = run_to(dir.path(), "scan.json", &["scan", "--d-max", "8", "--s-max", "1", "--k-max", "3", "--jobs", "2"]);
    assert_eq!(code, 0);
    let v = json(&body);
    let records = v["records"].as_array().unwrap();
    let keys: Vec<(u64, u64, u64)> = records
        .iter()
        .map(|r| (r["d"].as_u64().unwrap(), r["s"].as_u64().unwrap(), r["k"].as_u64().unwrap()))
        .collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
    let cell = records.iter().find(|r| r["d"] == 7 && r["s"] == 1 && r["k"] == 2).unwrap();
    assert_eq!(cell["status"], "certified");
    assert_eq!(cell["min_margin"], "4/3");
    assert!(records.iter().any(|r| r["status"] == "skipped" && r["reason"] == "n<1"));
    assert!(records.iter().all(|r| r["runtime_ms"].is_u64()));
}

#[test]
fn scan_reads_jobs_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_perfdel"))
        .args(["scan", "--d-max", "7", "--s-max", "1", "--k-max", "2"])
        .env("PERFDEL_JOBS", "1")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    let bad = Command::new(env!("CARGO_BIN_EXE_perfdel"))
        .args(["scan", "--d-max", "7", "--s-max", "1", "--k-max", "2"])
        .env("PERFDEL_JOBS", "zero")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
    assert_eq!(perfdel(&["scan", "--d-max", "4", "--s-max", "1", "--k-max", "2"]).status.code(), Some(2));
}

#[test]
fn scan_regime_all_certified() {
    let dir = tempfile::tempdir().unwrap();
    let (code, body) = run_to(dir.path(), "scan.json", &["scan", "--d-max", "16", "--s-max", "2", "--k-max", "3"]);
    assert_eq!(code, 0);
    let v = json(&body);
    let s = &v["summary"];
    assert_eq!(s["in_regime"], s["in_regime_certified"]);
    assert!(s["in_regime"].as_u64().unwrap() > 0);
    for r in v["records"].as_array().unwrap() {
        if r["in_regime"] == true {
            assert_eq!(r["status"], "certified", "{r}");
        }
    }
}

#[test]
fn failed_write_leaves_no_partial_file() {
    let dir = tempfile::tempdir().unwrap();
    let missing = dir.path().join("no/such/dir/out.json");
    let o = perfdel(&["construct", "--family", "G", "--d", "6", "--out", missing.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(!missing.exists());
}
