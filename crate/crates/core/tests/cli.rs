use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use level_zero::spec_file::GroupSpec;
use level_zero::{catalog, Lambda};
use serde_json::Value;
use tempfile::TempDir;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_level-zero"))
}

fn write_spec(dir: &Path, file: &str, spec: &GroupSpec) -> PathBuf {
    let path = dir.join(file);
    std::fs::write(&path, spec.to_canonical_json()).unwrap();
    path
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn sl2(dir: &Path) -> PathBuf {
    write_spec(dir, "sl2.json", &GroupSpec::split(&catalog::sl(2), 3, 3))
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn decompose_reports_parameters_and_checks() {
    let dir = TempDir::new().unwrap();
    let spec = sl2(dir.path());
    let out = run(&["decompose", spec.to_str().unwrap(), "-N", "8"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let report = json(&out);
    assert_eq!(report["parameters"].as_array().unwrap().len(), 3);
    assert_eq!(report["checks"]["partition"], Value::Bool(true));
    assert_eq!(report["meta"]["spec_hash"].as_str().unwrap().len(), 64);
    assert_eq!(report["meta"]["library_version"], Value::String(env!("CARGO_PKG_VERSION").into()));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.ends_with('\n'));
    assert!(text.contains("\"0/1\""));
}

#[test]
fn reports_are_deterministic() {
    let dir = TempDir::new().unwrap();
    let spec = write_spec(dir.path(), "sp4.json", &GroupSpec::split(&catalog::sp(2), 5, 5));
    for cmd in ["decompose", "coherence", "fibers"] {
        let a = run(&[cmd, spec.to_str().unwrap(), "-N", "4"]);
        let b = run(&[cmd, spec.to_str().unwrap(), "-N", "4"]);
        assert_eq!(a.status.code(), Some(0));
        assert_eq!(a.stdout, b.stdout, "{cmd}");
    }
}

#[test]
fn torus_has_one_facet() {
    let dir = TempDir::new().unwrap();
    let spec = write_spec(dir.path(), "t.json", &GroupSpec::split(&catalog::torus(2), 5, 5));
    let out = run(&["decompose", spec.to_str().unwrap(), "-N", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let report = json(&out);
    assert_eq!(report["facets"].as_array().unwrap().len(), 1);
    // Split torus, q = 5: every vector of order dividing 2 is fixed.
    assert_eq!(report["parameters"].as_array().unwrap().len(), 4);
}

#[test]
fn exit_codes() {
    let dir = TempDir::new().unwrap();
    let spec = sl2(dir.path());
    let s = spec.to_str().unwrap();
    let out = run(&["decompose", s, "-N", "6"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());
    assert_eq!(run(&["decompose", s]).status.code(), Some(2));
    assert_eq!(run(&["decompose", "/nonexistent.json", "-N", "2"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));

    let text = GroupSpec::split(&catalog::sl(2), 3, 3).to_canonical_json();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, text.replacen('{', "{\n  \"extra\": 1,", 1)).unwrap();
    assert_eq!(run(&["decompose", bad.to_str().unwrap(), "-N", "2"]).status.code(), Some(2));
    std::fs::write(&bad, "not json").unwrap();
    assert_eq!(run(&["dual", bad.to_str().unwrap()]).status.code(), Some(2));

    let big = write_spec(dir.path(), "t8.json", &GroupSpec::split(&catalog::torus(8), 5, 5));
    assert_eq!(run(&["decompose", big.to_str().unwrap(), "-N", "11"]).status.code(), Some(3));
}

#[test]
fn dual_twice_is_identity() {
    let dir = TempDir::new().unwrap();
    let mut spec = GroupSpec::split(&catalog::gl(3), 5, 5);
    spec.theta = catalog::gl_flip(3).to_rows();
    let original = write_spec(dir.path(), "u3.json", &spec);
    let once = dir.path().join("once.json");
    let twice = dir.path().join("twice.json");
    assert_eq!(run(&["dual", original.to_str().unwrap(), "--out", once.to_str().unwrap()]).status.code(), Some(0));
    assert_eq!(run(&["dual", once.to_str().unwrap(), "--out", twice.to_str().unwrap()]).status.code(), Some(0));
    assert_eq!(std::fs::read(&twice).unwrap(), std::fs::read(&original).unwrap());
    let dual: Value = serde_json::from_slice(&std::fs::read(&once).unwrap()).unwrap();
    assert_eq!(dual["name"], Value::String("dual(GL3)".into()));
}

#[test]
fn fibers_table() {
    let dir = TempDir::new().unwrap();
    let spec = write_spec(dir.path(), "gl2.json", &GroupSpec::split(&catalog::gl(2), 7, 7));
    let out = run(&["fibers", spec.to_str().unwrap(), "-N", "3", "--levi", ""]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout.clone()).unwrap();
    assert!(text.contains("equivalence"));
    let csv = run(&["fibers", spec.to_str().unwrap(), "-N", "3", "--format", "csv"]);
    assert_eq!(csv.status.code(), Some(0));
    let mut reader = csv::Reader::from_reader(&csv.stdout[..]);
    assert!(reader.headers().unwrap().len() >= 3);
    assert!(reader.records().count() > 0);
    assert_eq!(run(&["fibers", spec.to_str().unwrap(), "-N", "3", "--levi", "x"]).status.code(), Some(2));
}

#[test]
fn classical_grid() {
    let dir = TempDir::new().unwrap();
    let mut spec = GroupSpec::split(&catalog::sp(2), 3, 3);
    spec.classical = Some(level_zero::classical::ClassicalType::new(
        level_zero::classical::ClassicalFamily::OddOrthogonal,
        2,
    ));
    let path = write_spec(dir.path(), "sp4.json", &spec);
    let out = run(&["classical", path.to_str().unwrap(), "-N", "8"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let plain = sl2(dir.path());
    assert_eq!(run(&["classical", plain.to_str().unwrap(), "-N", "8"]).status.code(), Some(2));
}

#[test]
fn csv_and_out_file() {
    let dir = TempDir::new().unwrap();
    let spec = sl2(dir.path());
    let target = dir.path().join("report.csv");
    let out = run(&["decompose", spec.to_str().unwrap(), "-N", "8", "--format", "csv", "--out", target.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&target).unwrap();
    assert!(text.starts_with("parameter,facet,class"));
    assert_eq!(run(&["coherence", spec.to_str().unwrap(), "-N", "8", "--format", "csv"]).status.code(), Some(2));
}

#[test]
fn zlbar_override() {
    let dir = TempDir::new().unwrap();
    let spec = sl2(dir.path());
    let out = run(&["decompose", spec.to_str().unwrap(), "-N", "4", "--lambda", "zlbar", "--ell", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let report = json(&out);
    assert_eq!(report["meta"]["lambda"], Value::String(Lambda::Zlbar.to_string()));
    assert_eq!(report["parameters"].as_array().unwrap().len(), 1);
    assert_eq!(run(&["decompose", spec.to_str().unwrap(), "-N", "4", "--lambda", "zlbar"]).status.code(), Some(2));
}
