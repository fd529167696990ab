use std::path::{Path, PathBuf};
use std::process::Command;

use homhopf::integrals::{certifies_no_total_integral, verify_quantum_integral, InfeasibilityWitness, QuantumDatum};
use homhopf::linalg::{parse_scalar, LinearMap};
use serde_json::Value;
use tempfile::TempDir;

struct Out {
    code: i32,
    stdout: String,
    stderr: String,
}

fn homhopf(args: &[&str], env: &[(&str, &str)]) -> Out {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_homhopf"));
    cmd.args(args).env_remove("HOMHOPF_MAX_DIM");
    for (k, v) in env {
        cmd.env(k, v);
    }
    let o = cmd.output().expect("binary runs");
    Out {
        code: o.status.code().expect("exit code"),
        stdout: String::from_utf8(o.stdout).unwrap(),
        stderr: String::from_utf8(o.stderr).unwrap(),
    }
}

fn emit(dir: &TempDir, name: &str) -> PathBuf {
    let out = homhopf(&["catalog", "emit", name], &[]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    let path = dir.path().join(format!("{name}.json"));
    std::fs::write(&path, out.stdout).unwrap();
    path
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn json(out: &Out) -> Value {
    serde_json::from_str(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", out.stdout))
}

#[test]
fn catalog_list_prints_the_eight_names() {
    let out = homhopf(&["catalog", "list"], &[]);
    assert_eq!(out.code, 0);
    let names: Vec<&str> = out.stdout.lines().collect();
    assert_eq!(
        names,
        [
            "kC2",
            "kC3",
            "kC3-twisted",
            "sweedler-H4",
            "matrix-datum-2",
            "kG-C2-datum",
            "trivial-k-over-kC2",
            "trivial-k-over-H4"
        ]
    );
}

#[test]
fn unknown_catalog_entry_is_an_input_error() {
    let out = homhopf(&["catalog", "emit", "kC7"], &[]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("kC7"));
}

#[test]
fn emitted_kc2_checks_clean() {
    let dir = TempDir::new().unwrap();
    let f = emit(&dir, "kC2");
    let out = homhopf(&["check", s(&f)], &[]);
    assert_eq!(out.code, 0, "{}", out.stdout);
}

#[test]
fn every_emitted_entry_checks_clean() {
    let dir = TempDir::new().unwrap();
    for name in homhopf::catalog::list() {
        let f = emit(&dir, name);
        let out = homhopf(&["check", s(&f)], &[]);
        assert_eq!(out.code, 0, "{name}: {}", out.stdout);
    }
}

#[test]
fn corrupted_antipode_fails_with_a_witness() {
    let dir = TempDir::new().unwrap();
    let f = emit(&dir, "kC2");
    let mut v: Value = serde_json::from_str(&std::fs::read_to_string(&f).unwrap()).unwrap();
    v["hopf"]["antipode"][1][1] = Value::String("2".into());
    std::fs::write(&f, serde_json::to_string(&v).unwrap()).unwrap();
    let out = homhopf(&["--json", "check", s(&f)], &[]);
    assert_eq!(out.code, 1);
    let report = json(&out);
    let failed: Vec<&Value> = report["reports"][0]["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["status"] == "fail")
        .collect();
    assert_eq!(failed.len(), 1, "{failed:?}");
    assert!(failed[0]["name"].as_str().unwrap().contains("S∗I = I∗S = ηε"));
    assert_eq!(failed[0]["witness"]["basis"], serde_json::json!(["g"]));
}

#[test]
fn truncated_file_is_an_input_error() {
    let dir = TempDir::new().unwrap();
    let f = emit(&dir, "kC2");
    let text = std::fs::read_to_string(&f).unwrap();
    std::fs::write(&f, &text[..text.len() / 2]).unwrap();
    let out = homhopf(&["check", s(&f)], &[]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("line"), "{}", out.stderr);
}

#[test]
fn missing_file_is_an_input_error() {
    let out = homhopf(&["check", "/nonexistent/instance.json"], &[]);
    assert_eq!(out.code, 2);
}

#[test]
fn wrong_matrix_shape_is_an_input_error() {
    let dir = TempDir::new().unwrap();
    let f = emit(&dir, "kC2");
    let mut v: Value = serde_json::from_str(&std::fs::read_to_string(&f).unwrap()).unwrap();
    v["hopf"]["alpha"].as_array_mut().unwrap().pop();
    std::fs::write(&f, serde_json::to_string(&v).unwrap()).unwrap();
    let out = homhopf(&["check", s(&f)], &[]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("hopf.alpha"), "{}", out.stderr);
}

#[test]
fn dimension_cap_comes_from_the_environment() {
    let dir = TempDir::new().unwrap();
    let f = emit(&dir, "sweedler-H4");
    assert_eq!(homhopf(&["check", s(&f)], &[("HOMHOPF_MAX_DIM", "3")]).code, 2);
    assert_eq!(homhopf(&["check", s(&f)], &[("HOMHOPF_MAX_DIM", "4")]).code, 0);
}

#[test]
fn trivial_k_over_h4_is_infeasible_with_a_rank_certificate() {
    let dir = TempDir::new().unwrap();
    let f = emit(&dir, "trivial-k-over-H4");
    let out = homhopf(&["--json", "integral", s(&f)], &[]);
    assert_eq!(out.code, 0);
    let v = json(&out);
    assert_eq!(v["solver"]["feasible"], false);
    let (r, ra) = (v["solver"]["system_rank"].as_u64().unwrap(), v["solver"]["augmented_rank"].as_u64().unwrap());
    assert_eq!(ra, r + 1);
    let dual: Vec<_> = v["solver"]["dual"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| parse_scalar(x.as_str().unwrap()).unwrap())
        .collect();
    let d = homhopf::catalog::entry("trivial-k-over-H4").unwrap().datum().unwrap();
    let w = InfeasibilityWitness { system_rank: r as usize, augmented_rank: ra as usize, dual };
    assert!(certifies_no_total_integral(&d, &w));
}

#[test]
fn infeasible_when_expected_feasible_exits_one() {
    let dir = TempDir::new().unwrap();
    let f = emit(&dir, "trivial-k-over-H4");
    let mut v: Value = serde_json::from_str(&std::fs::read_to_string(&f).unwrap()).unwrap();
    v["expected"]["total_integral"] = Value::Bool(true);
    std::fs::write(&f, serde_json::to_string(&v).unwrap()).unwrap();
    assert_eq!(homhopf(&["integral", s(&f)], &[]).code, 1);
}

#[test]
fn kc2_total_integral_family_has_dimension_one() {
    let dir = TempDir::new().unwrap();
    let f = emit(&dir, "kC2");
    let out = homhopf(&["--json", "integral", s(&f)], &[]);
    assert_eq!(out.code, 0);
    let v = json(&out);
    assert_eq!(v["solver"]["feasible"], true);
    assert_eq!(v["solver"]["family_dim"], 1);
}

fn certificate(v: &Value, name: &str, d: &QuantumDatum) -> LinearMap {
    let cert = v["reports"][0]["certificates"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["name"] == name)
        .expect("certificate present");
    let rows: Vec<Vec<_>> = cert["rows"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r.as_array().unwrap().iter().map(|x| parse_scalar(x.as_str().unwrap()).unwrap()).collect())
        .collect();
    LinearMap::from_rows(&d.h_space.tensor(&d.h_space), &d.a_space, &rows).unwrap()
}

#[test]
fn kc2_total_quantum_certificate_reverifies() {
    let dir = TempDir::new().unwrap();
    let f = emit(&dir, "kC2");
    let out = homhopf(&["--json", "integral", "--quantum", "--total", s(&f)], &[]);
    assert_eq!(out.code, 0);
    let v = json(&out);
    assert_eq!(v["solver"]["feasible"], true);
    let d = homhopf::catalog::entry("kC2").unwrap().datum().unwrap();
    let gh = certificate(&v, "γ̂", &d);
    assert!(verify_quantum_integral(&d, &gh, true).all_passed());
}

#[test]
fn galois_on_kc2_is_bijective() {
    let dir = TempDir::new().unwrap();
    let f = emit(&dir, "kC2");
    let out = homhopf(&["galois", s(&f)], &[]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("bijective, rank 4/4"), "{}", out.stdout);
}

#[test]
fn galois_needs_an_antipode() {
    let dir = TempDir::new().unwrap();
    let f = emit(&dir, "matrix-datum-2");
    let out = homhopf(&["galois", s(&f)], &[]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("hopf.antipode"));
}

#[test]
fn equivalence_check_on_trivial_k_over_h4() {
    let dir = TempDir::new().unwrap();
    let f = emit(&dir, "trivial-k-over-H4");
    let out = homhopf(&["--json", "theorem", "--id", "4.3", s(&f)], &[]);
    assert_eq!(out.code, 0);
    let v = json(&out);
    let facts = v["reports"][0]["facts"].as_array().unwrap();
    assert!(facts.iter().all(|f| f["holds"] == false), "{facts:?}");
    assert_eq!(facts.len(), 2);
    let checks = v["reports"][0]["checks"].as_array().unwrap();
    assert!(checks.iter().any(|c| c["name"] == "(1) ⇔ (3)" && c["status"] == "pass"));
}

#[test]
fn theorems_pass_on_kc2() {
    let dir = TempDir::new().unwrap();
    let f = emit(&dir, "kC2");
    for id in ["4.3", "4.8", "5.6", "5.7", "5.8"] {
        let out = homhopf(&["theorem", "--id", id, s(&f)], &[]);
        assert_eq!(out.code, 0, "{id}: {}", out.stdout);
    }
}

#[test]
fn theorem_without_comodule_block_names_the_missing_block() {
    let dir = TempDir::new().unwrap();
    let f = emit(&dir, "kC2");
    let mut v: Value = serde_json::from_str(&std::fs::read_to_string(&f).unwrap()).unwrap();
    let obj = v.as_object_mut().unwrap();
    obj.remove("comodule_algebra");
    obj.remove("modules");
    obj.remove("expected");
    std::fs::write(&f, serde_json::to_string(&v).unwrap()).unwrap();
    let out = homhopf(&["theorem", "--id", "4.3", s(&f)], &[]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("comodule_algebra"), "{}", out.stderr);
}

#[test]
fn json_reports_are_byte_deterministic() {
    let dir = TempDir::new().unwrap();
    let f = emit(&dir, "kC3-twisted");
    for args in [
        vec!["--json", "check", s(&f)],
        vec!["--json", "integral", "--quantum", "--total", s(&f)],
        vec!["--json", "theorem", "--id", "5.7", s(&f)],
    ] {
        let a = homhopf(&args, &[]).stdout;
        let b = homhopf(&args, &[]).stdout;
        assert!(!a.is_empty());
        assert_eq!(a, b, "{args:?}");
    }
}

#[test]
fn emitted_file_round_trips_through_the_parser() {
    let dir = TempDir::new().unwrap();
    for name in homhopf::catalog::list() {
        let f = emit(&dir, name);
        let text = std::fs::read_to_string(&f).unwrap();
        let inst = homhopf::instance::Instance::parse(&text, 12).unwrap();
        assert_eq!(inst.emit(), text, "{name}");
    }
}
