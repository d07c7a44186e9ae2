use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use cog2::document::FormDocument;

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

fn cog2(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cog2"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn classify_translation_field() {
    let o = cog2(&["classify", path(&data("e1.json"))]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("coG2: yes, coRochesterian: yes"));
}

#[test]
fn classify_rotation_outside_g2() {
    let o = cog2(&["classify", path(&data("rotation.json"))]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("coG2: no, coRochesterian: no"));
}

#[test]
fn solve_coroch_recovers_e1() {
    let o = cog2(&["solve-coroch", path(&data("sigma_e1.json"))]);
    assert_eq!(o.status.code(), Some(0));
    let x = FormDocument::from_json(&stdout(&o)).unwrap().to_field().unwrap();
    assert_eq!(x, cog2::VectorField::basis(7, 1));

    let o = cog2(&["solve-coroch", path(&data("not_coroch.json"))]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("not coRochesterian"));
}

#[test]
fn bracket_writes_document() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("b.json");
    let s = data("sigma_e1.json");
    let o = cog2(&["bracket", path(&s), path(&s), "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let b = FormDocument::from_json(&std::fs::read_to_string(&out).unwrap())
        .unwrap()
        .to_form()
        .unwrap();
    assert!(b.is_zero());
}

#[test]
fn doubling_map_fails_both_methods() {
    for method in ["pullback", "graph"] {
        let o = cog2(&["morphism-check", path(&data("doubling.json")), "--method", method]);
        assert_eq!(o.status.code(), Some(1), "{method}");
        assert!(stdout(&o).starts_with("coG2-morphism: no"), "{method}");
    }
    let o = cog2(&["morphism-check", path(&data("doubling.json")), "--method", "naturality"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("naturality fails"));
}

#[test]
fn translation_passes_all_methods() {
    for method in ["pullback", "graph", "naturality"] {
        let o = cog2(&[
            "morphism-check",
            path(&data("translation.json")),
            "--method",
            method,
            "--samples",
            "10",
        ]);
        assert_eq!(o.status.code(), Some(0), "{method}");
        assert!(stdout(&o).starts_with("coG2-morphism: yes"));
    }
}

#[test]
fn decompose3_parts_sum_back() {
    let o = cog2(&["decompose3", path(&data("eta.json"))]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let part = |k: &str| {
        serde_json::from_value::<FormDocument>(v[k].clone())
            .unwrap()
            .to_form()
            .unwrap()
    };
    let eta = FormDocument::from_json(&std::fs::read_to_string(data("eta.json")).unwrap())
        .unwrap()
        .to_form()
        .unwrap();
    let sum = part("part1").add(&part("part7")).unwrap().add(&part("part27")).unwrap();
    assert_eq!(sum, eta);
}

#[test]
fn usage_and_parse_errors_exit_two() {
    assert_eq!(cog2(&["verify", "--suite", "bogus"]).status.code(), Some(2));
    assert_eq!(cog2(&["classify", "/no/such/file.json"]).status.code(), Some(2));
    assert_eq!(cog2(&["classify", path(&data("doubling.json"))]).status.code(), Some(2));
    assert_eq!(cog2(&["frobnicate"]).status.code(), Some(2));
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(
        &bad,
        r#"{"kind": "field", "n": 7, "components": ["x8","0","0","0","0","0","0"]}"#,
    )
    .unwrap();
    let o = cog2(&["classify", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("x8"));
}

#[test]
fn verify_reports_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for out in [&a, &b] {
        let o = cog2(&[
            "verify",
            "--suite",
            "all",
            "--seed",
            "42",
            "--trials",
            "25",
            "--out",
            out.to_str().unwrap(),
        ]);
        assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    }
    let (a, b) = (std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    assert_eq!(a, b);
    let report: cog2::suite::VerificationReport = serde_json::from_slice(&a).unwrap();
    assert!(report.passed());
    assert_eq!((report.suite.as_str(), report.seed, report.trials), ("all", 42, 25));
}

#[test]
fn verify_with_timing_records_elapsed() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("r.json");
    let o = cog2(&[
        "verify",
        "--suite",
        "stabilizer",
        "--trials",
        "1",
        "--timing",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("dimension 14"));
    let report: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert!(report["elapsed_ms"].is_u64());
    assert_eq!(report["checks"][0]["status"], "pass");
}
