use std::path::Path;
use std::process::{Command, Output};

fn wha(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wha"))
        .args(args)
        .env("WHA_THREADS", "2")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn smatrix_at_level_two_is_trivially_modular() {
    let o = wha(&["smatrix", "--r", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("(1x1)"), "{out}");
    assert!(out.contains("modular: true"));
}

#[test]
fn smatrix_at_level_three() {
    let o = wha(&["smatrix", "--r", "3", "--numeric", "3"]);
    let out = stdout(&o);
    // Proportional to [[1, -1], [-1, -1]]; here the factor is 1.
    assert!(out.contains("[1, -1]\n  [-1, -1]"), "{out}");
    assert!(out.contains("det: -2"));
    assert!(out.contains("[1.000, -1.000]"));
    assert!(out.contains("modular: true"));
}

#[test]
fn smatrix_at_level_five_is_invertible() {
    let o = wha(&["smatrix", "--r", "5"]);
    let out = stdout(&o);
    assert!(out.contains("(4x4)"));
    assert!(!out.contains("det: 0\n"));
    assert!(out.contains("modular: true"));
}

#[test]
fn build_is_byte_identical_and_reloads() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    assert_eq!(
        wha(&["build", "--r", "4", "--out", path(&a)]).status.code(),
        Some(0)
    );
    assert_eq!(
        wha(&["build", "--r", "4", "--out", path(&b)]).status.code(),
        Some(0)
    );
    let (x, y) = (std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    assert_eq!(x, y);
    let text = String::from_utf8(x).unwrap();
    assert!(text.starts_with("{\"format_version\":\"1\",\"level\":4"));
    assert!(text.contains("\"cyclotomic_index\":16,\"degree\":8"));

    let suites = "wba,wha,coribbon,structure";
    let memory = wha(&["verify", "--r", "4", "--suite", suites, "--seed", "5"]);
    let loaded = wha(&[
        "verify",
        "--from",
        path(&a),
        "--suite",
        suites,
        "--seed",
        "5",
    ]);
    assert_eq!(memory.status.code(), Some(0), "{}", stderr(&memory));
    assert_eq!(loaded.status.code(), Some(0), "{}", stderr(&loaded));
    assert_eq!(stdout(&memory), stdout(&loaded));
}

#[test]
fn build_rejects_bad_levels_and_tables() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("x.json");
    let o = wha(&["build", "--r", "1", "--out", path(&out)]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("at least 2"));
    let o = wha(&["build", "--r", "9", "--out", path(&out)]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("--force"));
    let o = wha(&[
        "build",
        "--r",
        "3",
        "--tables",
        "mu,nope",
        "--out",
        path(&out),
    ]);
    assert_eq!(o.status.code(), Some(2));
    assert!(!out.exists());
}

#[test]
fn partial_exports_cannot_be_verified() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("delta.json");
    assert_eq!(
        wha(&[
            "build",
            "--r",
            "3",
            "--tables",
            "delta",
            "--out",
            path(&out)
        ])
        .status
        .code(),
        Some(0)
    );
    let text = std::fs::read_to_string(&out).unwrap();
    assert!(text.contains("\"delta\""));
    assert!(!text.contains("\"mu\""));
    let o = wha(&["verify", "--from", path(&out)]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("no mu table"));
}

#[test]
fn verify_exit_codes() {
    let o = wha(&["verify", "--r", "3", "--suite", "coquasi"]);
    assert_eq!(o.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(report["r"], 3);
    assert!(report["checks"]
        .as_array()
        .unwrap()
        .iter()
        .all(|c| c["status"] == "pass"));

    // The literal pivotal orientation fails from r = 4 on; the report is still written.
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("report.json");
    let o = wha(&[
        "verify",
        "--r",
        "4",
        "--suite",
        "pivotal",
        "--report",
        path(&file),
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).is_empty());
    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&file).unwrap()).unwrap();
    let failing: Vec<&str> = report["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["status"] == "fail")
        .map(|c| c["check"].as_str().unwrap())
        .collect();
    assert_eq!(failing, ["pivotal.eq_pivotal"]);
    assert!(stderr(&o).contains("FAIL pivotal.eq_pivotal"));

    assert_eq!(
        wha(&["verify", "--r", "3", "--suite", "bogus"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(wha(&["verify"]).status.code(), Some(2));
    assert_eq!(
        wha(&["verify", "--r", "3", "--sample", "0"]).status.code(),
        Some(2)
    );
    assert_eq!(wha(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn sampled_reports_are_deterministic() {
    let args = [
        "verify",
        "--r",
        "5",
        "--suite",
        "wba.associativity,coribbon",
        "--sample",
        "30",
        "--seed",
        "11",
    ];
    let a = wha(&args);
    let b = wha(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(stdout(&a), stdout(&b));
    let report: serde_json::Value = serde_json::from_str(&stdout(&a)).unwrap();
    assert_eq!(report["checks"][0]["scope"]["kind"], "sampled");
    assert_eq!(report["checks"][0]["scope"]["seed"], 11);
    assert!(report.get("timing_ms").is_none());
}

#[test]
fn recoupling_values() {
    let o = wha(&["recoupling", "--r", "4", "--op", "dim", "--labels", "1"]);
    let out = stdout(&o);
    // Loops evaluate to -A^2 - A^-2, so Δ_1 = -√2 at r = 4.
    assert!(
        out.lines().nth(1).unwrap().starts_with("-1.414213562"),
        "{out}"
    );
    let o = wha(&[
        "recoupling",
        "--r",
        "3",
        "--op",
        "theta",
        "--labels",
        "1,1,0",
    ]);
    assert_eq!(stdout(&o).lines().next(), Some("-1"));
    let o = wha(&[
        "recoupling",
        "--r",
        "4",
        "--op",
        "theta",
        "--labels",
        "1,1,1",
    ]);
    assert_eq!(o.status.code(), Some(2));
    let o = wha(&["recoupling", "--r", "4", "--op", "tet", "--labels", "1,1"]);
    assert_eq!(o.status.code(), Some(2));
    let o = wha(&["recoupling", "--r", "5", "--op", "twist", "--labels", "0"]);
    assert_eq!(stdout(&o).lines().next(), Some("1"));
}

#[test]
fn lists_checks() {
    let out = stdout(&wha(&["checks"]));
    assert!(out.lines().any(|l| l == "wha.eq_wha1"));
    assert!(out.lines().any(|l| l == "comodule.triangle"));
}
