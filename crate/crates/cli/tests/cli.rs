use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::{json, Value};
use tempfile::TempDir;

fn nltrace(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nltrace"))
        .args(args)
        .env_remove("NLTRACE_TOL")
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

struct Files(TempDir);

impl Files {
    fn new() -> Self {
        Self(tempfile::tempdir().unwrap())
    }

    fn write(&self, name: &str, v: &Value) -> PathBuf {
        let p = self.0.path().join(name);
        std::fs::write(&p, v.to_string()).unwrap();
        p
    }

    fn diag(&self, name: &str, d: &[f64]) -> PathBuf {
        let n = d.len();
        let entries: Vec<Vec<[f64; 2]>> = (0..n)
            .map(|i| (0..n).map(|j| [if i == j { d[i] } else { 0.0 }, 0.0]).collect())
            .collect();
        self.write(name, &json!({"n": n, "entries": entries}))
    }

    fn alpha(&self, name: &str, a: &[f64]) -> PathBuf {
        self.write(name, &json!({ "alpha": a }))
    }
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn eig_sorts_and_rejects_non_hermitian() {
    let f = Files::new();
    let out = nltrace(&["eig", s(&f.diag("d.json", &[1.0, 3.0, 2.0]))]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout_json(&out), json!({"eigenvalues": [3.0, 2.0, 1.0]}));

    let out = nltrace(&["eig", s(&f.diag("i.json", &[1.0, 1.0, 1.0]))]);
    assert_eq!(stdout_json(&out)["eigenvalues"], json!([1.0, 1.0, 1.0]));

    let bad = f.write("bad.json", &json!({"n": 2, "entries": [[[1, 0], [1, 0]], [[0, 0], [1, 0]]]}));
    let out = nltrace(&["eig", s(&bad)]);
    assert_eq!(code(&out), 3);
    assert!(!out.stderr.is_empty());

    let garbage = f.write("garbage.json", &json!({"rows": 1}));
    assert_eq!(code(&nltrace(&["eig", s(&garbage)])), 2);
    assert_eq!(code(&nltrace(&["eig", "/nonexistent/file.json"])), 2);
}

#[test]
fn traces() {
    let f = Files::new();
    let a = f.diag("a.json", &[3.0, 2.0, 1.0]);
    let tr = f.alpha("tr.json", &[0.0, 1.0, 2.0, 3.0]);
    let top = f.alpha("top.json", &[0.0, 1.0, 1.0, 1.0]);

    let out = nltrace(&["trace", "choquet", s(&tr), s(&a)]);
    assert_eq!(stdout_json(&out), json!({"value": 6.0}));
    let out = nltrace(&["trace", "sugeno", s(&tr), s(&a)]);
    assert_eq!(stdout_json(&out), json!({"value": 2.0}));
    let out = nltrace(&["trace", "choquet", s(&top), s(&a)]);
    assert_eq!(stdout_json(&out), json!({"value": 3.0}));

    let neg = f.diag("neg.json", &[1.0, -1.0, 0.0]);
    assert_eq!(code(&nltrace(&["trace", "choquet", s(&tr), s(&neg)])), 3);
    let small = f.alpha("small.json", &[0.0, 1.0]);
    assert_eq!(code(&nltrace(&["trace", "choquet", s(&small), s(&a)])), 4);
}

#[test]
fn norms() {
    let f = Files::new();
    let b = f.diag("b.json", &[3.0, 1.0, 1.0]);
    let out = nltrace(&["norm", "--kyfan", "1", s(&b)]);
    assert_eq!(stdout_json(&out), json!({"value": 3.0}));
    assert_eq!(code(&nltrace(&["norm", "--kyfan", "4", s(&b)])), 4);
    assert_eq!(code(&nltrace(&["norm", "--kyfan", "0", s(&b)])), 4);

    // a unitary with complex entries: trace norm is n
    let r = 0.5f64.sqrt();
    let u = f.write("u.json", &json!({"n": 2, "entries": [[[r, 0], [0, r]], [[0, r], [r, 0]]]}));
    let tr = f.alpha("tr2.json", &[0.0, 1.0, 2.0]);
    let v = stdout_json(&nltrace(&["norm", "--alpha", s(&tr), s(&u)]))["value"].as_f64().unwrap();
    assert!((v - 2.0).abs() < 1e-12);

    let g = f.write(
        "g.json",
        &json!({"n": 3, "entries": [
            [[1, 2], [0.5, -1], [0, 0.3]],
            [[-2, 0], [1, 1], [0.7, 0]],
            [[0.1, 0.2], [3, -0.5], [-1, 0]]]}),
    );
    let tr3 = f.alpha("tr3.json", &[0.0, 1.0, 2.0, 3.0]);
    let via_alpha = stdout_json(&nltrace(&["norm", "--alpha", s(&tr3), s(&g)]))["value"].as_f64().unwrap();
    let via_kyfan = stdout_json(&nltrace(&["norm", "--kyfan", "3", s(&g)]))["value"].as_f64().unwrap();
    assert!((via_alpha - via_kyfan).abs() < 1e-10);

    // exactly one of --alpha / --kyfan
    assert_eq!(code(&nltrace(&["norm", s(&g)])), 2);
    assert_eq!(code(&nltrace(&["norm", "--alpha", s(&tr3), "--kyfan", "1", s(&g)])), 2);
}

#[test]
fn check() {
    let f = Files::new();
    let out = nltrace(&["check", s(&f.alpha("a.json", &[0.0, 1.0, 2.0, 3.0]))]);
    assert_eq!(
        stdout_json(&out),
        json!({"concave": true, "coeffs": [1.0, 1.0, 1.0], "kyfan_weights": [0.0, 0.0, 1.0]})
    );
    let out = nltrace(&["check", s(&f.alpha("b.json", &[0.0, 1.0, 1.0, 2.0]))]);
    let v = stdout_json(&out);
    assert_eq!(v["concave"], json!(false));
    assert_eq!(v["kyfan_weights"], Value::Null);
    assert_eq!(code(&nltrace(&["check", s(&f.alpha("c.json", &[0.0, 2.0, 1.0, 3.0]))])), 2);
    assert_eq!(code(&nltrace(&["check", s(&f.alpha("d.json", &[1.0, 2.0]))])), 2);
}

#[test]
fn dominate() {
    let f = Files::new();
    let a = f.diag("a.json", &[1.0, 1.0]);
    let b = f.diag("b.json", &[3.0, 2.0]);
    let out = nltrace(&["dominate", s(&a), s(&b), "--factor"]);
    assert_eq!(code(&out), 0);
    let v = stdout_json(&out);
    assert_eq!(v["eigen_dominates"], json!(true));
    assert_eq!(v["weak_majorizes"], json!(true));
    assert_eq!(v["majorizes"], json!(false));
    assert!(v["residual"].as_f64().unwrap() <= 1e-7);
    let c = &v["contraction"]["entries"];
    assert!((c[0][0][0].as_f64().unwrap() - 1.0 / 3f64.sqrt()).abs() < 1e-15);

    let out = nltrace(&["dominate", s(&b), s(&b), "--factor"]);
    let v = stdout_json(&out);
    assert_eq!(v["eigen_dominates"], json!(true));
    assert_eq!(v["majorizes"], json!(true));

    let out = nltrace(&["dominate", s(&a), s(&b)]);
    assert_eq!(stdout_json(&out)["contraction"], Value::Null);

    let a2 = f.diag("a2.json", &[3.0, 0.0]);
    let b2 = f.diag("b2.json", &[2.0, 2.0]);
    let v = stdout_json(&nltrace(&["dominate", s(&a2), s(&b2), "--factor"]));
    assert_eq!(v["eigen_dominates"], json!(false));
    assert_eq!(v["contraction"], Value::Null);

    let b3 = f.diag("b3.json", &[1.0, 1.0, 1.0]);
    assert_eq!(code(&nltrace(&["dominate", s(&a), s(&b3)])), 4);
    let neg = f.diag("neg.json", &[1.0, -2.0]);
    assert_eq!(code(&nltrace(&["dominate", s(&neg), s(&b)])), 3);
}

#[test]
fn witness() {
    let out = nltrace(&["witness", "--coeffs", "1,0,1", "--k", "2", "--t", "4"]);
    assert_eq!(code(&out), 0);
    let v = stdout_json(&out);
    assert_eq!(v["determinant"], json!(-11.0));
    assert_eq!(v["s_a"], json!(5.0));
    assert_eq!(v["s_c"], json!(6.0));
    assert_eq!(v["verified"], json!(true));
    assert_eq!(v["a"]["entries"][1][1], json!([4.0, 0.0]));

    let v = stdout_json(&nltrace(&["witness", "--coeffs", "0,1,0", "--k", "1", "--t", "3"]));
    assert!(v["determinant"].as_f64().unwrap() < 0.0);
    assert_eq!(v["verified"], json!(true));

    let out = nltrace(&["witness", "--coeffs", "1,1,1", "--k", "1", "--t", "2"]);
    assert_eq!(code(&out), 5);
    assert!(String::from_utf8_lossy(&out.stderr).contains("c_k < c_(k+1)"));
    assert_eq!(code(&nltrace(&["witness", "--coeffs", "0,1", "--k", "1", "--t", "0.5"])), 5);
    assert_eq!(code(&nltrace(&["witness", "--coeffs", "1,-1", "--k", "1", "--t", "2"])), 2);
}

#[test]
fn suite_runs_and_validates_flags() {
    let out = nltrace(&["suite", "--suite", "choquet", "--n", "3", "--samples", "5", "--seed", "1"]);
    assert_eq!(code(&out), 0);
    let v = stdout_json(&out);
    assert_eq!(v["suite"], json!("choquet"));
    assert_eq!(v["pass"], json!(true));
    for p in v["properties"].as_array().unwrap() {
        assert_eq!(p["instances"], json!(5));
        assert_eq!(p["failures"], json!(0));
    }

    assert_eq!(code(&nltrace(&["suite", "--samples", "0"])), 2);
    assert_eq!(code(&nltrace(&["suite", "--n", "1"])), 2);
    assert_eq!(code(&nltrace(&["suite", "--n", "9"])), 2);
    assert_eq!(code(&nltrace(&["suite", "--suite", "spectral"])), 2);
}

#[test]
fn suite_reports_certified_violations_for_the_norm_panel() {
    let v = stdout_json(&nltrace(&["suite", "--suite", "norms", "--n", "4", "--samples", "20"]));
    let props = v["properties"].as_array().unwrap();
    let witness = props.iter().find(|p| p["name"] == "non_concave_witness").unwrap();
    assert_eq!(witness["pass"], json!(true));
    assert_eq!(witness["certified_violations"], json!(10));
}

#[test]
fn suite_tolerance_override() {
    let run = |tol: &str| {
        Command::new(env!("CARGO_BIN_EXE_nltrace"))
            .args(["suite", "--suite", "choquet", "--n", "3", "--samples", "10"])
            .env("NLTRACE_TOL", tol)
            .output()
            .unwrap()
    };
    let out = run("1e-300");
    assert_eq!(code(&out), 1);
    assert_eq!(stdout_json(&out)["pass"], json!(false));
    assert_eq!(code(&run("1e-6")), 0);
    assert_eq!(code(&run("abc")), 2);
}

#[test]
fn integral_against_a_measure_file() {
    let f = Files::new();
    let mu = f.write(
        "mu.json",
        &json!({"n": 3, "values": {"1": 0.5, "2": 1, "3": 1.5, "4": 0.5, "5": 1, "6": 1.5, "7": 2}}),
    );
    let out = nltrace(&["integral", "choquet", s(&mu), "--values", "3,1,2"]);
    assert_eq!(code(&out), 0);
    // (3-2) mu({1}) + (2-1) mu({1,3}) + 1 mu({1,2,3})
    assert_eq!(stdout_json(&out), json!({"value": 3.5}));
    let out = nltrace(&["integral", "sugeno", s(&mu), "--values", "3,1,2"]);
    assert_eq!(stdout_json(&out), json!({"value": 1.0}));
    assert_eq!(code(&nltrace(&["integral", "choquet", s(&mu), "--values", "1,2"])), 4);
    assert_eq!(code(&nltrace(&["integral", "choquet", s(&mu), "--values", "1,-2,0"])), 2);
}

#[test]
fn one_by_one_matrices() {
    let f = Files::new();
    let a = f.diag("a.json", &[2.0]);
    let al = f.alpha("al.json", &[0.0, 0.7]);
    let v = stdout_json(&nltrace(&["trace", "choquet", s(&al), s(&a)]))["value"].as_f64().unwrap();
    assert!((v - 1.4).abs() < 1e-15);
    let v = stdout_json(&nltrace(&["trace", "sugeno", s(&al), s(&a)]));
    assert_eq!(v, json!({"value": 0.7}));
}
