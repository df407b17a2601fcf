use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn liecoh(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_liecoh")).args(args).output().expect("spawn liecoh")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("stdout is not JSON ({e}): {}", String::from_utf8_lossy(&out.stdout))
    })
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_string_lossy().into_owned()
}

const PERTURBED_SU2: &str = r#"{
  "name": "su2-perturbed",
  "basis": ["T", "X", "Y"],
  "brackets": [
    {"on": ["T", "X"], "result": {"T": "1", "Y": "2"}},
    {"on": ["T", "Y"], "result": {"X": "-2"}},
    {"on": ["X", "Y"], "result": {"T": "2"}}
  ]
}"#;

#[test]
fn validate_builtins() {
    for name in ["builtin:su2", "builtin:su3", "builtin:torus3"] {
        let out = liecoh(&["validate", name, "--json"]);
        assert_eq!(code(&out), 0, "{name}");
        assert_eq!(json(&out)["jacobi"], "ok");
    }
}

#[test]
fn validate_reports_jacobi_witness() {
    let dir = tempfile::tempdir().unwrap();
    let path = write(dir.path(), "bad.json", PERTURBED_SU2);
    let out = liecoh(&["validate", &path, "--json"]);
    assert_eq!(code(&out), 2);
    let err = &json(&out)["error"];
    assert_eq!(err["kind"], "math_failure");
    assert_eq!(err["detail"]["witness"]["triple"], serde_json::json!(["T", "X", "Y"]));
    assert!(String::from_utf8_lossy(&out.stderr).contains("exit 2"));
}

#[test]
fn classify_su2_cr() {
    let out = liecoh(&["classify", "--algebra", "builtin:su2", "--subalgebra", "span{L}", "--json"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["classification"]["CR"], true);
    assert_eq!(v["bct"]["verdict"], "Inconclusive");
}

#[test]
fn classify_su3_levi_hypocomplex() {
    let out = liecoh(&["classify", "--algebra", "builtin:su3", "--subalgebra", "span{L1,L2,L3,T2}", "--json"]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["bct"]["verdict"], "HypocomplexByBCT");
}

#[test]
fn classify_rejects_non_subalgebra() {
    let out = liecoh(&["classify", "--algebra", "builtin:su2", "--subalgebra", "span{X}", "--json"]);
    assert_eq!(code(&out), 0, "a real line is closed");
    let out = liecoh(&["classify", "--algebra", "builtin:su2", "--subalgebra", "span{X,Y}", "--json"]);
    assert_eq!(code(&out), 2);
    assert!(json(&out)["error"]["detail"]["not_closed"].is_array());
}

#[test]
fn bigraded_table_su2() {
    let out = liecoh(&["cohomology", "--algebra", "builtin:su2", "--subalgebra", "span{T,L}", "--json"]);
    assert_eq!(code(&out), 0);
    let dims = &json(&out)["table"]["dims"];
    let expect = [("0,0", 1), ("0,1", 1), ("0,2", 0), ("1,0", 0), ("1,1", 1), ("1,2", 1)];
    for (k, d) in expect {
        assert_eq!(dims[k], d, "H^{{{k}}}");
    }
}

#[test]
fn absolute_and_relative_cohomology() {
    let out = liecoh(&["cohomology", "--algebra", "builtin:su2", "--json"]);
    assert_eq!(code(&out), 0);
    let dims = &json(&out)["table"]["dims"];
    assert_eq!((dims["0"].clone(), dims["1"].clone(), dims["2"].clone(), dims["3"].clone()), (1.into(), 0.into(), 0.into(), 1.into()));

    let out = liecoh(&["cohomology", "--algebra", "builtin:su2", "--relative", "span{T}", "--json"]);
    assert_eq!(code(&out), 0);
    let dims = &json(&out)["table"]["dims"];
    assert_eq!(dims["0"], 1);
    assert_eq!(dims["2"], 1);
}

#[test]
fn decompose_matches_bigraded() {
    let out = liecoh(&["decompose", "--algebra", "builtin:su2", "--subalgebra", "span{T,L}", "--json"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["matches_bigraded"], true);
    assert_eq!(v["p_summed"], serde_json::json!([1, 2, 1]));
    assert_eq!(v["dual"]["dims"], v["bigraded"]["dims"]);
}

#[test]
fn decompose_requires_elliptic() {
    let out = liecoh(&["decompose", "--algebra", "builtin:su2", "--subalgebra", "span{L}", "--json"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn torus_solve_rational() {
    let dir = tempfile::tempdir().unwrap();
    let rhs = write(
        dir.path(),
        "f.json",
        r#"{"cutoff": 3, "coefficients": [{"xi": 1, "eta": 1, "value": "1"}, {"xi": 2, "eta": 3, "value": "1"}]}"#,
    );
    let out = liecoh(&["torus-solve", "--mu", "2/3", "--rhs", &rhs, "--json"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    let sol = &v["solution"];
    assert_eq!(sol["obstructions"], serde_json::json!([[2, 3]]));
    assert_eq!(sol["u"]["coefficients"][0]["value"], "-3i");
    assert_eq!(sol["residual_ok"], true);
}

#[test]
fn torus_solve_continued_fraction() {
    let out = liecoh(&["torus-solve", "--cf", "1,1,1,1,1,1,1,1,1,1,...", "--depth", "8", "--json"]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["divisors"]["verdict"], "diophantine_evidence");
}

#[test]
fn exit_codes() {
    assert_eq!(code(&liecoh(&["--help"])), 0);
    assert_eq!(code(&liecoh(&["--version"])), 0);
    assert_eq!(code(&liecoh(&["frobnicate"])), 64);
    assert_eq!(code(&liecoh(&["classify", "--subalgebra", "span{L}"])), 64);
    assert_eq!(code(&liecoh(&["validate", "/nonexistent/g.json"])), 66);

    let dir = tempfile::tempdir().unwrap();
    let junk = write(dir.path(), "junk.json", "{ not json");
    assert_eq!(code(&liecoh(&["validate", &junk])), 65);
    let unknown = write(dir.path(), "u.json", r#"{"name": "g", "basis": ["A"], "brackets": [{"on": ["A", "B"], "result": {}}]}"#);
    assert_eq!(code(&liecoh(&["validate", &unknown])), 65);
    assert_eq!(code(&liecoh(&["torus-solve", "--cf", "1,x,2"])), 65);
}

#[test]
fn threads_env_is_checked() {
    let out = Command::new(env!("CARGO_BIN_EXE_liecoh"))
        .args(["validate", "builtin:su2"])
        .env("LIECOH_THREADS", "zero")
        .output()
        .unwrap();
    assert_eq!(code(&out), 64);
    let out = Command::new(env!("CARGO_BIN_EXE_liecoh"))
        .args(["cohomology", "--algebra", "builtin:su3", "--subalgebra", "span{L1,L2,L3,T1,T2}", "--json"])
        .env("LIECOH_THREADS", "1")
        .output()
        .unwrap();
    assert_eq!(code(&out), 0);
}

#[test]
fn json_is_deterministic() {
    let args = ["decompose", "--algebra", "builtin:su2", "--subalgebra", "span{T,L}", "--json"];
    let a = liecoh(&args);
    let b = liecoh(&args);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    let args = ["roots", "--algebra", "builtin:su3", "--torus", "span{T1,T2}", "--json"];
    assert_eq!(liecoh(&args).stdout, liecoh(&args).stdout);
}

#[test]
fn subalgebra_file_names_its_algebra() {
    let dir = tempfile::tempdir().unwrap();
    let sub = write(dir.path(), "h.json", r#"{"algebra": "su2", "vectors": [{"T": "1"}, {"X": "1", "Y": "-i"}]}"#);
    let out = liecoh(&["cohomology", "--subalgebra", &sub, "--json"]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(json(&out)["table"]["dims"]["1,2"], 1);
}
