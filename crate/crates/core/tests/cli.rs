use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn systolic(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_systolic"))
        .args(args)
        .env_remove("SYSTOLIC_THREADS")
        .output()
        .expect("binary runs")
}

fn with_threads(n: &str, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_systolic"))
        .args(args)
        .env("SYSTOLIC_THREADS", n)
        .output()
        .expect("binary runs")
}

fn validator() -> jsonschema::Validator {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("schemas/output.schema.json");
    let schema: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    jsonschema::validator_for(&schema).expect("schema compiles")
}

fn json_ok(args: &[&str]) -> Value {
    let out = systolic(args);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    let errors: Vec<String> = validator().iter_errors(&v).map(|e| e.to_string()).collect();
    assert!(errors.is_empty(), "{args:?} fails the schema: {errors:?}");
    v
}

const PANTS_4: [&str; 8] = ["--kind", "pants", "--l1", "4", "--l2", "4", "--l3", "4"];

#[test]
fn every_command_validates_against_the_schema() {
    json_ok(&["constants"]);
    json_ok(&["lemma", "--which", "1", "--samples", "50"]);
    json_ok(&["lemma", "--which", "2", "--samples", "50"]);
    json_ok(&["lemma", "--which", "3", "--depth", "6"]);
    json_ok(&[&["surface"][..], &PANTS_4].concat());
    json_ok(&["surface", "--kind", "torus", "--l", "3", "--tau", "0.5"]);
    json_ok(&[&["systole"][..], &PANTS_4, &["--depth", "6"]].concat());
    json_ok(
        &[
            &["poincare"][..],
            &PANTS_4,
            &["--sigma", "0.4", "--depth", "6"],
        ]
        .concat(),
    );
    json_ok(&[
        "poincare", "--kind", "torus", "--l", "4", "--sigma", "0.5", "--depth", "6",
    ]);
    json_ok(
        &[
            &["delta"][..],
            &PANTS_4,
            &["--radii", "4,8", "--depth", "6"],
        ]
        .concat(),
    );
}

#[test]
fn schema_rejects_malformed_documents() {
    let v = validator();
    assert!(!v.is_valid(&serde_json::json!({ "command": "constants" })));
    let mut doc = json_ok(&["constants"]);
    doc["results"].as_array_mut().unwrap().pop();
    assert!(!v.is_valid(&doc));
}

#[test]
fn constants_reports_in_order() {
    let v = json_ok(&["constants"]);
    let names: Vec<&str> = v["results"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["name"].as_str().unwrap())
        .collect();
    assert_eq!(
        names,
        [
            "quartic_root",
            "torus_exponent_constant",
            "torus_half_threshold",
            "pants_exponent_constant",
            "pants_half_threshold",
            "lemma3_threshold",
            "bolza_systole"
        ]
    );
}

#[test]
fn constants_csv_header() {
    let out = systolic(&["constants", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(
        text.lines().next(),
        Some("name,computed,paper_value,relation,ok")
    );
    assert_eq!(text.lines().count(), 8);
    assert!(text.lines().skip(1).all(|l| l.ends_with(",true")));
}

#[test]
fn exit_codes() {
    assert_eq!(systolic(&["constants", "--bogus"]).status.code(), Some(64));
    assert_eq!(systolic(&[]).status.code(), Some(64));
    assert_eq!(systolic(&["--help"]).status.code(), Some(0));
    assert_eq!(systolic(&["lemma", "--which", "4"]).status.code(), Some(64));
    assert_eq!(
        systolic(&["lemma", "--which", "1", "--samples", "10000001"])
            .status
            .code(),
        Some(64)
    );
    assert_eq!(
        systolic(&["surface", "--kind", "pants", "--l1", "4"])
            .status
            .code(),
        Some(64)
    );
    assert_eq!(
        systolic(&["systole", "--kind", "torus", "--l", "4", "--depth", "17"])
            .status
            .code(),
        Some(64)
    );
    let usage = systolic(&["constants", "--bogus"]);
    assert!(String::from_utf8_lossy(&usage.stderr).contains("Usage"));
    assert_eq!(with_threads("zero", &["constants"]).status.code(), Some(64));
}

#[test]
fn computation_error_exits_3() {
    // torus seam too short to close up
    let out = systolic(&["surface", "--kind", "torus", "--l", "0.5", "--seam", "0.5"]);
    assert_eq!(
        out.status.code(),
        Some(3),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    assert!(!out.stderr.is_empty());
}

#[test]
fn inapplicable_torus_majorant_reports_null() {
    // short torus systole: the majorant does not apply, nothing to violate
    let out = systolic(&[
        "poincare", "--kind", "torus", "--l", "1", "--sigma", "3", "--depth", "4",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["results"]["within_bound"], Value::Null);
}

#[test]
fn pants_poincare_within_bound() {
    let v = json_ok(&[
        "poincare",
        "--kind",
        "pants",
        "--l1",
        "2.7726",
        "--l2",
        "2.7726",
        "--l3",
        "2.7726",
        "--sigma",
        "0.6",
        "--depth",
        "12",
        "--no-identity",
    ]);
    assert_eq!(v["results"]["within_bound"], true);
    assert_eq!(v["results"]["include_identity"], false);
}

#[test]
fn torus_systole_is_the_curve() {
    let v = json_ok(&[
        "systole", "--kind", "torus", "--l", "4", "--tau", "0", "--depth", "12",
    ]);
    assert!(v["results"]["length"].as_f64().unwrap() <= 4.0 + 1e-9);
    let minimizers: Vec<&str> = v["results"]["minimizers"]
        .as_array()
        .unwrap()
        .iter()
        .map(|w| w.as_str().unwrap())
        .collect();
    assert!(minimizers.contains(&"A"));
}

#[test]
fn surface_pants_boundary_lengths() {
    let v = json_ok(&[&["surface"][..], &PANTS_4].concat());
    for b in v["results"]["boundary"].as_array().unwrap() {
        assert!((b["translation_length"].as_f64().unwrap() - 4.0).abs() < 1e-9);
    }
}

#[test]
fn lemma_sweeps_exit_zero() {
    for which in ["1", "2"] {
        let out = systolic(&[
            "lemma",
            "--which",
            which,
            "--samples",
            "20000",
            "--seed",
            "0",
            "--format",
            "csv",
        ]);
        assert_eq!(out.status.code(), Some(0));
        let text = String::from_utf8(out.stdout).unwrap();
        assert_eq!(text.lines().count(), 20001);
        assert!(text.lines().skip(1).all(|l| l.ends_with(",true")));
    }
}

#[test]
fn output_is_byte_identical_across_runs_and_threads() {
    let args = ["lemma", "--which", "1", "--samples", "3000", "--seed", "9"];
    let a = systolic(&args).stdout;
    assert_eq!(a, systolic(&args).stdout);
    assert_eq!(a, with_threads("1", &args).stdout);
    assert_eq!(a, with_threads("3", &args).stdout);

    let args = [
        &["poincare"][..],
        &PANTS_4,
        &["--sigma", "0.5", "--depth", "9"],
    ]
    .concat();
    let a = with_threads("1", &args).stdout;
    assert!(!a.is_empty());
    assert_eq!(a, with_threads("4", &args).stdout);
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir().join(format!("systolic-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("constants.csv");
    let out = systolic(&[
        "constants",
        "--format",
        "csv",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("name,computed,paper_value,relation,ok\n"));
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn constants_json_matches_golden_file() {
    let golden = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden/constants.json");
    let out = systolic(&["constants"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        std::fs::read_to_string(golden).unwrap()
    );
}
