//! End-to-end runs of the binary: printed values, exit codes, and the JSON schema.

use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::{json, Map, Value};

fn zetakit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_zetakit"))
        .args(args)
        .env_remove("ZETAKIT_QUAD_TOL")
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = zetakit(args);
    assert!(
        out.status.success(),
        "zetakit {args:?} exited with {:?}: {}",
        out.status.code(),
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("utf-8 output")
}

fn json_out(args: &[&str]) -> Value {
    let mut args = args.to_vec();
    args.push("--json");
    serde_json::from_str(&stdout(&args)).expect("valid JSON")
}

/// Structure without values: numbers and strings become their type names,
/// arrays keep only their first element.
fn shape(v: &Value) -> Value {
    match v {
        Value::Null => Value::Null,
        Value::Bool(_) => json!("bool"),
        Value::Number(_) => json!("number"),
        Value::String(_) => json!("string"),
        Value::Array(a) => Value::Array(a.first().map(shape).into_iter().collect()),
        Value::Object(o) => Value::Object(o.iter().map(|(k, v)| (k.clone(), shape(v))).collect::<Map<_, _>>()),
    }
}

fn golden(name: &str, args: &[&str]) {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(format!("{name}.json"));
    let got = shape(&json_out(args));
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, serde_json::to_string_pretty(&got).unwrap() + "\n").unwrap();
        return;
    }
    let want: Value = serde_json::from_str(&std::fs::read_to_string(&path).expect("golden file present")).unwrap();
    assert_eq!(got, want, "JSON shape of {args:?} changed; rerun with UPDATE_GOLDEN=1 if intended");
}

fn first_value(text: &str, label: &str) -> f64 {
    text.lines()
        .find_map(|l| l.strip_prefix(label))
        .and_then(|r| r.split_whitespace().next())
        .and_then(|v| v.parse().ok())
        .unwrap_or_else(|| panic!("no line starting with {label:?} in\n{text}"))
}

#[test]
fn airy_integer_values() {
    let out = stdout(&["values", "--model", "airy", "--n", "1..5"]);
    assert!(out.contains("-0.72901113294722"), "{out}");
    assert!(out.contains("0.531457231960998"), "{out}");
    assert!(out.contains("0.112561761215116"), "{out}");
    assert_eq!(out.lines().filter(|l| l.contains("recursion")).count(), 4);
}

#[test]
fn riemann_minus_one() {
    let out = stdout(&["values", "--model", "riemann", "--n", "-1"]);
    assert!(out.contains("-0.0833333333333333"), "{out}");
}

#[test]
fn confluent_value_is_checked() {
    let out = stdout(&["values", "--model", "chf", "--a", "0.5", "--b", "1.5", "--n", "2", "--check"]);
    assert!(out.contains("-0.0888888888888889"), "{out}");
    assert!(out.contains("continued"), "{out}");
}

#[test]
fn airy_poles_and_derivative() {
    let out = stdout(&["poles", "--model", "airy", "--check"]);
    assert!(out.contains("0.318309886183791"), "{out}");
    assert!(out.contains("zeta(0) = -0.25"), "{out}");
    assert!(out.contains("zeta'(0) = -0.22995365589"), "{out}");
}

#[test]
fn shifted_integers_match_hurwitz() {
    let v = json_out(&["shift", "--model", "riemann", "--A", "1", "--B", "-0.75", "--check"]);
    let items = v["items"].as_array().unwrap();
    assert_eq!(items.len(), 4);
    for it in items {
        let d = it["check"]["discrepancy"].as_f64().unwrap();
        assert!(d < 1e-12, "{it}");
    }
    assert!((v["zeta0"]["value"]["re"].as_f64().unwrap() - 0.25).abs() < 1e-14);
    assert!(v["check_zeta_prime0"]["discrepancy"].as_f64().unwrap() < 1e-12);
}

#[test]
fn aaa_default_run() {
    let out = stdout(&["aaa"]);
    assert!((first_value(&out, "zeta(0) = ") + 0.25).abs() < 5e-5, "{out}");
    assert!((first_value(&out, "zeta(-1/2) = ") + 0.1394).abs() < 2e-4, "{out}");
    assert!(out.contains("poles in [-3, 0]: -1.44"), "{out}");
}

#[test]
fn series_contour_continue_agree() {
    let s = first_value(&stdout(&["series", "--model", "airy", "--s", "2.5"]), "zeta(2.5) = ");
    let c = first_value(&stdout(&["contour", "--model", "airy", "--s", "2.5"]), "zeta(2.5) = ");
    let k = first_value(&stdout(&["continue", "--model", "airy", "--s", "2.5"]), "zeta(2.5) = ");
    assert!((s - c).abs() < 1e-9 && (s - k).abs() < 1e-9, "{s} {c} {k}");
}

#[test]
fn exit_codes() {
    assert_eq!(zetakit(&["values", "--model", "nope"]).status.code(), Some(2));
    assert_eq!(zetakit(&["values", "--model", "hurwitz"]).status.code(), Some(2));
    assert_eq!(zetakit(&["values", "--n", "x"]).status.code(), Some(2));
    assert_eq!(zetakit(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(zetakit(&["series", "--model", "pcf", "--a", "0", "--s", "3"]).status.code(), Some(2));
    // left of the table's reach: a computation failure
    assert_eq!(zetakit(&["continue", "--model", "airy", "--s", "-30"]).status.code(), Some(1));
    // the pole itself fails while other integers succeed
    let partial = zetakit(&["values", "--model", "riemann", "--n", "0..2"]);
    assert_eq!(partial.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&partial.stderr).contains("n = 1"));
    assert!(String::from_utf8_lossy(&partial.stdout).contains("-0.5"));
}

#[test]
fn quadrature_tolerance_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_zetakit"))
        .args(["continue", "--model", "airy", "--s", "-0.5", "--json"])
        .env("ZETAKIT_QUAD_TOL", "1e-6")
        .output()
        .unwrap();
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["tol"].as_f64(), Some(1e-6));
    let bad = Command::new(env!("CARGO_BIN_EXE_zetakit"))
        .args(["continue", "--model", "airy", "--s", "-0.5"])
        .env("ZETAKIT_QUAD_TOL", "tight")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn json_shapes() {
    golden("values", &["values", "--model", "airy", "--n", "1..3", "--check"]);
    golden("poles", &["poles", "--model", "airy", "--check"]);
    golden("shift", &["shift", "--model", "riemann", "--A", "1", "--B", "-0.75", "--check"]);
    golden("series", &["series", "--model", "airy", "--s", "3", "--check"]);
    golden("contour", &["contour", "--model", "airy", "--s", "3", "--check"]);
    golden("continue", &["continue", "--model", "airy", "--s", "-0.5", "--check"]);
    golden("aaa", &["aaa", "--check"]);
    golden("catalog", &["catalog", "--model", "airy", "--check"]);
}
