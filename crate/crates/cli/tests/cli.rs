use std::fs;
use std::process::{Command, Output};

use serde_json::Value;

fn su2pf(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_su2pf"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn details<'a>(v: &'a Value, name: &str) -> &'a Value {
    let check = v["checks"].as_array().unwrap().iter().find(|c| c["name"] == name);
    &check.unwrap_or_else(|| panic!("no check {name}"))["details"]
}

fn complex(v: &Value) -> (f64, f64) {
    (v[0].as_f64().unwrap(), v[1].as_f64().unwrap())
}

#[test]
fn verify_all_report_shape() {
    let out = su2pf(&["verify-all"]);
    let v = json(&out);
    assert_eq!(v["schema"], "1");
    let checks = v["checks"].as_array().unwrap();
    assert_eq!(checks.len(), 12);
    let names: Vec<&str> = checks.iter().map(|c| c["name"].as_str().unwrap()).collect();
    let mut sorted = names.clone();
    sorted.sort();
    assert_eq!(names, sorted);
    let passed = checks.iter().filter(|c| c["status"] == "pass").count();
    assert_eq!(v["summary"]["total"], 12);
    assert_eq!(v["summary"]["passed"], passed);
    assert_eq!(v["summary"]["failed"], 12 - passed);
    assert!(checks.iter().all(|c| !c["anchor"].as_str().unwrap().is_empty()));
    assert!(checks.iter().all(|c| c["runtime_ms"].is_null()));
    let expected_code = if passed == 12 { 0 } else { 1 };
    assert_eq!(out.status.code(), Some(expected_code));
    // the θ-frame Weyl component is the only check that does not hold
    let failing: Vec<&str> = checks
        .iter()
        .filter(|c| c["status"] == "fail")
        .map(|c| c["name"].as_str().unwrap())
        .collect();
    assert_eq!(failing, ["c05_weyl_component"]);
}

#[test]
fn verify_all_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for path in [&a, &b] {
        su2pf(&[
            "verify-all",
            "--points",
            "5",
            "--seed",
            "7",
            "--out",
            path.to_str().unwrap(),
        ]);
    }
    let (a, b) = (fs::read(a).unwrap(), fs::read(b).unwrap());
    assert!(!a.is_empty());
    assert_eq!(a, b);
}

#[test]
fn timings_are_opt_in() {
    let v = json(&su2pf(&["verify-all", "--points", "2", "--timings"]));
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["runtime_ms"].is_f64()));
}

#[test]
fn tolerance_below_rounding_fails() {
    let out = su2pf(&["verify-all", "--tol", "1e-15"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(json(&out)["summary"]["failed"].as_u64().unwrap() > 1);
}

#[test]
fn invalid_configuration_exits_2() {
    for args in [
        &["verify-all", "--tol", "0"][..],
        &["verify-all", "--tol", "-1"],
        &["verify-all", "--points", "0"],
        &["verify-all", "--format", "yaml"],
        &["weyl", "--a2", "0", "--c2", "1"],
        &["weyl", "--a2", "1", "--c2", "banana"],
        &["gauss", "--case", "C"],
        &["gauge", "--case", "B", "--variant", "sign-reversed", "--r", "0"],
        &["gauge", "--case", "A", "--sign", "sideways", "--r", "0"],
    ] {
        let out = su2pf(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn weyl_real_path() {
    let out = su2pf(&["weyl", "--a2", "1", "--c2", "0"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let d = details(&v, "weyl_w2424");
    let (closed, _) = complex(&d["w2424_closed_form"]);
    assert!((closed + 0.03).abs() < 1e-6);
    let (w, _) = complex(&d["w2424"]);
    assert!((w.abs() - 0.03).abs() < 1e-6);
    assert_eq!(details(&v, "weyl_flatness")["flat"], false);
}

#[test]
fn weyl_complex_locus_is_flat() {
    for c2 in ["i/3", "-i/3", "3i", "[0,-3]"] {
        let out = su2pf(&["weyl", "--a2", "1", "--c2", c2]);
        assert_eq!(out.status.code(), Some(0), "{c2}");
        let v = json(&out);
        assert_eq!(details(&v, "weyl_flatness")["flat"], true, "{c2}");
    }
}

#[test]
fn gauss_curvatures() {
    for (case, want) in [("A", 1.0 / 9.0), ("b", 9.0)] {
        let out = su2pf(&["gauss", "--case", case]);
        assert_eq!(out.status.code(), Some(0));
        let v = json(&out);
        let name = format!("gauss_{}", case.to_lowercase());
        let (k, im) = complex(&details(&v, &name)["gauss_curvature"]);
        assert!((k - want).abs() < 1e-9 && im.abs() < 1e-9);
    }
}

#[test]
fn gauge_field_strengths() {
    let v = json(&su2pf(&[
        "gauge",
        "--case",
        "A",
        "--sign",
        "minus",
        "--variant",
        "complex",
        "--r",
        "0",
    ]));
    let f = &details(&v, "gauge_a_minus_complex")["field_strength"];
    let e3 = complex(&f[2]);
    assert!((e3.0 - 2.0 * 2f64.sqrt() / 3.0).abs() < 1e-12 && e3.1.abs() < 1e-12);
    for a in 0..2 {
        let (re, im) = complex(&f[a]);
        assert!(re.abs() < 1e-12 && im.abs() < 1e-12);
    }

    let r = std::f64::consts::FRAC_PI_6.to_string();
    let v = json(&su2pf(&["gauge", "--case", "B", "--variant", "real", "--r", &r]));
    let f = &details(&v, "gauge_b_real")["field_strength"];
    for a in 0..3 {
        let (re, im) = complex(&f[a]);
        assert!(re.abs() < 1e-12 && im.abs() < 1e-12);
    }

    let out = su2pf(&[
        "gauge",
        "--case",
        "A",
        "--sign",
        "plus",
        "--variant",
        "complex",
        "--r",
        "1.0",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert!(v["checks"][0]["max_residual"].as_f64().unwrap() < 1e-10);
    assert!(!details(&v, "gauge_a_plus_complex")["brackets"]
        .as_array()
        .unwrap()
        .is_empty());
}

#[test]
fn structure_from_params_file() {
    let dir = tempfile::tempdir().unwrap();
    let write = |name: &str, body: &str| {
        let p = dir.path().join(name);
        fs::write(&p, body).unwrap();
        p.to_str().unwrap().to_string()
    };

    let good = write(
        "good.json",
        r#"{"a1":[0,0],"b1":[1,0],"c1":[0,0],"a2":[1,0],"b2":[0,0],"c2":[1,0],"k":[1,0]}"#,
    );
    let out = su2pf(&["structure", "--params", &good]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let (h, _) = complex(&details(&v, "structure_equations")["h"]);
    assert!((h - 2.0).abs() < 1e-9);

    let locus = write("locus.json", r#"{"a1":0,"b1":1,"c1":0,"a2":1,"b2":0,"c2":"i/3","k":1}"#);
    assert_eq!(su2pf(&["structure", "--params", &locus]).status.code(), Some(0));

    let perturbed = write(
        "perturbed.json",
        r#"{"a1":[0.5,0],"b1":[1,0],"c1":[0,0],"a2":[1,0],"b2":[0,0],"c2":[1,0],"k":[1,0]}"#,
    );
    assert_eq!(su2pf(&["structure", "--params", &perturbed]).status.code(), Some(1));

    let wrong_f = write(
        "wrong_f.json",
        r#"{"a1":0,"b1":1,"c1":0,"a2":1,"b2":0,"c2":1,"k":1,"f":{"amp":1,"rate":1}}"#,
    );
    assert_eq!(su2pf(&["structure", "--params", &wrong_f]).status.code(), Some(1));

    for (name, body) in [
        ("truncated.json", r#"{"a1":[0,0],"b1":"#),
        ("missing.json", r#"{"a1":0,"b1":1,"c1":0,"a2":1,"b2":0,"c2":1}"#),
        (
            "extra.json",
            r#"{"a1":0,"b1":1,"c1":0,"a2":1,"b2":0,"c2":1,"k":1,"z":0}"#,
        ),
        (
            "badnum.json",
            r#"{"a1":0,"b1":1,"c1":0,"a2":1,"b2":0,"c2":"one","k":1}"#,
        ),
        ("zero_k.json", r#"{"a1":0,"b1":1,"c1":0,"a2":1,"b2":0,"c2":1,"k":0}"#),
    ] {
        let out = su2pf(&["structure", "--params", &write(name, body)]);
        assert_eq!(out.status.code(), Some(2), "{name}");
        assert!(String::from_utf8_lossy(&out.stderr).contains("su2pf:"), "{name}");
    }
    let absent = dir.path().join("absent.json");
    assert_eq!(
        su2pf(&["structure", "--params", absent.to_str().unwrap()])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn markdown_report() {
    let out = su2pf(&["gauss", "--case", "A", "--format", "markdown"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("# su2pf gauss"));
    assert!(text.contains("| gauss_a | PASS |"));
}
