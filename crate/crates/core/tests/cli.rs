use std::process::{Command, Output};

fn bizeta(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bizeta")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn eval_prints_json() {
    let o = bizeta(&["eval", "barnes", "--s", "2", "--z", "1", "--omegas", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    let re = v["value"]["re"].as_f64().unwrap();
    assert!((re - std::f64::consts::PI.powi(2) / 6.0).abs() < 1e-12);
    assert_eq!(v["method"], "direct");
    assert!(v["err_estimate"].as_f64().unwrap() >= 0.0);
}

#[test]
fn eval_accepts_directed_literals() {
    let up = bizeta(&["eval", "barnes", "--s", "2.5", "--z", "1@2.2", "--omegas", "1@2.5"]);
    let down =
        bizeta(&["eval", "barnes", "--s", "2.5", "--z", "1@-4.083185307179586", "--omegas", "1@-3.7831853071795862"]);
    assert_eq!(up.status.code(), Some(0));
    let a: serde_json::Value = serde_json::from_str(stdout(&up).trim()).unwrap();
    let b: serde_json::Value = serde_json::from_str(stdout(&down).trim()).unwrap();
    // The same points one turn apart: values differ by e^{-2πis} = -1 at s = 5/2.
    let (ar, br) = (a["value"]["re"].as_f64().unwrap(), b["value"]["re"].as_f64().unwrap());
    assert!((ar + br).abs() < 1e-10 * ar.abs().max(1.0), "{ar} {br}");
}

#[test]
fn pole_is_a_domain_error() {
    let o = bizeta(&["eval", "barnes", "--s", "1", "--z", "0.5", "--omegas", "1"]);
    assert_eq!(o.status.code(), Some(2));
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["error"]["kind"], "PoleError");
}

#[test]
fn outside_domain_is_exit_2() {
    // ω_0 must have argument in (0, π].
    let o = bizeta(&["eval", "xi", "--s", "3", "--z", "1", "--omega0", "1@-1", "--omegas", ""]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn usage_errors_are_exit_64() {
    assert_eq!(bizeta(&["eval", "nonsense"]).status.code(), Some(64));
    assert_eq!(bizeta(&["eval", "barnes", "--s", "x1", "--z", "1", "--omegas", "1"]).status.code(), Some(64));
    assert_eq!(bizeta(&["eval", "barnes", "--z", "1", "--omegas", "1"]).status.code(), Some(64));
    assert_eq!(bizeta(&["verify", "--suite", "no_such_suite"]).status.code(), Some(64));
    assert_eq!(bizeta(&["frobnicate"]).status.code(), Some(64));
}

#[test]
fn verify_formats_and_failure_code() {
    let o = bizeta(&["verify", "--suite", "eta", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(text.lines().next(), Some("name,abs_residual,rel_residual,tol,pass,elapsed_ms"));
    assert_eq!(text.lines().count(), 8);

    let o = bizeta(&["verify", "--suite", "eta", "--tol", "1e-30"]);
    assert_eq!(o.status.code(), Some(1));
    for line in stdout(&o).lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert!(v["name"].is_string() && v["lhs"].is_array());
    }
}

#[test]
fn list_names_every_suite() {
    let o = bizeta(&["list"]);
    assert_eq!(o.status.code(), Some(0));
    for s in bizeta::verify::SUITES {
        assert!(stdout(&o).contains(s));
    }
}

#[test]
fn verify_accepts_alias_spellings() {
    let a = bizeta(&["verify", "--suites", "eta", "--format", "json", "--seed", "3"]);
    let b = bizeta(&["verify", "--suite", "eta", "--format", "jsonl", "--seed", "3"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout(&a).lines().all(|l| l.starts_with('{')));
}
