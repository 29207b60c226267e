use std::process::{Command, Output};

use serde_json::Value;

fn sylowlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sylowlab"))
        .args(args)
        .output()
        .unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn order_output() {
    let out = sylowlab(&[
        "order",
        "--family",
        "A",
        "--rank",
        "1",
        "--q",
        "5",
        "--variant",
        "psl",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        String::from_utf8(out.stdout).unwrap().trim(),
        r#"{"borel_order":10,"group_order":60,"sylow_order":5,"torus_order":2}"#
    );
}

#[test]
fn opposite_prob_psl2_7() {
    let out = sylowlab(&[
        "opposite-prob",
        "--family",
        "A",
        "--rank",
        "1",
        "--q",
        "7",
        "--variant",
        "psl",
        "--trials",
        "100000",
        "--seed",
        "42",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["exact_value"], 0.875);
    assert_eq!(v["pass"], true);
    assert!(v["runtime_ms"].is_u64());
}

#[test]
fn coverage_k1_is_informational() {
    let out = sylowlab(&[
        "coverage", "--k", "1", "--rank", "1", "--q", "7", "--trials", "50",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["empirical_value"], 0.0);
}

#[test]
fn triple_size_gate_failure_exits_1() {
    let out = sylowlab(&["triple-size", "--rank", "1", "--q", "5", "--trials", "200"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["pass"], false);
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(sylowlab(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(
        sylowlab(&["verify-uuuv", "--rank", "1", "--q", "5", "--variant", "sl"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        sylowlab(&["order", "--rank", "1", "--q", "6"]).status.code(),
        Some(2)
    );
    assert_eq!(sylowlab(&["toffoli", "--rank", "1"]).status.code(), Some(2));
    assert_eq!(
        sylowlab(&["opposite-prob", "--rank", "1", "--q", "5", "--trials", "0"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn resource_cap_exits_3() {
    let gates = std::env::temp_dir().join(format!("sylowlab-gates-{}.conf", std::process::id()));
    std::fs::write(&gates, "enum_cap = 100\n").unwrap();
    let out = sylowlab(&[
        "verify-uuuv",
        "--rank",
        "1",
        "--q",
        "7",
        "--gates",
        gates.to_str().unwrap(),
    ]);
    std::fs::remove_file(&gates).ok();
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn no_timing_is_byte_reproducible() {
    let args = [
        "triple-size",
        "--rank",
        "1",
        "--q",
        "7",
        "--trials",
        "100",
        "--seed",
        "9",
        "--no-timing",
    ];
    let (a, b) = (sylowlab(&args), sylowlab(&args));
    assert_eq!(a.stdout, b.stdout);
    assert!(json(&a).get("runtime_ms").is_none());
    let threaded = sylowlab(&[&args[..], &["--threads", "1"]].concat());
    assert_eq!(a.stdout, threaded.stdout);
}

#[test]
fn per_trial_csv() {
    let out = sylowlab(&[
        "criterion",
        "--rank",
        "1",
        "--q",
        "5",
        "--trials",
        "5",
        "--format",
        "csv",
        "--per-trial",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 6);
    assert!(lines[0].starts_with("trial_index,seed_stream,outcome,block_1"));
    assert!(lines[1].starts_with("0,0,true,"));
}

#[test]
fn bruhat_of_a_matrix() {
    let out = sylowlab(&[
        "bruhat",
        "--rank",
        "1",
        "--q",
        "7",
        "--variant",
        "sl",
        "--matrix",
        "0,-1;1,0",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["cell"], serde_json::json!([1, 0]));
    assert_eq!(v["big_cell"], true);
    assert_eq!(v["roundtrip"], true);
}

#[test]
fn params_rows() {
    let out = sylowlab(&["params", "--family", "E8"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v[0]["positive_roots"], 120);
    assert_eq!(v[0]["weyl_order"], "696729600");
}

#[test]
fn params_degree_bound_respects_q0() {
    let out = sylowlab(&["params", "--family", "A", "--rank", "2", "--q", "4"]);
    assert_eq!(json(&out)[0]["e_lower_bound"]["below_threshold"], 11);
    let out = sylowlab(&["params", "--family", "A", "--rank", "2", "--q", "13"]);
    assert!(json(&out)[0]["e_lower_bound"].is_string());
}
