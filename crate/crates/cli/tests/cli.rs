//! End-to-end tests of the command-line interface: exit codes, output
//! determinism, and the shipped state fixtures.

use std::path::PathBuf;
use std::process::{Command, Output};

use spinor_invariants::state::examples::{all_catalog_states, catalog_state};
use spinor_invariants::state::StateTensor;

fn spinv(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_spinv"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn fixture(name: &str) -> String {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../data/states")
        .join(format!("{name}.json"));
    path.to_string_lossy().into_owned()
}

#[test]
fn shipped_fixtures_match_the_catalog_states() {
    for (name, entry) in all_catalog_states() {
        let text = std::fs::read_to_string(fixture(name)).expect("fixture exists");
        let loaded = StateTensor::from_json(&text).expect("fixture parses");
        assert!(
            loaded.max_diff(&entry.state) < 1e-15,
            "fixture {name} drifted from the catalog"
        );
    }
}

#[test]
fn eval_reports_the_flagship_value() {
    let out = spinv(&["eval", "--state", &fixture("epr2"), "--names", "I1"]);
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("I1"), "{text}");
    assert!(text.contains("5.000000e-1"), "{text}");
}

#[test]
fn eval_unknown_name_exits_3() {
    let out = spinv(&["eval", "--state", &fixture("epr2"), "--names", "nope"]);
    assert_eq!(out.status.code(), Some(3));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("known names"), "{err}");
}

#[test]
fn eval_malformed_state_exits_2() {
    let dir = std::env::temp_dir().join("spinv-test-bad-state");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bad.json");
    std::fs::write(&path, "{ not json").unwrap();
    let out = spinv(&["eval", "--state", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn contract_evaluates_and_reports_plan_cost() {
    let dir = std::env::temp_dir().join("spinv-test-contract");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("basis000.json");
    std::fs::write(
        &path,
        StateTensor::<f64>::basis_state(&[0, 0, 0])
            .unwrap()
            .to_json(),
    )
    .unwrap();
    let out = spinv(&[
        "contract",
        "g0[l i] g0[m j] g0[n k] Psi*[i j k] Psi[l m n]",
        "--state",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("abs"), "{text}");
    assert!(text.contains("1.000000e+0"), "{text}");
    assert!(text.contains("plan flops"), "{text}");
}

#[test]
fn contract_parity_violation_exits_4_naming_the_letter() {
    let out = spinv(&[
        "contract",
        "C[i j] Psi[j k] Psi*[i n] g0[k n]",
        "--state",
        &fixture("epr2"),
    ]);
    assert_eq!(out.status.code(), Some(4));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains('i') && err.contains("parity"), "{err}");
}

#[test]
fn balance_verdicts_for_the_flagship_states() {
    let out = spinv(&["balance", "--state", &fixture("w3"), "--frames", "5"]);
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("balanced           no"), "{text}");
    assert!(text.contains("affinely balanced  no"), "{text}");

    let out = spinv(&["balance", "--state", &fixture("req1"), "--frames", "5"]);
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("affinely balanced  yes"), "{text}");
    assert!(text.contains("balanced           no"), "{text}");
}

#[test]
fn rank_family_reports_twenty() {
    let out = spinv(&["rank", "--family", "2p-3-1", "--format", "json"]);
    assert!(out.status.success());
    let payload: serde_json::Value =
        serde_json::from_slice(&out.stdout).expect("valid JSON output");
    assert_eq!(payload["schema"], 1);
    assert_eq!(payload["rank"], 20);
}

#[test]
fn check_json_output_is_deterministic() {
    let run = || spinv(&["check", "algebra", "--format", "json", "--seed", "7"]);
    let a = run();
    let b = run();
    assert!(a.status.success());
    assert_eq!(
        a.stdout, b.stdout,
        "identical seed must give identical bytes"
    );
    let payload: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(payload["schema"], 1);
    assert_eq!(payload["passed"], true);
}

#[test]
fn check_unknown_suite_fails() {
    let out = spinv(&["check", "nonsense"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn evolve_emits_csv_with_constant_invariant_magnitude() {
    // massless charged evolution: |I1| of the entangled pair stays constant
    let out = spinv(&[
        "evolve", "--t0", "0", "--t1", "0.5", "--dt", "0.001", "--mass", "0", "--charge", "1.0",
        "--a0", "0.5",
    ]);
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    let mut lines = text.lines();
    let header = lines.next().unwrap();
    assert_eq!(
        header,
        "t,re_C,im_C,re_C5,im_C5,re_G0,im_G0,re_G05,im_G05,abs_I1,abs_I2"
    );
    let mut abs_i1 = Vec::new();
    for line in lines {
        let cols: Vec<&str> = line.split(',').collect();
        assert_eq!(cols.len(), 11);
        abs_i1.push(cols[9].parse::<f64>().unwrap());
    }
    assert!(abs_i1.len() > 400);
    let first = abs_i1[0];
    assert!((first - 0.5).abs() < 1e-9);
    for v in abs_i1 {
        assert!((v - first).abs() < 1e-6);
    }
}

#[test]
fn eval_honors_the_thread_cap() {
    let out = Command::new(env!("CARGO_BIN_EXE_spinv"))
        .args([
            "eval",
            "--state",
            &fixture("epr2"),
            "--state",
            &fixture("xccx"),
            "--names",
            "I1,T1",
        ])
        .env("SPINOR_INV_THREADS", "1")
        .output()
        .expect("binary runs");
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    // both states reported, input order preserved
    let epr_pos = text.find("epr2.json").unwrap();
    let xccx_pos = text.find("xccx.json").unwrap();
    assert!(epr_pos < xccx_pos);
}

#[test]
fn eval_on_a_product_state_reports_zero_indicators() {
    let dir = std::env::temp_dir().join("spinv-test-product");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("product.json");
    std::fs::write(
        &path,
        StateTensor::<f64>::basis_state(&[2, 1]).unwrap().to_json(),
    )
    .unwrap();
    let out = spinv(&[
        "eval",
        "--state",
        path.to_str().unwrap(),
        "--names",
        "I1,I2,R1,T1,Q2,N1",
        "--format",
        "json",
    ]);
    assert!(out.status.success());
    let payload: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    for row in payload["states"][0]["rows"].as_array().unwrap() {
        let abs = row["abs"].as_f64().unwrap();
        if row["scope"] == "not-indicator" {
            assert!(abs > 0.1, "N1 on a basis product state is nonzero");
        } else {
            assert!(abs < 1e-12, "indicator {} nonzero: {abs}", row["name"]);
        }
    }
}
