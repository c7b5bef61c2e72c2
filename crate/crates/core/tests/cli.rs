use std::process::Command as Process;

use neat_disks::cli::{run, EXIT_USAGE};
use serde_json::Value;

fn spec(name: &str) -> String {
    format!("{}/specs/{name}.spec", env!("CARGO_MANIFEST_DIR"))
}

fn json(args: &[&str]) -> (Value, i32) {
    let mut full = vec!["neat-disks"];
    full.extend_from_slice(args);
    let out = run(full);
    (serde_json::from_str(&out.stdout).unwrap_or(Value::Null), out.exit_code)
}

#[test]
fn dax_target_tower() {
    let (v, code) = json(&["dax-target", &spec("mc_2t2"), "--window", "6"]);
    assert_eq!(code, 0);
    let r = &v["result"];
    let factors: Vec<&str> = r["invariant_factors"].as_array().unwrap().iter().map(|f| f.as_str().unwrap()).collect();
    assert_eq!(factors, ["Z/2", "Z/2", "Z/2", "Z/2", "Z/2", "Z"]);
    assert_eq!(r["stable"], true);
    assert_eq!(v["flags"]["completeness"], "complete");
}

#[test]
fn is_abelian_verdicts() {
    let (v, code) = json(&["is-abelian", &spec("boundary_sum")]);
    assert_eq!(code, 0);
    assert_eq!(v["result"], serde_json::json!({ "verdict": "yes" }));
    let (v, _) = json(&["is-abelian", &spec("non_abelian")]);
    assert_eq!(v["result"]["verdict"], "no");
    assert_eq!(v["result"]["witness"]["lambda_bar"], "g");
}

#[test]
fn rel_dax_and_fq() {
    let (v, code) = json(&["rel-dax", &spec("mc"), "fm(t + t^-1)", "fm(0)"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["dax"], "t + t^-1");
    let (v, _) = json(&["fq", &spec("closed_dax_s1xs2"), "fm(3*g) * sec(a1)", "sec(a1)"]);
    assert_eq!(v["result"]["fq"], "g");
    let (v, code) = json(&["rel-dax", &spec("mc"), "fm(t)", "U"]);
    assert_eq!(code, 1);
    assert!(v["diagnostics"][0].as_str().unwrap().contains("not homotopic"));
}

#[test]
fn realize_poly() {
    let (v, code) = json(&["realize-poly", "-t + t^2"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["reassembled"], "-t + t^2");
    assert_eq!(v["flags"]["completeness"], Value::Null);
    let (_, code) = json(&["realize-poly", "t^-1"]);
    assert_eq!(code, 1);
}

#[test]
fn check_invariants_on_corpus() {
    for name in ["mc", "mc_2t2", "mc_t", "mc_framed", "boundary_sum", "closed_dax", "closed_dax_s1xs2", "non_abelian", "minimal"] {
        let (v, code) = json(&["check-invariants", &spec(name), "--strict"]);
        assert_eq!(code, 0, "{name}: {v}");
        assert_eq!(v["flags"]["verdicts"][0], "yes", "{name}");
    }
}

#[test]
fn dk_structure_reports() {
    let (v, code) = json(&["dk-structure", &spec("boundary_sum")]);
    assert_eq!(code, 0);
    let r = &v["result"];
    assert_eq!(r["dax_span"], "0");
    assert_eq!(r["quotient"]["rank"], 0);
    assert_eq!(r["abelian"]["verdict"], "yes");
    let (v, _) = json(&["dk-structure", &spec("mc_framed")]);
    assert_eq!(v["result"]["spin"], false);
    assert_eq!(v["result"]["d0_index"], 2);
}

#[test]
fn exit_codes() {
    assert_eq!(run(["neat-disks", "frobnicate"]).exit_code, EXIT_USAGE);
    assert_eq!(run(["neat-disks", "dax-target"]).exit_code, EXIT_USAGE);
    assert_eq!(run(["neat-disks", "--help"]).exit_code, 0);
    assert_eq!(run(["neat-disks", "--version"]).exit_code, 0);
    assert_eq!(run(["neat-disks", "dax-target", "/nonexistent.spec"]).exit_code, 1);
    let free = format!("{}/tests/free_rank_two.spec", env!("CARGO_MANIFEST_DIR"));
    assert_eq!(run(["neat-disks", "dax-target", &free, "--window", "3"]).exit_code, 0);
    assert_eq!(run(["neat-disks", "dax-target", &free, "--window", "3", "--strict"]).exit_code, 2);
}

#[test]
fn syntax_errors_carry_positions() {
    let dir = std::env::temp_dir().join(format!("neat-disks-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bad.spec");
    std::fs::write(&path, "[manifold]\npi1 = Z(t)\n[pi2]\nbasis = S\n[mu2]\nS = t + q\n").unwrap();
    let (v, code) = json(&["dax-target", path.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(v["diagnostics"][0].as_str().unwrap().contains("6:9"), "{v}");
}

#[test]
fn reports_are_deterministic() {
    let a = run(["neat-disks", "dk-structure", &spec("closed_dax")]);
    let b = run(["neat-disks", "dk-structure", &spec("closed_dax")]);
    assert_eq!(a.stdout, b.stdout);
    let t = run(["neat-disks", "is-abelian", &spec("boundary_sum"), "--format", "text"]);
    assert!(t.stdout.starts_with("command: is-abelian\n"));
}

#[test]
fn binary_exit_status() {
    let bin = env!("CARGO_BIN_EXE_neat-disks");
    let ok = Process::new(bin).args(["is-abelian", &spec("boundary_sum")]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&ok.stdout).unwrap();
    assert_eq!(v["command"], "is-abelian");
    assert_eq!(v["input_digest"].as_str().unwrap().len(), 64);
    let bad = Process::new(bin).arg("bogus").output().unwrap();
    assert_eq!(bad.status.code(), Some(EXIT_USAGE));
}
