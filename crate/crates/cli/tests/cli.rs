use std::process::Command;

use serde_json::Value;
use stardom_cli::{run_at, Outcome};
use stardom_core::report::validate_envelope;

fn argv(line: &str) -> Vec<String> {
    std::iter::once("stardom").chain(line.split_whitespace()).map(String::from).collect()
}

fn run(line: &str) -> (Outcome, Value) {
    let o = run_at(&argv(line), 1_700_000_000).expect("report, not help text");
    let v: Value = serde_json::from_str(&o.report).expect("report is JSON");
    validate_envelope(&v).expect("envelope shape");
    (o, v)
}

#[test]
fn guard_star_of_st5_is_a_perfect_wced() {
    let (o, v) = run("verify wced --family std --n 5 --guard 0");
    assert_eq!(o.code, 0);
    assert_eq!(v["status"], "verified");
    let check = &v["result"]["check"];
    assert_eq!(check["pm_stable"], true);
    assert_eq!(check["domination"]["outcome"], "certified");
    assert_eq!(check["domination"]["perfect"], true);
    assert_eq!(v["result"]["certificate_valid"], true);
    assert_eq!(v["result"]["set"]["words"].as_array().unwrap().len(), 24);
}

#[test]
fn gamma_of_st4_under_both_stability_readings() {
    let (o, v) = run("search gamma --family std --n 4");
    assert_eq!(o.code, 0);
    assert_eq!(v["result"]["search"]["minimum"], 4);
    let (o, v) = run("search gamma --family std --n 4 --no-isolated");
    assert_eq!(o.code, 0);
    assert_eq!(v["result"]["search"]["minimum"], 6);
    assert_eq!(v["result"]["certificate_valid"], true);
}

#[test]
fn gamma_cap_below_minimum_is_refuted() {
    let (o, v) = run("search gamma --n 4 --no-isolated --cap 5");
    assert_eq!(o.code, 1);
    assert_eq!(v["status"], "refuted");
}

#[test]
fn st4_has_no_hamilton_cycle_but_has_paths() {
    let (o, v) = run("search hamilton-cycle --family std --n 4");
    assert_eq!(o.code, 1);
    assert_eq!(v["result"]["report"]["outcome"]["outcome"], "exhausted_none");
    let (o, v) = run("search hamilton-path --n 4 --start 0123");
    assert_eq!(o.code, 0);
    assert_eq!(v["result"]["words"].as_array().unwrap().len(), 12);
    assert_eq!(v["result"]["words"][0], "0123");
}

#[test]
fn hamilton_types_of_st4() {
    let (o, v) = run("hamilton --n 4");
    assert_eq!(o.code, 0);
    assert_eq!(v["result"]["type_set"], serde_json::json!(["aababbb", "bbbabaa"]));
    assert_eq!(v["result"]["agrees_with_reference"], true);
    assert_eq!(v["result"]["traceability"]["hamiltonian"], "no");
    assert_eq!(v["result"]["traceability"]["traceable"], "yes");
}

#[test]
fn zero_budget_is_exit_three() {
    let (o, v) = run("search epm --n 6 --budget 0");
    assert_eq!(o.code, 3);
    assert_eq!(v["status"], "unknown");
}

#[test]
fn usage_errors_name_the_token() {
    for (line, token) in [
        ("verify wced --n 4 --bogus", "--bogus"),
        ("verify wced --family xyz --n 4 --guard 0", "xyz"),
        ("build --family std --n 11", "--n 11"),
        ("verify wced --n 4", "--set"),
        ("verify wced --n 4 --guard 9", "--guard 9"),
        ("build --family std --n 4 --orientation cyclic", "--orientation"),
        ("search gamma --n 4 --budget -3", "-3"),
        ("frobnicate", "frobnicate"),
    ] {
        let (o, v) = run(line);
        assert_eq!(o.code, 2, "{line}");
        assert_eq!(v["status"], "error");
        let msg = v["result"]["error"]["message"].as_str().unwrap();
        assert!(msg.contains(token), "{line}: {msg}");
        assert_eq!(o.diagnostic.as_deref(), Some(msg));
    }
}

#[test]
fn set_files() {
    let dir = tempfile::tempdir().unwrap();
    let write = |name: &str, body: &str| {
        let p = dir.path().join(name);
        std::fs::write(&p, body).unwrap();
        p.display().to_string()
    };
    let good = write("good.txt", "# guard star on 3, sources first\n3021\n3102\n3210\n0312  # sinks\n1320\n2301\n");
    let (o, v) = run(&format!("verify wced --n 4 --set {good} --no-isolated"));
    assert_eq!(o.code, 0, "{}", o.report);
    assert_eq!(v["result"]["set_size"], 6);
    for (name, body, needle) in [
        ("odd.txt", "0132\n", "odd permutation"),
        ("dup.txt", "0123\n0123\n", "duplicate"),
        ("deg.txt", "01234\n", "degree"),
    ] {
        let p = write(name, body);
        let (o, v) = run(&format!("verify wced --n 4 --set {p}"));
        assert_eq!(o.code, 2);
        assert!(v["result"]["error"]["message"].as_str().unwrap().contains(needle));
    }
    let empty = write("empty.txt", "");
    let (o, v) = run(&format!("verify dominating --n 4 --set {empty}"));
    assert_eq!(o.code, 1);
    assert_eq!(v["result"]["set_size"], 0);
}

#[test]
fn verify_checks_on_embedded_copies() {
    let (o, _) = run("verify cuneiform --n 5 --guard 4,4");
    assert_eq!(o.code, 0);
    let (o, _) = run("verify cuneiform --n 5 --guard 0");
    assert_eq!(o.code, 1);
    let (o, v) = run("verify sphere --n 5 --guard 2");
    assert_eq!(o.code, 0);
    assert_eq!(v["result"]["check"]["verdict"], "holds");
    let (o, v) = run("verify eset --n 5 --guard 0");
    assert_eq!(o.code, 1);
    assert_eq!(v["result"]["check"]["e_set"], false);
}

#[test]
fn copies_maps_and_chain() {
    let (o, v) = run("search copies --n 5");
    assert_eq!(o.code, 0);
    assert_eq!(v["result"]["count"], 15);
    assert_eq!(v["result"]["plus_maps"], 8);
    assert_eq!(v["result"]["minus_maps"], 7);
    let (o, v) = run("maps --n 3");
    assert_eq!(o.code, 0);
    assert_eq!(v["result"]["maps"].as_array().unwrap().len(), 8);
    let (o, v) = run("chain --n 4");
    assert_eq!(o.code, 0);
    assert_eq!(v["errata"].as_array().unwrap().len(), 6);
    assert_eq!(v["result"]["passed"], true);
}

#[test]
fn build_formats() {
    let (o, v) = run("build --family std --n 4");
    assert_eq!(o.code, 0);
    assert_eq!(v["result"]["vertex_count"], 12);
    assert_eq!(v["result"]["arc_count"], 24);
    assert_eq!(v["result"]["content"]["vertices"].as_array().unwrap().len(), 12);
    let (_, v) = run("build --family std --n 3 --format dot");
    assert!(v["result"]["content"].as_str().unwrap().starts_with("digraph {"));
    let (_, v) = run("build --family pc --n 4");
    assert_eq!(v["result"]["weak_components"], 2);
    assert!(v["result"]["pancake_calibration"]["candidates"].is_array());
    let (_, v) = run("build --family tc --n 2 --orientation cyclic --format edges");
    assert!(v["result"]["content"].as_str().unwrap().starts_with("vertices 9\n"));
}

#[test]
fn identical_command_lines_give_identical_reports() {
    for line in ["search epm --n 4", "chain --n 3", "hamilton --n 4", "verify wced --n 5 --guard 1,3"] {
        assert_eq!(run(line).0.report, run(line).0.report);
    }
}

#[test]
fn binary_writes_reports_atomically() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("report.json");
    let status = Command::new(env!("CARGO_BIN_EXE_stardom"))
        .args(["verify", "wced", "--n", "5", "--guard", "0", "--out"])
        .arg(&out)
        .env("SOURCE_DATE_EPOCH", "42")
        .output()
        .unwrap();
    assert_eq!(status.status.code(), Some(0));
    assert!(status.stdout.is_empty());
    let v: Value = serde_json::from_slice(&std::fs::read(&out).unwrap()).unwrap();
    assert_eq!(v["timestamp"], 42);
    let leftovers = std::fs::read_dir(dir.path()).unwrap().count();
    assert_eq!(leftovers, 1);

    let bad = Command::new(env!("CARGO_BIN_EXE_stardom"))
        .args(["search", "gamma", "--n", "4", "--nope"])
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("--nope"));
    let v: Value = serde_json::from_slice(&bad.stdout).unwrap();
    assert_eq!(v["status"], "error");
}
