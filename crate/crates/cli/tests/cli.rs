//! End-to-end checks of the command-line interface: subcommands, exit
//! codes, JSON report schema and determinism.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bialgebroid"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).to_string()
}

#[test]
fn catalog_list_names_every_entry() {
    let out = run(&["catalog", "list"]);
    assert!(out.status.success());
    let text = stdout(&out);
    for name in ["podles-monopole", "sl2-nff", "taft", "sweedler", "self-galois", "group"] {
        assert!(text.contains(name), "missing {} in:\n{}", name, text);
    }
}

#[test]
fn verify_passes_with_exit_zero() {
    let out = run(&["verify", "sweedler", "--suite", "kernel"]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let text = stdout(&out);
    assert!(text.contains("0 failed"));
}

#[test]
fn unknown_entry_and_suite_exit_two() {
    let out = run(&["verify", "nosuch"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["verify", "sweedler", "--suite", "nosuch"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["verify", "taft", "--param", "N=1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn failing_checks_exit_one() {
    // A truncation degree too small for the balanced checks turns them into
    // reported failures, never a crash.
    let out = run(&["verify", "sl2-nff", "--suite", "bialgebroid", "--degree", "1"]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.contains("FAIL"));
}

#[test]
fn json_report_round_trips_and_is_deterministic() {
    let args = ["verify", "sweedler", "--suite", "hopf", "--format", "json"];
    let a = run(&args);
    assert!(a.status.success());
    let b = run(&args);
    assert_eq!(stdout(&a), stdout(&b), "reports must be identical across runs");
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&a)).unwrap();
    assert_eq!(parsed["entry"], "sweedler");
    assert_eq!(parsed["suite"], "hopf");
    assert!(parsed["degree"].is_number());
    let checks = parsed["checks"].as_array().unwrap();
    assert!(!checks.is_empty());
    for c in checks {
        assert!(c["id"].is_string());
        assert!(c["anchor"].is_string());
        assert!(c["status"].is_string());
    }
    // Round trip: parse -> emit is byte-identical modulo whitespace.
    let re_emitted = serde_json::to_string(&parsed).unwrap();
    let re_parsed: serde_json::Value = serde_json::from_str(&re_emitted).unwrap();
    assert_eq!(parsed, re_parsed);
}

#[test]
fn report_subcommand_defaults_to_json() {
    let out = run(&["report", "--entry", "sweedler", "--suite", "kernel"]);
    assert!(out.status.success());
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(parsed["suite"], "kernel");
}

#[test]
fn characters_lists_the_cyclic_group() {
    let out = run(&["characters", "taft", "--param", "N=3"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("3 characters"));
    assert!(text.contains("convolution table"));
    assert!(text.contains("cyclic of order 3"));
    let out = run(&["characters", "podles-monopole"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn catalog_export_emits_a_parseable_bundle() {
    let out = run(&["catalog", "export", "sweedler"]);
    assert!(out.status.success());
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(parsed["cyclotomic_order"], 2);
    assert!(parsed["algebra"]["generators"].as_array().unwrap().len() == 2);
    assert!(parsed["extension"]["translation"].is_object());
}

#[test]
fn user_supplied_gauge_maps_are_verified() {
    let out = run(&[
        "gauge",
        "podles-monopole",
        "--map",
        "a=X*a",
        "--map",
        "c=X*c",
        "--map",
        "d=(X^-1)*d",
        "--map",
        "b=(X^-1)*b",
    ]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    // An off-diagonal perturbation violates the relations.
    let out = run(&[
        "gauge",
        "podles-monopole",
        "--map",
        "a=X*a + Y*c",
        "--map",
        "c=X*c",
        "--map",
        "d=(X^-1)*d",
        "--map",
        "b=(X^-1)*b",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("FAIL"));
}
