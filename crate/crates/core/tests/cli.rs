use std::process::{Command, Output};

fn osgrp(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_osgrp")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn passing_commands_exit_zero() {
    for args in [
        &["zn", "12", "green"][..],
        &["zn", "2", "table"],
        &["zn", "30", "classes"],
        &["zn", "30", "axioms"],
        &["zn", "30", "transversal"],
        &["divisors", "12"],
        &["iso", "12"],
        &["category", "12"],
        &["counterexample"],
        &["z", "--samples", "100"],
        &["poly", "--p", "3", "--samples", "100"],
    ] {
        let out = osgrp(args);
        assert_eq!(out.status.code(), Some(0), "{args:?}: {}", stdout(&out));
    }
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["zn", "1", "table"][..],
        &["zn", "twelve", "table"],
        &["zn", "12"],
        &["bogus"],
        &["counterexample", "--p", "6"],
        &["z", "--degree-cap", "65"],
        &["certify", "--n-max", "500"],
        &["zn", "12", "green", "--format", "yaml"],
    ] {
        let out = osgrp(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty());
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn json_reports_follow_the_schema() {
    let out = osgrp(&["zn", "12", "green", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["check"], "Green's relations universal");
    assert_eq!(v["passed"], true);
    assert!(v.get("counterexample").is_none());
    assert!(v["elapsed_ms"].is_u64());
    for child in v["children"].as_array().unwrap() {
        assert!(child.get("elapsed_ms").is_none());
    }
}

#[test]
fn divisor_table_exports_the_ingestion_format() {
    let out = osgrp(&["divisors", "6", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["labels"], serde_json::json!(["1", "2", "3", "6"]));
    assert_eq!(v["mul"][1][2], 3);
    let table = osgrp_core::ordered_semigroup::FiniteOrderedSemigroup::from_json(&stdout(&out)).unwrap();
    assert_eq!(table.size(), 4);
}

#[test]
fn dot_diagrams_are_stable() {
    let a = stdout(&osgrp(&["category", "12", "--dot", "inclusion"]));
    let b = stdout(&osgrp(&["category", "12", "--dot", "inclusion"]));
    assert_eq!(a, b);
    assert!(a.starts_with("digraph inclusions {"));
    // <0> ⊆ <d> for every d: node n5 (label 12) points at every other node
    for i in 0..5 {
        assert!(a.contains(&format!("n5 -> n{i};")), "{a}");
    }
}
