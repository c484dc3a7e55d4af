//! End-to-end runs of the binary: the worked catalog cases, exit codes,
//! file round trips, and byte determinism.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_strata"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).to_string()
}

fn tmp(name: &str) -> PathBuf {
    let mut p = std::env::temp_dir();
    p.push(format!("strata-cli-test-{}-{name}", std::process::id()));
    p
}

#[test]
fn check_catalogs_pass() {
    for name in ["oq_k2", "oq_gl2", "oq_sl3_poset"] {
        let out = run(&["check", "--catalog", name, "--samples", "8"]);
        assert!(out.status.success(), "{name}: {}", stdout(&out));
        assert!(stdout(&out).contains("all checks passed"));
    }
}

#[test]
fn phi_reproduces_worked_cases() {
    let out = run(&["phi", "--catalog", "oq_k2", "--from", "x", "--to", "xy", "--set", "{2}"]);
    assert_eq!(stdout(&out).trim(), "∅");
    let out = run(&["phi", "--catalog", "oq_k2", "--from", "x", "--to", "xy", "--set", "whole"]);
    assert_eq!(stdout(&out).trim(), "{xy}");
    let out = run(&[
        "phi", "--catalog", "oq_gl2", "--from", "0", "--to", "b", "--set", "V(D - 5)",
    ]);
    assert_eq!(stdout(&out).trim(), "{5}");
    // incomparable pair is a usage error
    let out = run(&["phi", "--catalog", "oq_gl2", "--from", "b", "--to", "c", "--set", "whole"]);
    assert_eq!(out.status.code(), Some(2));
    // parse failure
    let out = run(&["phi", "--catalog", "oq_gl2", "--from", "0", "--to", "b", "--set", "V(zz)"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn center_reproduces_worked_cases() {
    let out = run(&[
        "center", "--matrix", "[[0,1,0],[-1,0,1],[0,-1,0]]", "--names", "a,c,d",
    ]);
    assert!(stdout(&out).contains("monomials: a*d"));
    let out = run(&["center", "--matrix", "[[0,0],[0,0]]"]);
    assert!(stdout(&out).contains("monomials: x1, x2"));
    let out = run(&[
        "center",
        "--matrix",
        "[[0,1,1,0],[-1,0,0,0],[-1,0,0,0],[0,0,0,0]]",
        "--names",
        "a,b,c,D",
    ]);
    assert!(stdout(&out).contains("monomials: b*c^-1, D"));
    // non-skew input is rejected
    let out = run(&["center", "--matrix", "[[0,1],[1,0]]"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn export_counts_nodes_and_edges() {
    let out = run(&["export", "--catalog", "oq_m2", "--format", "dot"]);
    let text = stdout(&out);
    assert_eq!(text.matches(" -> ").count(), 27);
    assert_eq!(text.matches("\";\n").count(), 14);
    let out = run(&["export", "--catalog", "oq_sl3_poset", "--format", "dot"]);
    let text = stdout(&out);
    assert_eq!(text.matches("\";\n").count(), 36);
    // a 3-chain has 2 edges (through a JSON file round trip)
    let chain = serde_json::json!({
        "name": "chain",
        "poset": {
            "elements": ["0", "1", "2"],
            "leq": [["0", "1"], ["1", "2"], ["0", "2"]],
        },
        "strata": {
            "0": {"kind": "finite", "points": ["a"], "closed": [[], ["a"]]},
            "1": {"kind": "finite", "points": ["b"], "closed": [[], ["b"]]},
            "2": {"kind": "finite", "points": ["c"], "closed": [[], ["c"]]},
        },
        "transfers": [],
    });
    let path = tmp("chain.json");
    std::fs::write(&path, serde_json::to_string(&chain).unwrap()).unwrap();
    let out = run(&["export", "--input", path.to_str().unwrap(), "--format", "dot"]);
    assert_eq!(stdout(&out).matches(" -> ").count(), 2);
    std::fs::remove_file(&path).ok();
}

#[test]
fn corrupted_poset_fails_check_with_diagnostic() {
    let bad = serde_json::json!({
        "name": "bad",
        "poset": {
            "elements": ["a", "b"],
            "leq": [["a", "b"], ["b", "a"]],
        },
        "strata": {
            "a": {"kind": "finite", "points": ["p"], "closed": [[], ["p"]]},
            "b": {"kind": "finite", "points": ["q"], "closed": [[], ["q"]]},
        },
        "transfers": [],
    });
    let path = tmp("bad.json");
    std::fs::write(&path, serde_json::to_string(&bad).unwrap()).unwrap();
    let out = run(&["check", "--input", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("antisymmetry"));
    std::fs::remove_file(&path).ok();
}

#[test]
fn glue_finite_input_lists_the_family() {
    // the two-point space with one specialization, built from data
    let data = serde_json::json!({
        "name": "sierpinski",
        "poset": {
            "elements": ["0", "1"],
            "leq": [["0", "1"]],
        },
        "strata": {
            "0": {"kind": "finite", "points": ["x"], "closed": [[], ["x"]]},
            "1": {"kind": "finite", "points": ["y"], "closed": [[], ["y"]]},
        },
        "transfers": [
            {"from": "0", "to": "1", "rule": {"table": {"entries": [
                [{"family": {"members": []}}, {"family": {"members": []}}],
                [{"family": {"members": ["x"]}}, {"family": {"members": ["y"]}}],
            ]}}},
        ],
    });
    let path = tmp("sierpinski.json");
    std::fs::write(&path, serde_json::to_string(&data).unwrap()).unwrap();
    let out = run(&["glue", "--input", path.to_str().unwrap()]);
    assert!(out.status.success(), "{}", stdout(&out));
    let text = stdout(&out);
    assert!(text.contains("3 closed sets"), "{text}");
    assert!(text.contains("{y}"));
    assert!(!text.contains("{x}\n")); // {x} alone is not closed
    std::fs::remove_file(&path).ok();
}

#[test]
fn export_json_round_trips_through_check() {
    let path = tmp("gl2.json");
    let out = run(&[
        "export", "--catalog", "oq_gl2", "--format", "json", "--output",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let out = run(&["check", "--input", path.to_str().unwrap(), "--samples", "6"]);
    assert!(out.status.success(), "{}", stdout(&out));
    std::fs::remove_file(&path).ok();
}

#[test]
fn fixed_seed_means_identical_bytes() {
    let a = run(&["check", "--catalog", "oq_gl2", "--samples", "10", "--seed", "7"]);
    let b = run(&["check", "--catalog", "oq_gl2", "--samples", "10", "--seed", "7"]);
    assert_eq!(a.stdout, b.stdout);
    let c = run(&["export", "--catalog", "oq_m2", "--format", "json"]);
    let d = run(&["export", "--catalog", "oq_m2", "--format", "json"]);
    assert_eq!(c.stdout, d.stdout);
}

#[test]
fn usage_errors_exit_2() {
    let out = run(&["check"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["check", "--catalog", "no_such_model"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["export", "--catalog", "oq_m2", "--format", "yaml"]);
    assert_eq!(out.status.code(), Some(2));
}
