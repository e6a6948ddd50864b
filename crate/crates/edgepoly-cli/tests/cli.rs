//! End-to-end checks of the binary: verb plumbing, exit codes, piping.

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_edgepoly"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn run_with_stdin(args: &[&str], input: &str) -> Output {
    let mut child = bin()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary spawns");
    child
        .stdin
        .as_mut()
        .expect("stdin piped")
        .write_all(input.as_bytes())
        .expect("write stdin");
    child.wait_with_output().expect("binary finishes")
}

fn stdout_json(out: &Output) -> serde_json::Value {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("stdout is one JSON object")
}

#[test]
fn eps_family_kd_14() {
    let v = stdout_json(&run(&["eps", "--family", "kd", "--d", "14"]));
    assert_eq!(v["epsilon"], 1092);
    assert_eq!(v["shared"], 1092);
    assert_eq!(v["disjoint_ok"], 0);
}

#[test]
fn gen_pipes_into_eps() {
    let gen = run(&["gen", "--fixture", "g_prime"]);
    assert!(gen.status.success());
    let text = String::from_utf8(gen.stdout).expect("ascii");
    assert_eq!(text.lines().count(), 1 + 120);
    assert_eq!(text.lines().next(), Some("20"));

    let eps = run_with_stdin(&["eps"], &text);
    let v = stdout_json(&eps);
    assert_eq!(v["epsilon"], 4203);
}

#[test]
fn gen_families() {
    let out = run(&["gen", "--family", "kmn", "--m", "5", "--n", "5"]);
    let text = String::from_utf8(out.stdout).expect("ascii");
    assert_eq!(text.lines().count(), 1 + 25);
    assert_eq!(text.lines().next(), Some("10"));

    let out = run(&["gen", "--family", "kd-minus-kmn", "--d", "14", "--m", "4", "--n", "5"]);
    let text = String::from_utf8(out.stdout).expect("ascii");
    assert_eq!(text.lines().count(), 1 + 71);
}

#[test]
fn gen_unknown_fixture_fails() {
    let out = run(&["gen", "--fixture", "nope"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("unknown fixture"));
}

#[test]
fn malformed_file_diagnostic_carries_line() {
    let out = run_with_stdin(&["eps"], "5\n1 2\n2 7\n");
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(
        String::from_utf8_lossy(&out.stderr).trim(),
        "vertex out of range, line 3"
    );
}

#[test]
fn census_fields() {
    let v = stdout_json(&run_with_stdin(&["census"], "4\n1 2\n2 3\n3 4\n"));
    assert_eq!(v["d"], 4);
    assert_eq!(v["edge_count"], 3);
    assert_eq!(v["a"], 1);
    assert_eq!(v["b"], 0);
    assert_eq!(v["c"], 0);
    assert_eq!(v["k3"], 0);
    assert_eq!(v["psi"], 2);
    assert_eq!(v["sum_deg_sq"], 10);
}

#[test]
fn bound_is_exact_rational() {
    let gen = run(&["gen", "--family", "kd-minus-kmn", "--d", "14", "--m", "1", "--n", "1"]);
    let text = String::from_utf8(gen.stdout).expect("ascii");
    let v = stdout_json(&run_with_stdin(&["bound"], &text));
    assert_eq!(v["bound_num"], 7645);
    assert_eq!(v["bound_den"], 7);
}

#[test]
fn closed_forms() {
    let v = stdout_json(&run(&["closed", "kmn", "--d", "15", "--m", "5", "--n", "5"]));
    assert_eq!(v["epsilon"], 1415);

    let v = stdout_json(&run(&[
        "closed", "two-bipartite", "--d", "28", "--a-num", "1", "--a-den", "4",
    ]));
    assert_eq!(v["epsilon"], 14434);

    let v = stdout_json(&run(&["closed", "max-components", "--d", "20"]));
    assert_eq!(v["max"], 4176);
    assert_eq!(v["components"], serde_json::json!([[7, 8]]));

    let v = stdout_json(&run(&["closed", "g", "--a", "0.25"]));
    assert_eq!(v["g"], 9.0 / 512.0);

    let out = run(&["closed", "kmn", "--d", "5", "--m", "3", "--n", "3"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn random_accepts_probability_tokens() {
    let v = stdout_json(&run(&[
        "random", "--model", "gnp", "--d", "12", "--p", "1/sqrt3", "--samples", "10", "--seed", "1",
    ]));
    assert!(v["mean"].as_f64().expect("mean") >= 0.0);
    assert!(v["exact_expectation"].is_null());

    let v = stdout_json(&run(&[
        "random", "--model", "cb", "--d", "12", "--p", "3-sqrt5", "--samples", "10", "--seed", "1",
    ]));
    assert!(v["exact_expectation"].as_f64().expect("exact") > 0.0);

    let out = run(&["random", "--model", "gnp", "--d", "12", "--p", "nope", "--samples", "4"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn search_exhaustive_json() {
    let v = stdout_json(&run(&["search", "--d", "5", "--mode", "exhaustive"]));
    assert_eq!(v["best_eps"], 30);
    assert_eq!(v["exact"], true);
    assert_eq!(v["evaluated"], 1023);
    assert_eq!(v["incumbents"].as_array().expect("list").len(), 1);

    let out = run(&["search", "--d", "8", "--mode", "exhaustive"]);
    assert_eq!(out.status.code(), Some(1), "d=8 needs --allow-slow");
}

#[test]
fn search_heuristic_is_labeled_inexact() {
    let v = stdout_json(&run(&[
        "search", "--d", "10", "--mode", "bipartite-local", "--seed", "4", "--restarts", "4",
        "--steps", "50",
    ]));
    assert_eq!(v["exact"], false);
    assert!(v["best_eps"].as_u64().expect("eps") >= 360); // eps(K_10)
}

#[test]
fn unknown_flags_are_errors() {
    let out = run(&["eps", "--family", "kd", "--d", "5", "--frobnicate"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn threads_flag_validates() {
    let out = run(&["eps", "--family", "kd", "--d", "5", "--threads", "0"]);
    assert_eq!(out.status.code(), Some(1));
    let v = stdout_json(&run(&["eps", "--family", "kd", "--d", "5", "--threads", "2"]));
    assert_eq!(v["epsilon"], 30);
}

#[test]
fn threads_env_fallback() {
    let out = bin()
        .args(["eps", "--family", "kd", "--d", "6"])
        .env("EDGEPOLY_THREADS", "1")
        .output()
        .expect("binary runs");
    let v = stdout_json(&out);
    assert_eq!(v["epsilon"], 60);
}

#[test]
fn verify_exits_zero_on_correct_build() {
    let out = run(&["verify"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).expect("utf8");
    let mut claims = 0;
    for line in text.lines() {
        let v: serde_json::Value = serde_json::from_str(line).expect("JSON line");
        assert_eq!(v["pass"], true, "claim {} failed", v["claim"]);
        claims += 1;
    }
    assert_eq!(claims, 7);
}
