//! Exercises the `graphdim` binary end to end: subcommands, formats, exit
//! codes, and JSON output.

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_graphdim"))
}

fn run_with_stdin(args: &[&str], stdin: &str) -> Output {
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
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn write_temp(name: &str, contents: &str) -> std::path::PathBuf {
    let path = std::env::temp_dir().join(format!("graphdim_cli_{name}_{}", std::process::id()));
    std::fs::write(&path, contents).unwrap();
    path
}

const K5_EDGES: &str =
    "0 1\n0 2\n0 3\n0 4\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n";

#[test]
fn dim_prints_exact_rational() {
    let out = run_with_stdin(&["dim", "-"], K5_EDGES);
    assert!(out.status.success());
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "4");
}

#[test]
fn dim_of_double_k4_matching_is_five_halves() {
    let gen = bin()
        .args(["gen", "--family", "double_clique_matching", "--params", "c=4"])
        .output()
        .unwrap();
    assert!(gen.status.success());
    let edges = String::from_utf8(gen.stdout).unwrap();
    let out = run_with_stdin(&["dim", "-"], &edges);
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "5/2");
}

#[test]
fn dim_json_report() {
    let out = run_with_stdin(&["dim", "-", "--json"], K5_EDGES);
    assert!(out.status.success());
    let json: serde_json::Value =
        serde_json::from_slice(&out.stdout).expect("valid JSON report");
    assert_eq!(json["dim"]["exact"], "4");
    assert_eq!(json["theta_e"], 1);
    assert_eq!(json["theorem4"]["equal"], true);
}

#[test]
fn spectrum_lists_vertices() {
    let out = run_with_stdin(&["spectrum", "-"], "0 1\n1 2\n");
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("0\t1\t1.00000"));
    assert!(text.contains("uniform\ttrue"));
    assert!(text.contains("pure\ttrue"));
}

#[test]
fn cliques_and_ecc_subcommands() {
    let bowtie = "0 1\n0 2\n1 2\n2 3\n2 4\n3 4\n";
    let out = run_with_stdin(&["cliques", "-"], bowtie);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("0 1 2"));
    assert!(text.contains("2 3 4"));
    assert!(text.contains("omega\t3"));
    assert!(text.contains("gamma\t3"));

    let out = run_with_stdin(&["ecc", "-"], bowtie);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("theta_e\t2"));
}

#[test]
fn verify_passes_on_sound_graph_and_fails_exit_code_4() {
    let star = bin()
        .args(["gen", "--family", "star_clique", "--params", "k=4,n=12"])
        .output()
        .unwrap();
    let edges = String::from_utf8(star.stdout).unwrap();
    let out = run_with_stdin(&["verify", "-", "--law", "bounds"], &edges);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("lower_connected = 7/5"));
    assert!(text.contains("saturated lower"));

    let out = run_with_stdin(&["verify", "-", "--law", "all"], &edges);
    assert!(out.status.success());
}

#[test]
fn graph6_input_format() {
    let out = run_with_stdin(&["dim", "-", "--format", "graph6"], "Bw\n");
    assert!(out.status.success());
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "2");
}

#[test]
fn gen_writes_graph6_file_that_round_trips() {
    let path = write_temp("gen_g6", "");
    let status = bin()
        .args([
            "gen",
            "--family",
            "windmill",
            "--params",
            "t=3",
            "--format",
            "graph6",
            "--out",
            path.to_str().unwrap(),
        ])
        .status()
        .unwrap();
    assert!(status.success());
    let text = std::fs::read_to_string(&path).unwrap();
    let out = run_with_stdin(&["dim", "-", "--format", "graph6"], &text);
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "2");
    std::fs::remove_file(&path).ok();
}

#[test]
fn gen_dot_output() {
    let out = bin()
        .args(["gen", "--family", "cycle", "--params", "n=5", "--format", "dot"])
        .output()
        .unwrap();
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("graph G {"));
    assert!(text.contains("0 -- 1;"));
}

#[test]
fn parse_errors_exit_1_usage_errors_exit_2() {
    let out = run_with_stdin(&["dim", "-"], "0 0\n");
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 1"));

    let out = bin().args(["frobnicate"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn budget_env_var_causes_resource_exit_3() {
    // a graph whose exact cover search must branch at least a few times
    let g = bin()
        .args(["gen", "--family", "double_clique_matching", "--params", "c=4"])
        .output()
        .unwrap();
    let edges = String::from_utf8(g.stdout).unwrap();
    let mut child = bin()
        .args(["ecc", "-"])
        .env("GRAPHDIM_BUDGET", "2")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(edges.as_bytes())
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn suite_runs_small_configuration() {
    let out = bin()
        .args(["suite", "--max-n", "6", "--samples", "15", "--seed", "3"])
        .output()
        .unwrap();
    assert!(out.status.success(), "suite failed: {}",
        String::from_utf8_lossy(&out.stdout));
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json["passed"], true);
    assert_eq!(json["checks"].as_array().unwrap().len(), 11);
}
