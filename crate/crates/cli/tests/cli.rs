//! End-to-end tests against the built binary: exit codes, determinism,
//! error reporting, and the classify/construct/verify pipeline.

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn ctl() -> Command {
    Command::new(env!("CARGO_BIN_EXE_ctl"))
}

fn run_with_stdin(args: &[&str], stdin: &str) -> Output {
    let mut child = ctl()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn ctl");
    child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().expect("ctl output")
}

fn stdout_str(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).to_string()
}

#[test]
fn classify_k3_reports_one_third() {
    let out = run_with_stdin(&["classify", "-"], "Bw\n");
    assert!(out.status.success());
    let line: serde_json::Value =
        serde_json::from_str(stdout_str(&out).lines().next().unwrap()).unwrap();
    assert_eq!(line["report"]["class"], "LAMBDA");
    assert_eq!(line["report"]["threshold"]["num"], "1");
    assert_eq!(line["report"]["threshold"]["den"], "3");
    assert_eq!(line["schema"], "ctl/1");
}

#[test]
fn classify_malformed_line_names_the_line() {
    let out = run_with_stdin(&["classify", "-"], "Bw\nD?{\n\x01bad\n");
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("line 3"), "stderr: {err}");
}

#[test]
fn classify_parallel_output_is_byte_identical() {
    // a batch of mixed small graphs
    let mut input = String::new();
    for g6 in ["Bw", "D?{", "C?", "Dhc", "A_", "Cr", "B_"] {
        // not all of these are valid; filter to the valid subset first
        if ctl_core_parse(g6) {
            input.push_str(g6);
            input.push('\n');
        }
    }
    assert!(input.lines().count() >= 4, "test corpus too small");
    let serial = run_with_stdin(
        &["classify", "-", "--parallel", "1", "--certificate"],
        &input,
    );
    let parallel = run_with_stdin(
        &["classify", "-", "--parallel", "4", "--certificate"],
        &input,
    );
    assert!(serial.status.success());
    assert_eq!(serial.stdout, parallel.stdout);
}

fn ctl_core_parse(g6: &str) -> bool {
    ctl_core::graph6::parse_auto(g6.as_bytes()).is_ok()
}

#[test]
fn classify_check_passes_on_catalog() {
    let out = run_with_stdin(&["classify", "-", "--check", "--certificate"], "Bw\nDhc\n");
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    for line in stdout_str(&out).lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(v["checked"], true);
        assert!(v["report"]["witnesses"].is_object());
    }
}

#[test]
fn chi_reports_values() {
    let out = run_with_stdin(&["chi", "-", "--format", "human"], "Bw\nD?{\n");
    assert!(out.status.success());
    let text = stdout_str(&out);
    assert!(text.contains("Bw: chi=3"));
    assert!(text.contains("D?{: chi=2"));
}

#[test]
fn construct_kneser_matches_library_bytes() {
    let out = ctl()
        .args(["construct", "kneser", "5", "2"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let expected =
        ctl_core::graph6::emit_graph6_string(&ctl_core::constructions::kneser(5, 2).unwrap());
    assert_eq!(stdout_str(&out).trim(), expected);
}

#[test]
fn construct_zykov_has_expected_order() {
    let out = ctl()
        .args([
            "construct",
            "zykov",
            "--trees",
            "k2,k2",
            "-r",
            "3",
            "-t",
            "1",
        ])
        .output()
        .unwrap();
    assert!(out.status.success());
    let g = ctl_core::graph6::parse_auto(stdout_str(&out).trim().as_bytes()).unwrap();
    assert_eq!(g.n(), 8);
}

#[test]
fn construct_same_seed_is_identical() {
    let args = [
        "construct",
        "borsuk",
        "--dim",
        "2",
        "--eps",
        "1/12",
        "--points",
        "20",
        "--seed",
        "42",
    ];
    let a = ctl().args(args).output().unwrap();
    let b = ctl().args(args).output().unwrap();
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn construct_invalid_parameters_exit_2() {
    let out = ctl()
        .args(["construct", "hajnal", "-k", "1", "-l", "4", "-m", "1"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("divide"));
}

#[test]
fn verify_pipeline_on_pi_witness() {
    let dir = std::env::temp_dir().join(format!("ctl-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let octa = dir.join("octa.g6");
    let witness = dir.join("witness.g6");
    let sidecar = dir.join("witness.json");
    let octa_graph = ctl_core::graph::Graph::complete_multipartite(&[2, 2, 2]).unwrap();
    std::fs::write(
        &octa,
        format!("{}\n", ctl_core::graph6::emit_graph6_string(&octa_graph)),
    )
    .unwrap();

    let out = ctl()
        .args([
            "construct",
            "pi-witness",
            "--pattern",
            octa.to_str().unwrap(),
            "-c",
            "3",
            "--out",
            witness.to_str().unwrap(),
            "--sidecar",
            sidecar.to_str().unwrap(),
        ])
        .output()
        .unwrap();
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let sidecar_json: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&sidecar).unwrap()).unwrap();
    assert_eq!(sidecar_json["recipe"]["family"], "PI_WITNESS");
    assert_eq!(sidecar_json["verified"]["degree_fraction"]["num"], "1");

    // h-freeness and the exact min-degree fraction hold
    let out = ctl()
        .args([
            "verify",
            "--target",
            witness.to_str().unwrap(),
            "--h-free",
            octa.to_str().unwrap(),
            "--min-degree",
            "1/2",
            "--chromatic-ge",
            "3",
        ])
        .output()
        .unwrap();
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );

    // a failing check exits 1
    let out = ctl()
        .args([
            "verify",
            "--target",
            witness.to_str().unwrap(),
            "--chromatic-ge",
            "10",
            "--json",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(stdout_str(&out).trim()).unwrap();
    assert_eq!(v["pass"], false);

    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn verify_witness_report_round_trip() {
    let dir = std::env::temp_dir().join(format!("ctl-test-w-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let c5_path = dir.join("c5.g6");
    let report_path = dir.join("report.json");
    let c5 = ctl_core::graph::Graph::cycle(5).unwrap();
    std::fs::write(
        &c5_path,
        format!("{}\n", ctl_core::graph6::emit_graph6_string(&c5)),
    )
    .unwrap();

    let out = run_with_stdin(
        &["classify", "-", "--certificate"],
        &format!("{}\n", ctl_core::graph6::emit_graph6_string(&c5)),
    );
    assert!(out.status.success());
    std::fs::write(&report_path, stdout_str(&out)).unwrap();

    let out = ctl()
        .args([
            "verify",
            "--target",
            c5_path.to_str().unwrap(),
            "--witness",
            report_path.to_str().unwrap(),
            "--json",
        ])
        .output()
        .unwrap();
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );

    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn chromatic_ge_fails_on_c5_with_4() {
    let dir = std::env::temp_dir().join(format!("ctl-test-c5-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let c5_path = dir.join("c5.g6");
    let c5 = ctl_core::graph::Graph::cycle(5).unwrap();
    std::fs::write(
        &c5_path,
        format!("{}\n", ctl_core::graph6::emit_graph6_string(&c5)),
    )
    .unwrap();
    let out = ctl()
        .args([
            "verify",
            "--target",
            c5_path.to_str().unwrap(),
            "--chromatic-ge",
            "4",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    let out = ctl()
        .args([
            "verify",
            "--target",
            c5_path.to_str().unwrap(),
            "--chromatic-ge",
            "3",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn per_graph_timeout_is_recorded_in_stream() {
    // chi = 5, clique number 2: refutation outlasts a zero-second budget;
    // the batch still processes the next line
    let m5 = ctl_core::constructions::mycielski(
        &ctl_core::constructions::mycielski(&ctl_core::graph::Graph::cycle(5).unwrap()).unwrap(),
    )
    .unwrap();
    let input = format!("{}\nBw\n", ctl_core::graph6::emit_graph6_string(&m5));
    let mut child = ctl()
        .args(["classify", "-"])
        .env("CTL_TIME_BUDGET_SECS", "0")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let lines: Vec<serde_json::Value> = stdout_str(&out)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    // the timeout is recorded per graph and the batch keeps going: both
    // input lines produce an in-stream entry
    assert_eq!(lines.len(), 2);
    for line in &lines {
        assert_eq!(line["error"]["kind"], "operation");
        assert!(line["error"]["message"].as_str().unwrap().contains("budget"));
    }
}
