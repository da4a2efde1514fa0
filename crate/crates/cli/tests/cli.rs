//! End-to-end tests of the `formzeta` binary: output shapes, exit codes,
//! and run-to-run determinism.

use std::path::Path;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_formzeta"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_lines(out: &Output) -> Vec<String> {
    String::from_utf8(out.stdout.clone())
        .expect("utf8 stdout")
        .lines()
        .map(str::to_string)
        .collect()
}

/// Output lines with the wall-time line removed, for byte comparison.
fn data_lines(out: &Output) -> Vec<String> {
    stdout_lines(out)
        .into_iter()
        .filter(|l| !l.contains("wall_ms"))
        .collect()
}

fn json_line(lines: &[String], index: usize) -> serde_json::Value {
    serde_json::from_str(&lines[index]).expect("valid json line")
}

#[test]
fn spart_example() {
    let out = run(&["spart", "10", "--set", "S1"]);
    assert!(out.status.success());
    let lines = stdout_lines(&out);
    assert_eq!(json_line(&lines, 0)["command"], "spart");
    assert_eq!(json_line(&lines, 1)["result"], 5);
    assert!(lines[2].contains("wall_ms"));
}

#[test]
fn pif_example() {
    let out = run(&["pif", "--form", "1,0,1", "--limit", "100"]);
    assert!(out.status.success());
    assert_eq!(json_line(&stdout_lines(&out), 1)["result"], 5);
}

#[test]
fn verify_classes_passes_with_exit_zero() {
    let out = run(&["verify", "classes"]);
    assert!(out.status.success());
    let report = json_line(&stdout_lines(&out), 1);
    assert_eq!(report["claim_id"], "class_numbers");
    assert_eq!(report["passed"], true);
    assert_eq!(report["counterexamples"].as_array().unwrap().len(), 0);
}

#[test]
fn verify_small_scans_pass() {
    for which in ["two-squares", "x2-2y2", "x2-3y2", "cor1", "cor2", "cor3"] {
        let out = run(&["verify", which, "--limit", "3000"]);
        assert!(out.status.success(), "{which} failed");
        let report = json_line(&stdout_lines(&out), 1);
        assert_eq!(report["passed"], true, "{which}");
    }
}

#[test]
fn repr_prints_the_witness() {
    let out = run(&["repr", "--form", "2,0,7", "71"]);
    let record = json_line(&stdout_lines(&out), 1);
    assert_eq!(record["found"], true);
    assert_eq!(record["x"].as_i64().unwrap().abs(), 2);
    assert_eq!(record["y"].as_i64().unwrap().abs(), 3);
    assert_eq!(record["value"], 71);

    let out = run(&["repr", "--form", "1,0,14", "71"]);
    assert_eq!(json_line(&stdout_lines(&out), 1)["found"], false);
}

#[test]
fn same_argv_twice_is_byte_identical_apart_from_wall_time() {
    let args = [
        "minorant", "--set", "S2", "--eps", "0.25", "--limit", "20000",
    ];
    let a = run(&args);
    let b = run(&args);
    assert!(a.status.success());
    assert_eq!(data_lines(&a), data_lines(&b));
    assert_ne!(data_lines(&a).len(), 0);
}

#[test]
fn thread_count_does_not_change_output() {
    let base = ["zeta-log", "--set", "S1", "--s", "2.5", "--limit", "20000"];
    let mut with_1 = base.to_vec();
    with_1.extend(["--threads", "1"]);
    let mut with_4 = base.to_vec();
    with_4.extend(["--threads", "4"]);
    let mut with_8 = base.to_vec();
    with_8.extend(["--threads", "8"]);
    let outs: Vec<Vec<String>> = [with_1, with_4, with_8]
        .iter()
        .map(|args| {
            let out = run(args);
            assert!(out.status.success());
            // drop the argv echo too: the --threads value differs on purpose
            data_lines(&out)[1..].to_vec()
        })
        .collect();
    assert_eq!(outs[0], outs[1]);
    assert_eq!(outs[0], outs[2]);
}

#[test]
fn csv_format_emits_valid_rows() {
    let out = run(&[
        "pfsum", "--form", "1,0,1", "--eps", "0.5", "--limit", "1000", "--format", "csv",
    ]);
    assert!(out.status.success());
    let lines = stdout_lines(&out);
    assert_eq!(lines[0], "command");
    assert!(
        lines[1].starts_with("\"pfsum --form"),
        "argv with commas is quoted: {}",
        lines[1]
    );
    assert_eq!(lines[2], "n,value");
    let row: Vec<&str> = lines[3].split(',').collect();
    assert_eq!(row[0], "10");
    row[1].parse::<f64>().expect("numeric value");
    assert_eq!(lines[lines.len() - 2], "wall_ms");
}

#[test]
fn out_flag_writes_the_file() {
    let dir = std::env::temp_dir().join("formzeta-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("spart.jsonl");
    let out = run(&[
        "spart",
        "12",
        "--set",
        "S1",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let content = std::fs::read_to_string(Path::new(&path)).unwrap();
    assert!(content.contains("{\"result\":1}"));
    std::fs::remove_file(path).ok();
}

#[test]
fn checkpoint_override() {
    let out = run(&[
        "minorant",
        "--set",
        "S1",
        "--eps",
        "0.5",
        "--limit",
        "1000",
        "--checkpoints",
        "50,500,1000",
    ]);
    assert!(out.status.success());
    let lines = stdout_lines(&out);
    let ns: Vec<u64> = (1..lines.len() - 1)
        .map(|i| json_line(&lines, i)["n"].as_u64().unwrap())
        .collect();
    assert_eq!(ns, vec![50, 500, 1000]);
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        vec!["spart", "10", "--set", "S9"],
        vec!["repr", "--form", "1,0", "5"],
        vec!["repr", "--form", "1,0,-1", "5"], // indefinite form
        vec!["minorant", "--set", "S1", "--eps", "1.5", "--limit", "100"],
        vec!["classes", "--disc", "-6"],
        vec!["spart", "0", "--set", "S1"],
        vec!["no-such-command"],
    ] {
        let out = run(&args);
        assert_eq!(out.status.code(), Some(2), "args: {args:?}");
    }
}

#[test]
fn range_errors_exit_64() {
    // sieve limit beyond the configured guard
    let out = run(&["pf", "--form", "1,0,1", "--limit", "4398046511105"]);
    assert_eq!(out.status.code(), Some(64));
}
