//! End-to-end tests driving the compiled binary: output formats, exit
//! codes, the census edge-limit controls, and sampler determinism.

use std::collections::BTreeSet;
use std::process::{Command, Output};

use serde::{Deserialize, Serialize};

use triforest_core::{
    build_complete_multipartite, is_rooted_spanning_forest, PartSizes, RootedForest,
};

fn run(args: &[&str], envs: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_triforest"));
    cmd.args(args).env_remove("FOREST_CENSUS_MAX_EDGES");
    for (key, value) in envs {
        cmd.env(key, value);
    }
    cmd.output().expect("binary runs")
}

fn stdout_of(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("stdout is UTF-8")
}

fn exit_code(output: &Output) -> i32 {
    output.status.code().expect("no signal")
}

#[derive(Serialize, Deserialize)]
struct CountRecord {
    quantity: String,
    m: u32,
    n: u32,
    p: u32,
    r: Option<u32>,
    value: String,
    oracle_value: Option<String>,
    #[serde(rename = "match")]
    matches: Option<bool>,
}

#[test]
fn count_trees_json_value_and_field_order() {
    let output = run(&["count", "trees", "1", "1", "2", "--format", "json"], &[]);
    assert_eq!(exit_code(&output), 0);
    let line = stdout_of(&output);
    let record: CountRecord = serde_json::from_str(line.trim()).expect("valid JSON");
    assert_eq!(record.quantity, "trees");
    assert_eq!(record.value, "8");
    assert_eq!(record.r, None);
    let reserialized = serde_json::to_string(&record).expect("serializes");
    assert_eq!(line.trim(), reserialized);
}

#[test]
fn count_total_forests_plain() {
    let output = run(&["count", "total-forests", "1", "1", "1"], &[]);
    assert_eq!(exit_code(&output), 0);
    assert_eq!(stdout_of(&output), "total-forests m=1 n=1 p=1 value=16\n");
}

#[test]
fn count_forests_r_json() {
    let output = run(
        &[
            "count",
            "forests-r",
            "1",
            "1",
            "2",
            "--r",
            "2",
            "--format",
            "json",
        ],
        &[],
    );
    assert_eq!(exit_code(&output), 0);
    let record: CountRecord = serde_json::from_str(stdout_of(&output).trim()).expect("valid JSON");
    assert_eq!(record.value, "8");
    assert_eq!(record.r, Some(2));
}

#[test]
fn count_forests_r_out_of_range_exits_2() {
    let output = run(&["count", "forests-r", "1", "1", "2", "--r", "3"], &[]);
    assert_eq!(exit_code(&output), 2);
}

#[test]
fn count_forests_r_without_r_exits_2() {
    let output = run(&["count", "forests-r", "1", "1", "2"], &[]);
    assert_eq!(exit_code(&output), 2);
}

#[test]
fn count_rejects_r_for_other_quantities() {
    let output = run(&["count", "trees", "1", "1", "2", "--r", "1"], &[]);
    assert_eq!(exit_code(&output), 2);
}

#[test]
fn count_rejects_unknown_quantity() {
    let output = run(&["count", "cycles", "1", "1", "2"], &[]);
    assert_eq!(exit_code(&output), 2);
}

#[test]
fn count_large_value_is_all_digits() {
    let output = run(&["count", "trees", "20", "20", "20"], &[]);
    assert_eq!(exit_code(&output), 0);
    let stdout = stdout_of(&output);
    let value = stdout
        .trim()
        .rsplit_once("value=")
        .expect("value field present")
        .1;
    assert!(value.len() > 40);
    assert!(value.bytes().all(|b| b.is_ascii_digit()));
}

#[test]
fn sample_is_deterministic_per_seed() {
    let args = ["sample", "2", "2", "2", "--count", "3", "--seed", "5"];
    let first = run(&args, &[]);
    let second = run(&args, &[]);
    assert_eq!(exit_code(&first), 0);
    assert_eq!(first.stdout, second.stdout);

    let different = run(
        &["sample", "2", "2", "2", "--count", "3", "--seed", "6"],
        &[],
    );
    assert_ne!(first.stdout, different.stdout);
}

#[test]
fn sample_output_is_a_spanning_tree() {
    let output = run(
        &["sample", "1", "2", "2", "--count", "4", "--seed", "11"],
        &[],
    );
    assert_eq!(exit_code(&output), 0);
    let parts = PartSizes::new(1, 2, 2);
    let graph = build_complete_multipartite(parts).expect("valid sizes");
    for line in stdout_of(&output).lines() {
        let parent: Vec<Option<usize>> = line
            .split_whitespace()
            .map(|cell| {
                if cell == "-" {
                    None
                } else {
                    Some(cell.parse().expect("vertex index"))
                }
            })
            .collect();
        let roots: BTreeSet<usize> = parent
            .iter()
            .enumerate()
            .filter_map(|(v, q)| q.is_none().then_some(v))
            .collect();
        assert_eq!(roots.len(), 1);
        let forest = RootedForest { parent };
        assert!(is_rooted_spanning_forest(&graph, &forest, &roots));
    }
}

#[test]
fn census_csv_profiles_and_total() {
    let output = run(&["census", "1", "1", "1", "--format", "csv"], &[]);
    assert_eq!(exit_code(&output), 0);
    let stdout = stdout_of(&output);
    let lines: Vec<&str> = stdout.lines().collect();
    assert_eq!(lines.first(), Some(&"l,k,r,count"));
    assert_eq!(lines.len(), 9);
    assert_eq!(lines.last(), Some(&"total,,,16"));
    assert!(lines.contains(&"1,1,1,1"));
}

#[test]
fn census_json_total_matches_closed_form() {
    let output = run(&["census", "1", "1", "2", "--format", "json"], &[]);
    assert_eq!(exit_code(&output), 0);
    let report: serde_json::Value =
        serde_json::from_str(stdout_of(&output).trim()).expect("valid JSON");
    // every profile with l + k + r >= 1 occurs, so 2 * 2 * 3 - 1 rows
    assert_eq!(report["total"], "75");
    assert_eq!(report["profiles"].as_array().expect("array").len(), 11);
}

#[test]
fn census_over_default_edge_limit_exits_2() {
    let output = run(&["census", "3", "3", "3"], &[]);
    assert_eq!(exit_code(&output), 2);
}

#[test]
fn census_edge_limit_env_var_is_honored() {
    let blocked = run(
        &["census", "1", "1", "2"],
        &[("FOREST_CENSUS_MAX_EDGES", "4")],
    );
    assert_eq!(exit_code(&blocked), 2);
    let allowed = run(
        &["census", "1", "1", "2"],
        &[("FOREST_CENSUS_MAX_EDGES", "5")],
    );
    assert_eq!(exit_code(&allowed), 0);
}

#[test]
fn census_edge_limit_flag_beats_env_var() {
    let output = run(
        &["census", "1", "1", "2", "--max-edges", "5"],
        &[("FOREST_CENSUS_MAX_EDGES", "4")],
    );
    assert_eq!(exit_code(&output), 0);
}

#[test]
fn census_rejects_garbage_env_var() {
    let output = run(
        &["census", "1", "1", "2"],
        &[("FOREST_CENSUS_MAX_EDGES", "many")],
    );
    assert_eq!(exit_code(&output), 2);
}

#[test]
fn verify_default_oracles_pass() {
    let output = run(&["verify", "2", "2", "2"], &[]);
    assert_eq!(exit_code(&output), 0);
    assert!(stdout_of(&output).is_empty());
}

#[test]
fn verify_census_and_construction_oracles_pass() {
    let output = run(
        &["verify", "2", "2", "2", "--oracles", "census,construction"],
        &[],
    );
    assert_eq!(exit_code(&output), 0);
}

#[test]
fn verify_rejects_zero_bound() {
    let output = run(&["verify", "0", "1", "1"], &[]);
    assert_eq!(exit_code(&output), 2);
}

#[test]
fn verify_rejects_unknown_oracle() {
    let output = run(&["verify", "1", "1", "1", "--oracles", "tarot"], &[]);
    assert_eq!(exit_code(&output), 2);
}

#[test]
fn bench_emits_csv_and_closed_form_wins_at_top_size() {
    let output = run(&["bench", "8", "2"], &[]);
    assert_eq!(exit_code(&output), 0);
    let stdout = stdout_of(&output);
    let lines: Vec<&str> = stdout.lines().collect();
    assert_eq!(lines.first(), Some(&"size,method,nanoseconds"));
    // sizes 1, 2, 4, 8, two methods each
    assert_eq!(lines.len(), 9);
    let nanos = |line: &str| -> u128 {
        line.rsplit_once(',')
            .expect("csv row")
            .1
            .parse()
            .expect("nanoseconds")
    };
    assert!(lines[7].starts_with("8,closed-form,"));
    assert!(lines[8].starts_with("8,determinant,"));
    assert!(nanos(lines[7]) < nanos(lines[8]));
}

#[test]
fn bench_rejects_zero_repetitions() {
    let output = run(&["bench", "2", "0"], &[]);
    assert_eq!(exit_code(&output), 2);
}

#[cfg(unix)]
#[test]
fn closed_pipe_does_not_panic() {
    // bench keeps writing rows after head exits, so the pipe closes
    // mid-stream; the process must die on SIGPIPE instead of panicking
    let output = Command::new("sh")
        .arg("-c")
        .arg(format!(
            "{} bench 8 64 | head -1",
            env!("CARGO_BIN_EXE_triforest")
        ))
        .output()
        .expect("shell runs");
    let stderr = String::from_utf8_lossy(&output.stderr);
    assert!(!stderr.contains("panicked"), "stderr: {stderr}");
    assert_eq!(stdout_of(&output), "size,method,nanoseconds\n");
}
