use std::process::{Command, Output};

use serde_json::Value;

const BIN: &str = env!("CARGO_BIN_EXE_threshold-spectra");

fn run(args: &[&str]) -> Output {
    Command::new(BIN).args(args).env_remove("THRESHOLD_SPECTRA_MAX_N").output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn analyze_twelve_vertex() {
    let out = run(&["analyze", "001101010111"]);
    assert_eq!(out.status.code(), Some(0));
    let b = json(&out);
    assert_eq!(b["graph"]["edge_count"], 47);
    assert_eq!(b["graph"]["r"], 8);
    assert_eq!(b["spectrum"]["values"][11], 17.8330349765);
    let ids: Vec<&str> = b["interlacing"].as_array().unwrap().iter().map(|r| r["theorem"].as_str().unwrap()).collect();
    assert_eq!(ids, ["T8", "T9", "L5", "L7"]);
}

#[test]
fn analyze_run_length_complete_graph() {
    let out = run(&["analyze", "--t11", "1^5"]);
    assert_eq!(out.status.code(), Some(0));
    let b = json(&out);
    assert_eq!(b["graph"]["degrees"], serde_json::json!([4, 4, 4, 4, 4]));
    assert_eq!(b["spectrum"]["values"], serde_json::json!([3.0, 3.0, 3.0, 3.0, 8.0]));
    assert_eq!(b["interlacing"][4]["theorem"], "T11");
}

#[test]
fn analyze_csv_lists_partial_sums() {
    let out = run(&["analyze", "--csv", "11"]);
    assert_eq!(stdout(&out), "k,partial_sum,bound,slack\n1,2,2,0\n2,2,4,2\n");
}

#[test]
fn parse_errors_exit_2_with_position() {
    let out = run(&["analyze", "0x1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("position 2"), "{err}");

    let out = run(&["ferrers", "0^0"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(run(&["spectrum", ""]).status.code(), Some(2));
}

#[test]
fn strict_tolerance_reports_failure() {
    // demanding slack >= 1 cannot hold on a tight chain
    let out = run(&["--tol", "-1", "analyze", "11"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["pass"], false);

    let out = run(&["verify", "--max-n", "4", "--tol", "-1", "--checks", "t9"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("counterexample: 00 (t9)"), "{}", stdout(&out));
    assert_eq!(run(&["verify", "--max-n", "3", "--tol", "1e-12"]).status.code(), Some(0));
    assert_eq!(run(&["--tol", "nan", "analyze", "11"]).status.code(), Some(2));
}

#[test]
fn verify_small_and_full() {
    let out = run(&["verify", "--max-n", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).ends_with("2 graphs, 0 failures: PASS\n"));

    let out = run(&["verify", "--max-n", "12", "--checks", "all", "--json", "--jobs", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let s = json(&out);
    assert_eq!(s["graphs"], 4094);
    assert_eq!(s["failures"], 0);
    assert_eq!(s["per_check"].as_array().unwrap().len(), 7);
    assert!(s["first_counterexample"].is_null());
}

#[test]
fn verify_csv_rows() {
    let out = run(&["verify", "--max-n", "3", "--csv", "--checks", "t8,brouwer"]);
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "n,sequence,kbar,E,k_min_slack,min_slack,pass");
    assert_eq!(lines.len(), 1 + 2 + 4);
    assert_eq!(lines[1], "2,00,0,0,1,1,true");
}

#[test]
fn verify_cap() {
    assert_eq!(run(&["verify", "--max-n", "100"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--max-n", "1"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--max-n", "17"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--max-n", "4", "--checks", "t10"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--max-n", "4", "--jobs", "0"]).status.code(), Some(2));

    let lowered = Command::new(BIN)
        .args(["verify", "--max-n", "5"])
        .env("THRESHOLD_SPECTRA_MAX_N", "4")
        .output()
        .unwrap();
    assert_eq!(lowered.status.code(), Some(2));
    let raised = Command::new(BIN)
        .args(["verify", "--max-n", "4", "--checks", "t8"])
        .env("THRESHOLD_SPECTRA_MAX_N", "200")
        .output()
        .unwrap();
    assert_eq!(raised.status.code(), Some(0));
}

#[test]
fn ferrers_rows() {
    let out = run(&["ferrers", "001101010111"]);
    assert_eq!(out.status.code(), Some(0));
    let lengths: Vec<usize> = stdout(&out).lines().map(|l| l.matches('#').count()).collect();
    assert_eq!(lengths, [11, 11, 11, 10, 9, 8, 8, 7, 7, 5, 4, 3]);

    assert_eq!(stdout(&run(&["ferrers", "0111"])), "b1 | ###\n".repeat(4));
    assert_eq!(stdout(&run(&["ferrers", "1"])), "b1 |\n");

    let j = json(&run(&["ferrers", "--json", "0001"]));
    assert_eq!(j["rows"], serde_json::json!([3, 1, 1, 1]));
}

#[test]
fn complement_output() {
    assert_eq!(stdout(&run(&["complement", "001101010111"])), "110010101000\n");
    let j = json(&run(&["complement", "--json", "0001"]));
    assert_eq!(j["run_length"], "1^3,0");
    assert_eq!(j["edge_count"], 3);
}

#[test]
fn spectrum_text_and_dense() {
    let text = stdout(&run(&["spectrum", "0001"]));
    let rows: Vec<Vec<&str>> = text.lines().map(|l| l.split('\t').collect()).collect();
    let tags: Vec<&str> = rows.iter().map(|r| r[2]).collect();
    assert_eq!(tags, ["condensed", "direct:1", "direct:1", "condensed"]);
    let values: Vec<f64> = rows.iter().map(|r| r[1].parse().unwrap()).collect();
    for (v, e) in values.iter().zip([0.0, 1.0, 1.0, 4.0]) {
        assert!((v - e).abs() < 1e-12);
    }
    let dense = json(&run(&["spectrum", "--dense", "--json", "0001"]));
    assert_eq!(dense["provenance"][0], "dense");
    for (v, e) in dense["values"].as_array().unwrap().iter().zip([0.0, 1.0, 1.0, 4.0]) {
        assert!((v.as_f64().unwrap() - e).abs() < 1e-12);
    }
    let csv = stdout(&run(&["spectrum", "--csv", "11"]));
    assert_eq!(csv, "i,value,provenance\n1,0,direct:1\n2,2,condensed\n");
}

#[test]
fn json_and_csv_are_exclusive() {
    assert_eq!(run(&["spectrum", "--json", "--csv", "11"]).status.code(), Some(2));
}
