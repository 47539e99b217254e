use std::process::{Command, Output};

use kostant::alternation::alt_set_characterized;
use kostant::multiplicity::q_multiplicity;
use kostant::weights::highest_root;
use kostant::{AlternationSet, MultiplicityReport, RootInterval, Settings, SignedQPolynomial};
use serde_json::Value;

fn kostant(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kostant"))
        .args(args)
        .env_remove("KOSTANT_MAX_BRUTE_RANK")
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> (Value, i32) {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let out = kostant(&all);
    let text = String::from_utf8(out.stdout).unwrap();
    (serde_json::from_str(&text).expect("valid JSON"), out.status.code().unwrap())
}

fn stderr_line(out: &Output) -> String {
    let text = String::from_utf8_lossy(&out.stderr).to_string();
    assert_eq!(text.lines().count(), 1, "diagnostic should be one line: {text:?}");
    text
}

#[test]
fn qmult_all_routes_agree_on_q_cubed() {
    let (v, code) = json(&["qmult", "--rank", "5", "--mu", "2..3", "--method", "all"]);
    assert_eq!(code, 0);
    assert_eq!(v["verdict"], "pass");
    assert_eq!(v["query"]["command"], "qmult");
    let reports = v["result"].as_array().unwrap();
    let methods: Vec<_> = reports.iter().map(|r| r["method"].as_str().unwrap()).collect();
    assert_eq!(methods, ["kwmf_full", "kwmf_altset", "closed_form", "predicted"]);
    for r in reports {
        assert_eq!(r["q_multiplicity"]["pretty"], "q^3");
        assert_eq!(r["q_multiplicity"]["coeffs"], serde_json::json!([0, 0, 0, 1]));
        assert_eq!(r["multiplicity_at_one"], 1);
    }
}

#[test]
fn alt_set_both_has_six_elements_and_agrees() {
    let (v, code) = json(&["alt-set", "--rank", "7", "--mu", "3..4", "--method", "both"]);
    assert_eq!(code, 0);
    assert_eq!(v["verdict"], "pass");
    for set in v["result"].as_array().unwrap() {
        assert_eq!(set["count"], 6);
        assert_eq!(set["elements"].as_array().unwrap().len(), 6);
    }
    let table = String::from_utf8(kostant(&["alt-set", "--rank", "7", "--mu", "3..4"]).stdout).unwrap();
    assert!(table.ends_with("verdict: pass\n"));
}

#[test]
fn json_round_trips_to_library_values() {
    let (v, _) = json(&["qmult", "--rank", "4", "--mu", "1..2", "--method", "all"]);
    let parsed: Vec<MultiplicityReport> = serde_json::from_value(v["result"].clone()).unwrap();
    let lambda = highest_root(4);
    let mu = RootInterval::new(4, 1, 2).unwrap().root();
    for report in &parsed {
        let direct = q_multiplicity(&lambda, &mu, report.method, &Settings::default()).unwrap();
        assert_eq!(*report, direct);
    }

    let (v, _) = json(&["alt-set", "--rank", "6", "--mu", "2..4", "--method", "theorem"]);
    let parsed: Vec<AlternationSet> = serde_json::from_value(v["result"].clone()).unwrap();
    assert_eq!(parsed, vec![alt_set_characterized(RootInterval::new(6, 2, 4).unwrap())]);
}

#[test]
fn zero_weight_through_kwmf() {
    let (v, code) = json(&["qmult", "--rank", "4", "--mu", "0", "--method", "kwmf"]);
    assert_eq!(code, 0);
    assert_eq!(v["verdict"], Value::Null);
    let r: MultiplicityReport = serde_json::from_value(v["result"][0].clone()).unwrap();
    let want = (1..=4).fold(SignedQPolynomial::zero(), |acc, t| acc + SignedQPolynomial::q_pow(t));
    assert_eq!(r.q_multiplicity, want);
}

#[test]
fn partition_with_oracle() {
    let (v, code) = json(&["partition", "--rank", "3", "--weight", "1,2,1", "--oracle"]);
    assert_eq!(code, 0);
    assert_eq!(v["verdict"], "pass");
    assert_eq!(v["result"]["pretty"], "2q^2 + 2q^3 + q^4");
    assert_eq!(v["result"]["count"], 5);
}

#[test]
fn csv_has_header_and_one_row_per_route() {
    let out = kostant(&["qmult", "--rank", "3", "--mu", "1..3", "--format", "csv"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<_> = text.lines().collect();
    assert_eq!(lines[0], "method,rank,mu,q_multiplicity,coeffs,at_one,terms");
    assert_eq!(lines[1], "kwmf,3,1..3,1,1,1,24");
    assert_eq!(lines.len(), 5);
}

#[test]
fn identity_table_holds() {
    let (v, code) = json(&["identity", "--max-n", "40"]);
    assert_eq!(code, 0);
    assert_eq!(v["verdict"], "pass");
    assert_eq!(v["result"][40]["fibonacci_n_plus_2"], 267_914_296u64);
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["qmult", "--rank", "3", "--mu", "2..5"][..],
        &["qmult", "--rank", "3", "--mu", "3..2"],
        &["qmult", "--rank", "3", "--mu", "0", "--method", "closed"],
        &["alt-set", "--rank", "3", "--mu", "x"],
        &["partition", "--rank", "3", "--weight", "1,2"],
        &["verify", "--no-such-flag"],
        &["qmult", "--rank", "0", "--mu", "1..1"],
    ] {
        let out = kostant(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty());
        stderr_line(&out);
    }
}

#[test]
fn capacity_errors_exit_three() {
    let out = kostant(&["alt-set", "--rank", "9", "--mu", "1..1", "--method", "brute"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr_line(&out).contains("--brute-cap"));

    let out = kostant(&["qmult", "--rank", "5", "--mu", "1..1", "--method", "kwmf", "--brute-cap", "4"]);
    assert_eq!(out.status.code(), Some(3));

    let out = Command::new(env!("CARGO_BIN_EXE_kostant"))
        .args(["qmult", "--rank", "5", "--mu", "1..1", "--method", "kwmf"])
        .env("KOSTANT_MAX_BRUTE_RANK", "4")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));

    let out = kostant(&["verify", "--max-brute-rank", "9"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn all_skips_full_group_above_cap() {
    let out = kostant(&["qmult", "--rank", "9", "--mu", "4..4", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["result"].as_array().unwrap().len(), 3);
    assert_eq!(v["verdict"], "pass");
}

#[test]
fn out_file_receives_output() {
    let path = std::env::temp_dir().join(format!("kostant-cli-test-{}.json", std::process::id()));
    let out = kostant(&["identity", "--max-n", "3", "--format", "json", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert_eq!(v["verdict"], "pass");
}

#[test]
fn verify_passes_and_is_deterministic() {
    let args = ["verify", "--format", "json", "--seed", "7"];
    let first = kostant(&args);
    assert_eq!(first.status.code(), Some(0), "{}", String::from_utf8_lossy(&first.stdout));
    let v: Value = serde_json::from_slice(&first.stdout).unwrap();
    assert_eq!(v["verdict"], "pass");
    assert_eq!(v["result"].as_array().unwrap().len(), 11);

    let quick = ["verify", "--format", "json", "--seed", "7", "--max-brute-rank", "4", "--max-closed-rank", "8"];
    let (a, b) = (kostant(&quick), kostant(&quick));
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn sequential_flag_gives_identical_output() {
    let args = ["qmult", "--rank", "6", "--mu", "2..4", "--format", "json"];
    let mut seq = args.to_vec();
    seq.push("--sequential");
    assert_eq!(kostant(&args).stdout, kostant(&seq).stdout);
}
