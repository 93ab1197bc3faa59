use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_admissible"))
        .args(args)
        .env_remove("ADMISSIBLE_WEYL_CAP")
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

fn tsv(args: &[&str]) -> Vec<String> {
    let mut full = args.to_vec();
    full.extend(["--format", "tsv"]);
    let out = run(&full);
    assert!(out.status.success());
    String::from_utf8(out.stdout).unwrap().lines().map(str::to_string).collect()
}

fn labels(w: &Value) -> String {
    w["finite"].as_array().unwrap().iter().map(|x| x.as_str().unwrap()).collect::<Vec<_>>().join(",")
}

#[test]
fn vacuum_at_minus_half_is_a_module() {
    let v = json(&["classify", "--type", "A1", "--level", "-1/2", "--weight", "0"]);
    assert_eq!(v["is_module"], true);
    assert_eq!(v["failures"].as_array().unwrap().len(), 0);
}

#[test]
fn non_module_exits_zero_with_witness() {
    let v = json(&["classify", "--type", "A1", "--level", "-1/2", "--weight", "1/2"]);
    assert_eq!(v["is_module"], false);
    assert!(!v["failures"].as_array().unwrap().is_empty());
}

#[test]
fn a1_minus_half_has_four_weights() {
    let v = json(&["enumerate", "--type", "A1", "--level", "-1/2"]);
    assert_eq!(v["pr_plus"]["count"], 2);
    assert_eq!(v["pr"]["count"], 4);
    let found: Vec<String> = v["pr"]["weights"].as_array().unwrap().iter().map(labels).collect();
    assert_eq!(found, ["-3/2", "-1/2", "0", "1"]);
}

#[test]
fn g2_divisible_level() {
    let v = json(&["level-check", "--type", "G2", "--level", "-5/3"]);
    assert_eq!(v["p"], 7);
    assert_eq!(v["q"], 3);
    assert_eq!(v["case"], "divisible");
    assert_eq!(v["admissible"], true);
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["level-check", "--type", "A1", "--level", "-3/2"]).status.code(), Some(1));
    assert_eq!(run(&["enumerate", "--type", "A1", "--level", "-2"]).status.code(), Some(1));
    assert_eq!(run(&["level-check", "--type", "A1", "--level", "1/2"]).status.code(), Some(0));

    let bad_type = run(&["root-data", "--type", "X3"]);
    assert_eq!(bad_type.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad_type.stderr).contains("X3"));

    let bad_level = run(&["classify", "--type", "A1", "--level", "1/0"]);
    assert_eq!(bad_level.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad_level.stderr).contains("1/0"));

    assert_eq!(run(&["classify", "--type", "A2", "--level", "-3/2", "--weight", "0"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));

    let capped = Command::new(env!("CARGO_BIN_EXE_admissible"))
        .args(["enumerate", "--type", "B3", "--level", "-1/2"])
        .env("ADMISSIBLE_WEYL_CAP", "10")
        .output()
        .unwrap();
    assert_eq!(capped.status.code(), Some(1));
}

#[test]
fn emitted_weights_classify_as_modules() {
    let v = json(&["enumerate", "--type", "B2", "--level", "-1/2"]);
    for w in v["pr"]["weights"].as_array().unwrap() {
        let weight = labels(w);
        let c = json(&["classify", "--type", "B2", "--level", "-1/2", "--weight", &weight]);
        assert_eq!(c["weight"]["finite"], w["finite"]);
        assert_eq!(c["is_module"], true, "{weight}");
    }
}

#[test]
fn tsv_matches_json() {
    let args = ["enumerate", "--type", "A2", "--level", "-3/2"];
    let v = json(&args);
    let rows = tsv(&args);
    let pr: Vec<String> = rows
        .iter()
        .filter_map(|r| r.strip_prefix("pr\t"))
        .map(|r| r.split('\t').next().unwrap().to_string())
        .collect();
    let expected: Vec<String> = v["pr"]["weights"].as_array().unwrap().iter().map(labels).collect();
    assert_eq!(pr, expected);
    assert!(rows.contains(&format!("count\tpr\t{}", v["pr"]["count"])));

    let level = json(&["level-check", "--type", "B3", "--level", "-3/2"]);
    let row = tsv(&["level-check", "--type", "B3", "--level", "-3/2"]);
    let fields: Vec<&str> = row[1].split('\t').collect();
    assert_eq!(fields[2], level["p"].to_string());
    assert_eq!(fields[3], level["q"].to_string());
    assert_eq!(fields[5], level["case"].as_str().unwrap());
}

#[test]
fn output_is_deterministic() {
    let args = ["enumerate", "--type", "G2", "--level", "-5/3", "--verbose"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}

#[test]
fn orbit_stops_at_blocked_move() {
    let v = json(&["orbit", "--type", "A1", "--level", "-1/2", "--weight", "0", "--generators", "s0,s1,t1"]);
    let steps = v["steps"].as_array().unwrap();
    assert_eq!(steps.len(), 2);
    assert_eq!(steps[0]["applied"], true);
    assert_eq!(steps[1]["applied"], false);
    assert_eq!(steps[1]["blocking_value"], "2");
}

#[test]
fn sweep_reads_config() {
    let dir = std::env::temp_dir().join(format!("admissible-sweep-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("grid.toml");
    std::fs::write(&path, "types = [\"A1\"]\np_max = 3\nq_max = 2\n").unwrap();
    let rows = tsv(&["sweep", "--config", path.to_str().unwrap()]);
    assert_eq!(rows[0], "type\tlevel\tpr_plus\tpr");
    assert!(rows.contains(&"A1\t-1/2\t2\t4".to_string()));
    std::fs::remove_dir_all(dir).unwrap();
}
