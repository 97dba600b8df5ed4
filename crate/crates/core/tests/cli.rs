//! The `homothety` binary end to end.

use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_homothety"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> (Value, String, i32) {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let o = run(&full);
    let s = stdout(&o);
    (
        serde_json::from_str(&s).unwrap(),
        s,
        o.status.code().unwrap(),
    )
}

#[test]
fn bound_values() {
    let (v, _, code) = json(&["bound", "--d", "1", "--p", "23"]);
    assert_eq!(code, 0);
    assert_eq!(v["torsion_bound"], "532900");
    assert_eq!(v["frobenius_bound"], "6400");
    assert_eq!(v["exceptional_threshold_degree"], 21);
    assert_eq!(v["rational"]["kind"], "squares");
    assert!(v["warning"].is_string());
    let (v, _, _) = json(&["bound", "--d", "2"]);
    assert!(v["warning"].is_null());
    assert!(v.get("rational").is_none());
}

#[test]
fn json_output_round_trips() {
    for args in [
        &["bound", "--d", "2", "--h", "3"][..],
        &["ap-table"],
        &["combine", "4", "12", "--p", "11"],
        &["family", "0,12", "--p", "13", "--d", "2"],
        &["orbit", "--p", "97"],
        &["build", "nonsplit-normalizer", "--p", "11"],
    ] {
        let (v, s, code) = json(args);
        assert_eq!(code, 0, "{args:?}");
        assert_eq!(
            format!("{}\n", serde_json::to_string(&v).unwrap()),
            s,
            "{args:?}"
        );
    }
}

#[test]
fn ap_table_text_matches_fixture() {
    let o = run(&["ap-table"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), include_str!("fixtures/ap_table.txt"));
    let (v, _, _) = json(&["ap-table"]);
    assert_eq!(v["cells"].as_array().unwrap().len(), 21);
    assert_eq!(v["invalid_count"], 6);
}

#[test]
fn build_then_classify() {
    let dir = std::env::temp_dir().join(format!("homothety-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    for (kind, order, flag) in [
        ("split-cartan", 36, "in_split_cartan"),
        ("nonsplit-normalizer", 96, "in_nonsplit_normalizer"),
        ("borel", 252, "in_borel"),
        ("sl2", 336, "contains_sl2"),
    ] {
        let o = run(&["build", kind, "--p", "7"]);
        assert!(o.status.success());
        let file = dir.join(format!("{kind}.txt"));
        std::fs::write(&file, &o.stdout).unwrap();
        let (v, _, code) = json(&["classify", "--input", file.to_str().unwrap()]);
        assert_eq!(code, 0);
        assert_eq!(v["order"], order, "{kind}");
        assert_eq!(v[flag], true, "{kind}");
    }
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["bound"]).status.code(), Some(2));
    assert_eq!(run(&["--help"]).status.code(), Some(0));

    let (v, _, code) = json(&["combine", "0", "4", "--p", "13"]);
    assert_eq!(code, 1);
    assert_eq!(v["error"]["kind"], "domain");
    let (v, _, code) = json(&["build", "borel", "--p", "12"]);
    assert_eq!(code, 1);
    assert!(v["error"]["message"].is_string());
    let (v, _, code) = json(&["verify", "--p", "17"]);
    assert_eq!(code, 1);
    assert_eq!(v["error"]["kind"], "resource");
    let (_, _, code) = json(&["classify", "--input", "/nonexistent/file"]);
    assert_eq!(code, 1);
}

#[test]
fn verify_reports_counts() {
    let (v, _, code) = json(&["verify", "--p", "5", "--mode", "full-lattice"]);
    assert_eq!(code, 0);
    assert_eq!(v["subgroup_count"], 466);
    assert_eq!(v["conjugacy_class_count"], 48);
    assert_eq!(v["failures"], Value::Array(vec![]));
    let o = run(&["verify", "--p", "7", "--checks", "homotheties"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("1704"));
}
