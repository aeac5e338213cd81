use std::process::{Command, Output};

use serde_json::Value;

fn ordertoric(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ordertoric"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = ordertoric(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("JSON output")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn predict_shrub() {
    let v = json(&["predict", "--shrub", "4", "--q", "5"]);
    assert_eq!(v["d"], 108);
    assert_eq!(v["k"], 9);
    assert_eq!(v["formula"], "(q-1)*(q-2)^3");
    let cert: Vec<&str> = v["certificate"].as_array().unwrap().iter().map(|c| c.as_str().unwrap()).collect();
    assert!(cert[0].contains("pyramid x(q-1)"));
    assert!(cert.iter().any(|c| c.contains("cube (q-2)^3")));
}

#[test]
fn exact_code_of_v_poset() {
    let v = json(&["code", "--tree", "0,1,1", "--q", "4", "--exact"]);
    assert_eq!((v["n"].as_u64(), v["k"].as_u64(), v["d"].as_u64()), (Some(27), Some(5), Some(12)));
    assert_eq!(v["modulus"], "t^2+t+1");
    assert_eq!(v["rate"], "5/27");
    assert!(v.get("seconds").is_none());
    let rates = json(&["code", "--named", "v", "--q", "4", "--compare-rates"]);
    assert_eq!(rates["order_rate"], "5/27");
    assert_eq!(rates["poset_polytope_rate"], "2/9");
}

#[test]
fn bipartite_report_table() {
    let out = ordertoric(&["report", "--bipartite-all", "--m", "2", "--q", "5"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("poset_id,m,ideals,q,n,k,d_exact,d_theorem,method,seconds"));
    let rows: Vec<Vec<String>> = text
        .lines()
        .skip(1)
        .map(|l| {
            let mut r = csv::ReaderBuilder::new().has_headers(false).from_reader(l.as_bytes());
            r.records().next().unwrap().unwrap().iter().map(str::to_string).collect()
        })
        .collect();
    assert_eq!(rows.len(), 3);
    let ks: Vec<&str> = rows.iter().map(|r| r[5].as_str()).collect();
    assert_eq!(ks, ["7", "8", "9"]);
    assert!(rows.iter().all(|r| r[6] == "144" && r[7] == "144"));
}

#[test]
fn report_is_independent_of_workers() {
    let args = |w: &'static str| {
        vec!["report", "--max-size", "3", "--q", "4", "--workers", w, "--format", "json"]
    };
    let one = ordertoric(&args("1"));
    let eight = ordertoric(&args("8"));
    assert!(one.status.success());
    assert_eq!(one.stdout, eight.stdout);
}

#[test]
fn exit_codes() {
    assert_eq!(ordertoric(&["code", "--chain", "2", "--q", "6"]).status.code(), Some(4));
    assert_eq!(ordertoric(&["code", "--chain", "2", "--q", "4", "--json", "{}"]).status.code(), Some(4));
    assert_eq!(ordertoric(&["predict", "--chain", "3", "--q", "4", "--theorem", "bipartite"]).status.code(), Some(4));
    assert_eq!(
        ordertoric(&["code", "--shrub", "5", "--q", "4", "--exact", "--strategy", "exhaustive"]).status.code(),
        Some(3)
    );
    assert_eq!(ordertoric(&["poset", "--chain", "30", "--ideals"]).status.code(), Some(3));
    assert_eq!(ordertoric(&["no-such-command"]).status.code(), Some(4));
    assert_eq!(ordertoric(&["--help"]).status.code(), Some(0));
    assert_eq!(ordertoric(&["--version"]).status.code(), Some(0));
    let bad = ordertoric(&["poset", "--json", r#"{"m": 3, "covers": [[1,2],[2,3],[1,3]]}"#]);
    assert_eq!(bad.status.code(), Some(4));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("error[redundant-cover]"));
}

#[test]
fn verify_and_lemmas_pass() {
    let out = ordertoric(&["verify", "--max-size", "3", "--q", "3,4", "--tree-max-size", "4", "--tree-q", "5"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(stdout(&out).lines().count(), 1 + 2 * 8 + 8);
    let lemmas = ordertoric(&["lemmas", "--max-size", "3", "--q", "4"]);
    assert_eq!(lemmas.status.code(), Some(0));
    let reports: Value = serde_json::from_slice(&lemmas.stdout).unwrap();
    assert!(reports.as_array().unwrap().iter().all(|r| r["failures"].as_array().unwrap().is_empty()));
}

#[test]
fn poset_and_polytope_output() {
    let v = json(&["poset", "--ordinal-sum", "antichain:2", "antichain:2", "--ideals"]);
    assert_eq!(v["ideal_count"], 7);
    assert_eq!(v["bipartite"]["has_perfect_matching"], true);
    assert_eq!(v["upper_ideals"].as_array().unwrap().len(), 7);
    let forest = json(&["poset", "--disjoint-union", "shrub:3", "chain:1"]);
    assert_eq!(forest["components"], serde_json::json!([[1, 2, 3], [4]]));
    let h = json(&["polytope", "--named", "v", "--poset-polytope", "--reflexivity"]);
    assert_eq!(h["vertices"], serde_json::json!([[-1, 0, 0], [0, 0, 1], [0, 1, 0], [1, -1, 0], [1, 0, -1]]));
    assert_eq!(h["reflexivity"]["is_terminal"], true);
    let o = json(&["polytope", "--chain", "2"]);
    assert_eq!(o["vertices"], serde_json::json!([[0, 0], [0, 1], [1, 1]]));
    assert_eq!(o["halfspaces"][0]["offset"], "0/1");
}

#[test]
fn out_file_and_formats() {
    let dir = std::env::temp_dir().join(format!("ordertoric-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("pred.md");
    let out = ordertoric(&["predict", "--tree", "0,1,1,2,2", "--q", "4", "--format", "markdown", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("| field | value |"));
    assert!(text.contains("| d | 72 |"));
    std::fs::remove_dir_all(&dir).unwrap();
}
