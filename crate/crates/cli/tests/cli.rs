use std::process::{Command, Output};

use serde_json::Value;

fn parcat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_parcat")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = parcat(args);
    assert!(out.status.success(), "{args:?} failed: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn json_lines(args: &[&str]) -> Vec<Value> {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    stdout(&full).lines().map(|l| serde_json::from_str(l).unwrap()).collect()
}

#[test]
fn counts() {
    assert_eq!(stdout(&["count", "--n", "4", "--r", "2"]).trim(), "n=4 R={2} C=6");
    let all = stdout(&["count", "--n", "3"]);
    assert_eq!(all.lines().count(), 4);
    assert!(all.contains("R={1,2} C=5"));
    let v = json_lines(&["count", "--n", "10", "--r", "2,4,6,8"]);
    assert_eq!(v[0]["count"], 3114);
    assert_eq!(stdout(&["count-total", "--n", "5"]).trim(), "C_5^Σ = 284");
    assert_eq!(stdout(&["count-total", "--n", "12", "--formula"]), stdout(&["count-total", "--n", "12"]));
}

#[test]
fn exit_codes() {
    assert_eq!(parcat(&["count", "--n", "4", "--r", "5"]).status.code(), Some(3));
    assert_eq!(parcat(&["count", "--n", "4", "--r", "x"]).status.code(), Some(2));
    assert_eq!(parcat(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(parcat(&["witness", "--lambda", "2,1,0", "--perm", "1;2;3"]).status.code(), Some(3));
    let guarded = parcat(&["demazure", "--lambda", "3,2,1,0", "--perm", "4;3;2;1", "--budget", "10"]);
    assert_eq!(guarded.status.code(), Some(4));
    assert!(String::from_utf8_lossy(&guarded.stderr).starts_with("parcat: "));
}

#[test]
fn lists_match_counts() {
    for family in ["r312", "gapless", "chains", "shapes", "opart"] {
        let out = stdout(&["list", family, "--n", "5", "--r", "1,3"]);
        assert_eq!(out.lines().count(), 19, "{family}");
    }
    assert_eq!(stdout(&["list", "gchains", "--n", "4"]).lines().count(), 56);
    let avoiders = stdout(&["list", "opart", "--n", "4", "--r", "2", "--pattern", "231"]);
    assert_eq!(avoiders.lines().count(), 6);
}

#[test]
fn oeis_prefixes() {
    assert_eq!(stdout(&["oeis", "--seq", "a220097", "--terms", "5"]).trim(), "1, 6, 43, 352, 3114");
    let v = json_lines(&["oeis", "--seq", "total", "--terms", "5"]);
    assert_eq!(v[0]["terms"], serde_json::json!([1, 3, 12, 56, 284]));
}

#[test]
fn key_json_round_trips_into_scan() {
    let v = json_lines(&["key", "--lambda", "2,1,0", "--perm", "3;1;2"]);
    assert_eq!(v[0]["columns"], serde_json::json!([[1, 3], [3]]));
    // A key is its own scanning tableau.
    let inline = v[0].to_string();
    let scanned = json_lines(&["scan", "--tableau", &inline]);
    assert_eq!(scanned[0]["scan"], v[0]);
    let text = stdout(&["scan", "--lambda", "2,1,0", "--columns", "1,3;2"]);
    assert_eq!(text.trim(), "2 2\n3");
}

#[test]
fn demazure_views() {
    let summary = stdout(&["demazure", "--lambda", "2,1,0", "--perm", "3;1;2"]);
    assert!(summary.contains("|D| = 5") && summary.contains("312-avoiding: false"), "{summary}");
    assert_eq!(stdout(&["demazure", "--lambda", "2,1,0", "--perm", "1;3;2", "--convexity"]).trim(), "convex");
    assert_eq!(stdout(&["convexity", "--lambda", "2,1,0", "--perm", "3;1;2"]).trim(), "nonconvex");
    let w = json_lines(&["demazure", "--lambda", "2,1,0", "--perm", "3;1;2", "--witness"]);
    assert_eq!(w[0]["X"]["columns"], serde_json::json!([[1, 3], [3]]));
    assert_eq!(w[0]["W"]["columns"], serde_json::json!([[1, 3], [1]]));
    assert_eq!(w[0]["T"]["columns"], serde_json::json!([[1, 3], [2]]));
    assert_eq!((w[0]["x_numerator"].as_u64(), w[0]["x_denominator"].as_u64()), (Some(1), Some(2)));
    let poly = stdout(&["demazure", "--lambda", "1,0", "--perm", "2;1", "--poly"]);
    assert_eq!(poly.trim(), "x1 + x2");
}

#[test]
fn verify_small() {
    let out = stdout(&["verify", "--n-max", "3"]);
    assert!(out.contains("C_3^Σ = 12"));
    assert_eq!(out.lines().filter(|l| l.starts_with("PASS")).count(), 8);
    let one = stdout(&["verify", "--n-max", "4", "--theorem", "key-coincidence"]);
    assert_eq!(one.lines().count(), 1);
}

#[test]
fn output_is_deterministic() {
    let args = ["--json", "list", "gapless", "--n", "6", "--r", "2,3"];
    assert_eq!(stdout(&args), stdout(&args));
}
