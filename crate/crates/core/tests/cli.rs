use std::process::Command;

use warplab::census::{wd2_census, CensusEntry};
use warplab::table::KnotTable;

const TREFOIL: &str = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)";

fn warplab(args: &[&str], cache: &std::path::Path) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_warplab"))
        .args(args)
        .env("WARPLAB_CACHE", cache)
        .output()
        .unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap())
}

#[test]
fn wd_example() {
    let dir = tempfile::tempdir().unwrap();
    let (code, out) = warplab(&["wd", TREFOIL], dir.path());
    assert_eq!(code, 0);
    assert_eq!(out.lines().filter(|l| l.contains("d = 1")).count(), 2);
}

#[test]
fn verify_theorem1_lists_nine_knots() {
    let dir = tempfile::tempdir().unwrap();
    let (code, out) = warplab(&["verify", "theorem1"], dir.path());
    assert_eq!(code, 0);
    let names: Vec<&str> = out.lines().filter(|l| !l.starts_with("PASS")).collect();
    assert_eq!(names, ["5_1", "5_2", "6_1", "6_2", "6_3", "7_6", "7_7", "8_12", "8_18"]);
    // deterministic on a warm cache
    assert_eq!(warplab(&["verify", "theorem1"], dir.path()), (code, out));
}

#[test]
fn census_json_lines_revalidate() {
    let dir = tempfile::tempdir().unwrap();
    let (code, out) = warplab(&["--json", "census", "--max-n", "8", "--wd", "2"], dir.path());
    assert_eq!(code, 0);
    let t = KnotTable::bundled();
    let entries: Vec<CensusEntry> = out.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(entries, wd2_census(8, t).unwrap());
    for e in &entries {
        assert!(e.revalidate(t).unwrap());
    }
    assert!(dir.path().join("census-8.jsonl").exists());
}

#[test]
fn cache_flag_wins_over_env() {
    let env_dir = tempfile::tempdir().unwrap();
    let flag_dir = tempfile::tempdir().unwrap();
    let flag = flag_dir.path().to_str().unwrap();
    let (code, _) = warplab(&["--cache", flag, "census", "--max-n", "4"], env_dir.path());
    assert_eq!(code, 0);
    assert!(flag_dir.path().join("census-4.jsonl").exists());
    assert!(!env_dir.path().join("census-4.jsonl").exists());
}

#[test]
fn verification_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(warplab(&["verify", "cases"], dir.path()).0, 0);
    assert_eq!(warplab(&["verify", "md-table"], dir.path()).0, 0);
    // the census has fifteen degree-two shadows where sixteen are claimed
    let (code, out) = warplab(&["verify", "prop16"], dir.path());
    assert_eq!(code, 2);
    assert!(out.contains("FAIL sixteen shadows of degree two: found 15"));
    assert_eq!(warplab(&["verify", "nothing"], dir.path()).0, 1);
}

#[test]
fn json_outputs_parse() {
    let dir = tempfile::tempdir().unwrap();
    for args in [
        vec!["--json", "wd", TREFOIL],
        vec!["--json", "bounds", TREFOIL],
        vec!["--json", "rfactor", TREFOIL, "--at", "1"],
        vec!["--json", "identify", TREFOIL],
        vec!["--json", "conway", "4,3"],
        vec!["--json", "verify", "theorem1"],
    ] {
        let (code, out) = warplab(&args, dir.path());
        assert_eq!(code, 0, "{args:?}");
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert!(v.is_object());
    }
    let (_, out) = warplab(&["--json", "conway", "4,3"], dir.path());
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["knot"], "7_3");
    assert_eq!(v["d"], v["predicted"]);
}

#[test]
fn identify_with_table_file() {
    let dir = tempfile::tempdir().unwrap();
    let table = dir.path().join("t.jsonl");
    std::fs::write(&table, format!("{{\"name\":\"3_1\",\"c\":3,\"pd\":\"{TREFOIL}\"}}\n")).unwrap();
    let t = table.to_str().unwrap();
    assert_eq!(warplab(&["identify", TREFOIL, "--table", t], dir.path()), (0, "3_1\n".into()));
    let fig8 = "X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)";
    assert_eq!(warplab(&["identify", fig8, "--table", t], dir.path()), (0, "unknown\n".into()));
    let file = dir.path().join("k.pd");
    std::fs::write(&file, fig8).unwrap();
    assert_eq!(warplab(&["identify", "--file", file.to_str().unwrap()], dir.path()), (0, "4_1\n".into()));
    assert_eq!(warplab(&["identify", fig8, "--file", file.to_str().unwrap()], dir.path()).0, 1);
}
