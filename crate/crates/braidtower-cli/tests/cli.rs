use std::process::{Command, Output};

use serde_json::Value;

fn bt(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_braidtower")).args(args).env_remove("BT_THREADS").output().expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.push("--json");
    let out = bt(&all);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["schema"], "braidtower/1");
    v
}

#[test]
fn documented_examples() {
    let v = json(&["nielsen", "--group", "A5", "--classes", "3cyc*4", "--mode", "inner"]);
    assert_eq!(v["count"], 18);
    assert_eq!(v["elements"].as_array().unwrap().len(), 18);
    assert_eq!(v["elements"][0]["entries"].as_array().unwrap().len(), 4);

    let v = json(&["genus", "--group", "G1A5", "--classes", "3cyc*4"]);
    let mut g: Vec<u64> = v["genera"].as_array().unwrap().iter().map(|x| x.as_u64().unwrap()).collect();
    g.sort();
    assert_eq!(g, vec![9, 12]);

    assert_eq!(json(&["nielsen", "--group", "D5", "--classes", "inv*4", "--mode", "absolute"])["count"], 6);
}

#[test]
fn modes_and_views() {
    assert_eq!(json(&["nielsen", "--mode", "absolute"])["count"], 9);
    assert_eq!(json(&["nielsen", "--mode", "reduced-inner"])["count"], 18);
    let m = json(&["monodromy", "--mode", "absolute"]);
    assert_eq!(m["orbits"][0]["order"], "181440");
    let r = json(&["real"]);
    assert_eq!((r["orbits"][0]["over_1_inf"].as_u64(), r["orbits"][0]["over_0_1"].as_u64()), (Some(4), Some(2)));
    assert_eq!(r["kappa"]["r1"], 4);
    assert_eq!(json(&["real", "--r1", "4", "--r2", "0", "--mode", "absolute"])["orbits"][0]["over_minf_0"], 3);
    assert_eq!(bt(&["real", "--r1", "0", "--r2", "2"]).status.code(), Some(3));
    let s = json(&["shinc"]);
    assert_eq!(s["orbits"][0]["matrix"].as_array().unwrap().len(), 5);
    let o = json(&["lift", "--classes", "(1 2 3 4 5),(1 3 5 2 4),3cyc,3cyc"]);
    let mut inv: Vec<(u64, i64)> = o["braid_orbits"].as_array().unwrap().iter().map(|x| (x["size"].as_u64().unwrap(), x["invariant"].as_i64().unwrap())).collect();
    inv.sort();
    assert_eq!(inv, vec![(60, 1), (144, -1)]);
    let t = json(&["tower", "--levels", "1"]);
    assert_eq!(t["levels"][1]["genus"], "641");
    // explicit generators for A5 and a user-supplied N'
    let g = json(&["nielsen", "--group", "(1 2 3),(1 2 3 4 5)", "--mode", "absolute", "--nprime", "(1 2)"]);
    assert_eq!(g["count"], 9);
    assert_eq!(json(&["nielsen", "--classes", "(1 2 3 4 5)*2,(1 3 5 2 4)"])["count"], 0);
}

#[test]
fn identical_flags_give_identical_bytes() {
    let args = ["cusps", "--json", "--group", "D25", "--classes", "inv*4", "--mode", "absolute"];
    let a = bt(&args).stdout;
    let b = Command::new(env!("CARGO_BIN_EXE_braidtower")).args(args).env("BT_THREADS", "3").output().unwrap().stdout;
    assert!(!a.is_empty());
    assert_eq!(a, b);
}

#[test]
fn exit_codes() {
    let out = bt(&["nielsen", "--max-elements", "10", "--json"]);
    assert_eq!(out.status.code(), Some(2));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["status"], "budget-abort");
    assert_eq!(v["estimate"], "400");
    assert_eq!(bt(&["nielsen", "--group", "B7"]).status.code(), Some(3));
    assert_eq!(bt(&["nielsen", "--classes", "4cyc*4"]).status.code(), Some(3));
    assert_eq!(bt(&["real", "--r1", "1", "--r2", "1"]).status.code(), Some(3));
    let bad = Command::new(env!("CARGO_BIN_EXE_braidtower")).args(["nielsen"]).env("BT_THREADS", "zero").output().unwrap();
    assert_eq!(bad.status.code(), Some(3));
    assert_eq!(bt(&["--help"]).status.code(), Some(0));
}

#[test]
fn reproduce_suites() {
    let v = json(&["reproduce", "obstruction"]);
    assert_eq!(v["passed"], true);
    assert!(v["suites"][0]["checks"].as_array().unwrap().iter().all(|c| c["citation"].as_str().is_some_and(|s| !s.is_empty())));
    let v = json(&["reproduce", "a4tower", "--skip-stretch"]);
    assert_eq!(v["skipped"][0], "a4tower");
    let out = bt(&["reproduce", "level0"]);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stdout).contains("PASS"));
    assert_eq!(bt(&["reproduce", "level9"]).status.code(), Some(3));
}
