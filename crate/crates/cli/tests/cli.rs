use std::fs;
use std::process::{Command, Output};

use serde_json::Value;

fn cutkit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cutkit")).args(args).output().expect("run cutkit")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let o = cutkit(&all);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn ideal_reports() {
    let k4 = json(&["ideal", "K4", "markov"]);
    assert_eq!(k4["generators"], 1);
    assert_eq!(k4["degreeHistogram"], serde_json::json!({"4": 1}));
    assert_eq!(k4["codim"], 1);
    assert_eq!(
        k4["binomials"][0],
        "q[|1234]*q[12|34]*q[13|24]*q[14|23] - q[1|234]*q[2|134]*q[3|124]*q[4|123]"
    );
    let c5 = json(&["ideal", "C5", "degrees"]);
    assert_eq!((c5["generators"].as_u64(), c5["codim"].as_u64()), (Some(30), Some(10)));
    let k3 = json(&["ideal", "K3"]);
    assert_eq!((k3["generators"].as_u64(), k3["codim"].as_u64()), (Some(0), Some(0)));
}

#[test]
fn engines_give_the_same_groebner_basis() {
    let a = json(&["ideal", "suspend(path3)", "groebner", "--engine", "saturation"]);
    let b = json(&["ideal", "suspend(path3)", "groebner", "--engine", "clique-sum"]);
    assert_eq!(a["binomials"], b["binomials"]);
    let c = json(&["ideal", "suspend(path3)", "groebner", "--engine", "fibers"]);
    assert_eq!(a["binomials"], c["binomials"]);
    let k5 = json(&["ideal", "K5", "degrees", "--engine", "fibers"]);
    assert_eq!(k5["degreeHistogram"], serde_json::json!({"4": 20, "6": 40}));
    assert_eq!(k5["certified"], true);
    let o = cutkit(&["ideal", "K4", "groebner", "--engine", "nope"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("unknown engine"));
}

#[test]
fn threads_do_not_change_results() {
    let a = stdout(&cutkit(&["ideal", "K2,3", "groebner", "--threads", "1"]));
    let b = stdout(&cutkit(&["ideal", "K2,3", "groebner", "--threads", "3"]));
    assert_eq!(a, b);
}

#[test]
fn polytope_queries() {
    assert_eq!(stdout(&cutkit(&["polytope", "K4", "volume"])), "4\n");
    assert_eq!(stdout(&cutkit(&["polytope", "C5", "volume", "--volume-method", "placing"])), "52\n");
    assert_eq!(stdout(&cutkit(&["polytope", "C4", "smooth"])), "false\n");
    let n = json(&["polytope", "K5", "normality", "--max-height", "10"]);
    assert_eq!(n["gaps"].as_array().unwrap().len(), 1);
    assert_eq!(n["complete"], true);
}

#[test]
fn compose_reports() {
    let r = json(&["compose", "K4", "K4", "--separator", "2,3,4"]);
    assert_eq!(r["size"], 36);
    assert_eq!(r["verified"], true);
    let r = json(&["compose", "K2", "K2", "--separator", "1"]);
    assert_eq!(r["size"], 1);
    let o = cutkit(&["compose", "C4", "K4", "--separator", "1,3"]);
    assert!(!o.status.success());
}

#[test]
fn graph_files_are_accepted() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c4.txt");
    fs::write(&path, "n 4\n1 2\n2 3\n3 4\n1 4\n").unwrap();
    let r = json(&["ideal", path.to_str().unwrap()]);
    assert_eq!(r["degreeHistogram"], serde_json::json!({"2": 3}));
}

#[test]
fn stat_commands() {
    let o = cutkit(&["stat", "suspend-check", "K3"]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("PASS"));

    let dir = tempfile::tempdir().unwrap();
    let sigma = dir.path().join("sigma4.txt");
    fs::write(&sigma, "1,2 | 3,4\n2,3 | 1,4\n1 | 2,3,4\n2 | 1,3,4\n3 | 1,2,4\n1,2,3 | 4\n").unwrap();
    let s = sigma.to_str().unwrap();
    assert_eq!(stdout(&cutkit(&["stat", "splits", s, "verify"])), "PASS\n");
    assert!(stdout(&cutkit(&["stat", "splits", s, "ideal"]))
        .starts_with("f0000*f0101*f1010*f1111 - f0011*f0110*f1001*f1100\n"));
    let g = json(&["stat", "splits", s, "graph"]);
    assert_eq!(g["edges"].as_array().unwrap().len(), 6);

    let p = dir.path().join("p.json");
    let f = dir.path().join("f.json");
    let v = r#"["1/3","1/6","0","1/2","-2","7/5","0","1"]"#;
    fs::write(&p, v).unwrap();
    let o = cutkit(&["stat", "fourier", p.to_str().unwrap(), "--output", f.to_str().unwrap()]);
    assert!(o.status.success());
    let back = json(&["stat", "fourier", f.to_str().unwrap(), "--inverse"]);
    assert_eq!(back, serde_json::from_str::<Value>(v).unwrap());
}

#[test]
fn table_of_small_rows() {
    let o = cutkit(&["table1", "--max-vertices", "4"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 3);
    assert!(text.lines().all(|l| l.ends_with("MATCH")), "{text}");
}

#[test]
fn budget_exhaustion_is_exit_two() {
    let o = cutkit(&["ideal", "K5", "--budget-pairs", "5"]);
    assert_eq!(o.status.code(), Some(2), "{}", String::from_utf8_lossy(&o.stderr));
    let o = Command::new(env!("CARGO_BIN_EXE_cutkit"))
        .args(["table1", "--row", "K5"])
        .env("CUTKIT_BUDGET", "5")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).contains("PARTIAL"));
}

#[test]
fn unknown_flags_are_rejected() {
    assert!(!cutkit(&["ideal", "K4", "--frobnicate"]).status.success());
}
