use std::process::{Command, Output};

fn dunkl(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dunkl")).args(args).output().expect("run dunkl")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn apply_and_pizzetti_values() {
    let o = dunkl(&["apply", "--system", "z2:d=1", "--kappa", "1/2", "--xi", "1", "--poly", "x1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "2");

    let o = dunkl(&["pizzetti", "--system", "z2:d=2", "--kappa", "1/2,1", "--poly", "x1^2", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["mean"], "2/5");
    assert_eq!(v["oracle"], "2/5");
}

#[test]
fn verify_json_is_deterministic() {
    let args = ["verify", "commutativity", "--system", "b:d=2", "--kappa", "1,1/2", "--seed", "11", "--count", "5", "--json"];
    let a = dunkl(&args);
    let b = dunkl(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let report: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(report["seed"], 11);
    assert!(report["cases"].as_array().unwrap().iter().all(|c| c["status"] == "pass"));
}

#[test]
fn report_file_matches_stdout() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("hobson.json");
    let path_s = path.to_str().unwrap();
    let o = dunkl(&["verify", "hobson", "--system", "a:d=3", "--kappa", "3/2", "--count", "6", "--deg", "4", "--report", path_s, "--json"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(std::fs::read_to_string(&path).unwrap().trim(), stdout(&o).trim());
}

#[test]
fn hobson_and_transform_commands() {
    let o = dunkl(&["hobson", "--system", "b:d=2", "--kappa", "1,2", "--poly", "x1^2*x2 - x2^3", "--profile", "r^3*exp(-r^2)"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let o = dunkl(&["transform", "--system", "z2:d=2", "--kappa", "1/2", "--poly", "x1*x2", "--y", "1,2", "--kind", "gauss", "--json"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
}

#[test]
fn exit_codes() {
    // bad usage
    assert_eq!(dunkl(&["apply", "--system", "z2:d=1"]).status.code(), Some(2));
    assert_eq!(dunkl(&["verify", "nonsense", "--system", "z2:d=1"]).status.code(), Some(2));
    // bad input
    assert_ne!(dunkl(&["apply", "--system", "q:d=3", "--xi", "1", "--poly", "x1"]).status.code(), Some(0));
    assert_ne!(dunkl(&["apply", "--system", "z2:d=2", "--kappa", "-1", "--xi", "1,0", "--poly", "x1"]).status.code(), Some(0));
    // transforms need Z2^d
    assert_ne!(dunkl(&["verify", "transforms", "--system", "b:d=2"]).status.code(), Some(0));
    assert_eq!(dunkl(&["--help"]).status.code(), Some(0));
}
