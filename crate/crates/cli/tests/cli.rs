use std::process::{Command, Output};

fn syt(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_syt"))
        .args(args)
        .env_remove("SYT_BUDGET_STATES")
        .env_remove("SYT_BUDGET_TERMS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).expect("valid json")
}

#[test]
fn zigzag_sequence_as_json() {
    let o = syt(&["seq", "--name", "zigzag", "--max", "8", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o), serde_json::json!([1, 1, 1, 2, 5, 16, 61, 272, 1385]));
}

#[test]
fn bernoulli_values_are_strings() {
    let o = syt(&["seq", "--name", "bernoulli", "--max", "4", "--format", "json"]);
    assert_eq!(json(&o), serde_json::json!(["1", "-1/2", "1/6", "0", "-1/30"]));
}

#[test]
fn strip_all_methods_agree() {
    let o = syt(&["strip", "--m", "4", "--n", "2", "--head", "0,0", "--tail", "0,0", "--all-methods", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["agree"], true);
    for m in ["dp", "aitken", "thm4"] {
        assert_eq!(v["methods"][m], "5", "{m}");
    }
    // the instance is itself valid shape text
    let inst = v["instance"].as_str().unwrap();
    let again = syt(&["count", "--shape", inst, "--method", "dp", "--format", "json"]);
    assert_eq!(json(&again)["methods"]["dp"], "5");
}

#[test]
fn containment_error_exits_one() {
    let o = syt(&["count", "--lambda", "1", "--mu", "2"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("ContainmentError"));
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(syt(&["count"]).status.code(), Some(1));
    assert_eq!(syt(&["seq", "--name", "fibonacci", "--max", "3"]).status.code(), Some(1));
    assert_eq!(syt(&["frobnicate"]).status.code(), Some(1));
}

#[test]
fn volume_is_a_fraction() {
    let o = syt(&["volume", "--shape", "strip:m=3,n=2,head=1;tail=1"]);
    assert_eq!(stdout(&o), "7/360\n");
    let o = syt(&["volume", "--shape", "lambda=1"]);
    assert_eq!(stdout(&o), "1/1\n");
}

#[test]
fn ribbon_matches_descent_class() {
    let o = syt(&["ribbon", "--size", "7", "--descents", "1,3,5", "--all-methods", "--format", "json"]);
    let v = json(&o);
    assert_eq!(v["agree"], true);
    assert_eq!(v["methods"]["permutations"], v["methods"]["dp"]);
    assert!(v["methods"].get("thm5").is_some());
}

#[test]
fn output_is_deterministic() {
    let args = ["spectral", "--m", "3", "--modes", "3", "--format", "json"];
    let a = syt(&args);
    let b = syt(&args);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.status.code(), Some(0));
}

#[test]
fn budget_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_syt"))
        .args(["count", "--shape", "lambda=4,4,4", "--method", "dp"])
        .env("SYT_BUDGET_STATES", "2")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("Budget"));
}

#[test]
fn csv_output() {
    let o = syt(&["count", "--lambda", "2,1", "--method", "all", "--format", "csv"]);
    let s = stdout(&o);
    assert!(s.starts_with("instance,method,value,agree\n"));
    assert!(s.contains(",dp,2,true"));
}

#[test]
fn verify_suite_writes_sorted_json() {
    let path = std::env::temp_dir().join(format!("syt-verify-{}.json", std::process::id()));
    let o = syt(&["verify", "--suite", "elkies", "--json", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let names: Vec<&str> = v.as_array().unwrap().iter().map(|r| r["instance"].as_str().unwrap()).collect();
    let mut sorted = names.clone();
    sorted.sort();
    assert_eq!(names, sorted);
    assert_eq!(names.len(), 9 * 25);
    std::fs::remove_file(path).ok();
}
