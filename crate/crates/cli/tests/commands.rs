use std::process::{Command, Output};

use qmacd::output::poly_from_json;
use qmacd_core::macdonald::nonsym_macdonald;
use qmacd_core::Composition;
use serde_json::Value;

fn qmacd(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qmacd")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("stdout is JSON")
}

#[test]
fn stats_reports_constants() {
    let o = qmacd(&["stats", "--eta", "1,0"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["dprime"], "1-q");
    assert_eq!(v["d"], "1-qt");
    assert_eq!(v["e"], "1-qt^2");
    assert_eq!(v["etabar"], serde_json::json!(["q", "t^-1"]));

    let v = json(&qmacd(&["stats", "--eta", "0,0"]));
    for key in ["d", "dprime", "e"] {
        assert_eq!(v[key], "1");
    }
}

#[test]
fn stats_rejects_negative_parts() {
    assert_eq!(qmacd(&["stats", "--eta", "1,-1"]).status.code(), Some(2));
}

#[test]
fn epoly_formats() {
    assert_eq!(stdout(&qmacd(&["epoly", "--eta", "0,1"])).trim(), "x2");
    assert_eq!(stdout(&qmacd(&["epoly", "--eta", "0,0"])).trim(), "1");
    let latex = stdout(&qmacd(&["epoly", "--eta", "1,0", "--format", "latex"]));
    assert_eq!(latex.trim(), r"x_{1} + \frac{q-qt}{1-qt} x_{2}");
    let oracle = stdout(&qmacd(&["epoly", "--eta", "2,0,1", "--oracle"]));
    assert_eq!(oracle, stdout(&qmacd(&["epoly", "--eta", "2,0,1"])));
}

#[test]
fn epoly_json_round_trips() {
    for eta in ["1,0", "0,2,1", "2,1,0"] {
        let o = qmacd(&["epoly", "--eta", eta, "--format", "json"]);
        assert_eq!(o.status.code(), Some(0));
        let p = poly_from_json(stdout(&o).trim()).unwrap();
        assert_eq!(p, nonsym_macdonald(&eta.parse::<Composition>().unwrap()));
    }
}

#[test]
fn kernel_exit_codes() {
    let o = qmacd(&["kernel", "--n", "2", "--degree", "2", "--check", "a,b,c"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["passed"], true);
    assert!(v["checks"].as_array().unwrap().len() >= 3);

    assert_eq!(qmacd(&["kernel", "--n", "2", "--degree", "2", "--check", "uplus"]).status.code(), Some(0));
    assert_eq!(qmacd(&["kernel", "--n", "0"]).status.code(), Some(2));
    assert_eq!(qmacd(&["kernel", "--n", "2", "--check", "d"]).status.code(), Some(2));
}

#[test]
fn verify_suites_pass() {
    for args in [
        &["verify", "--suite", "hecke", "--n", "2,3", "--degree", "4"][..],
        &["verify", "--suite", "dunkl", "--n", "2", "--degree", "3"],
        &["verify", "--suite", "all", "--n", "2", "--degree", "2"],
    ] {
        let o = qmacd(args);
        assert_eq!(o.status.code(), Some(0), "{args:?}");
        assert_eq!(json(&o)["passed"], true);
    }
    let v = json(&qmacd(&["verify", "--suite", "dunkl", "--n", "2", "--degree", "3"]));
    let names: Vec<&str> = v["checks"].as_array().unwrap().iter().map(|c| c["identity"].as_str().unwrap()).collect();
    assert!(names.iter().any(|s| s.starts_with("[D1, D2]")), "{names:?}");
}

#[test]
fn sampled_verification_is_seeded() {
    let args = ["verify", "--suite", "hecke", "--n", "3", "--degree", "4", "--sample", "5", "--seed", "9"];
    let a = qmacd(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, qmacd(&args).stdout);
    assert!(json(&a)["checks"].as_array().unwrap().iter().all(|c| c["cases"].as_u64().unwrap() <= 5));
}

#[test]
fn jobs_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_qmacd"))
        .env("QMACD_JOBS", "1")
        .args(["verify", "--suite", "raising", "--n", "2", "--degree", "2"])
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(qmacd(&["verify", "--n", "1"]).status.code(), Some(2));
}

#[test]
fn diagnostics_stay_off_stdout() {
    let o = qmacd(&["verify", "--suite", "hecke", "--n", "2", "--degree", "1"]);
    assert!(String::from_utf8_lossy(&o.stderr).contains("suite hecke"));
    json(&o);
}
