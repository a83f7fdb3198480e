use std::process::{Command, Output};

use jacobi_type::report::{SuiteReport, Status};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_jacobi-type"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn golden_csv_table() {
    let out = run(&["table", "--alpha", "0", "--beta", "0", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout(&out),
        "i,coeff0,coeff1,coeff2,coeff3,coeff4\n\
         1,-4,4,0,0,0\n\
         2,-10,-4,14,0,0\n\
         3,0,-8,0,8,0\n\
         4,1,0,-2,0,1\n"
    );
}

#[test]
fn table_with_decimals() {
    let out = run(&["table", "--alpha", "1", "--beta", "1/3", "--float-digits", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 7);
    assert!(text.contains('/'));
    assert!(text.contains("~ ["));
}

#[test]
fn small_verify_json() {
    let out = run(&[
        "verify", "--suite", "gram", "--alpha", "0", "--beta", "0", "--mass-n", "1", "--n-max", "3", "--format",
        "json", "--jobs", "1",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let report = SuiteReport::from_json(&stdout(&out)).unwrap();
    assert_eq!(report.suite, "gram");
    assert_eq!(report.summary.total, 1);
    assert_eq!(report.cases[0].status, Status::Pass);
    assert_eq!(report.cases[0].params["mass-n"], "1");
}

#[test]
fn mirror_flags() {
    let out = run(&[
        "verify", "--suite", "mirror", "--alpha", "1/2", "--beta", "2", "--mass-m", "1/3", "--n-max", "4",
        "--format", "csv",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with("suite,status,params,detail\n"));
    assert!(text.contains("mirror,pass,alpha=1/2 beta=2 mass-m=1/3,ok"));
}

#[test]
fn usage_and_parameter_errors() {
    let bad_beta = run(&["verify", "--suite", "eigen", "--beta", "-2"]);
    assert_eq!(bad_beta.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad_beta.stderr).contains("beta"));
    assert_eq!(run(&["verify", "--suite", "nope"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--format", "xml"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--alpha", "x/y"]).status.code(), Some(2));
    assert_eq!(run(&["table", "--alpha", "1/2", "--beta", "0"]).status.code(), Some(2));
    assert_eq!(run(&["table", "--alpha", "0", "--beta", "-1"]).status.code(), Some(2));
}

#[test]
fn reports_are_deterministic() {
    let args = ["verify", "--suite", "symmetry", "--alpha", "1", "--beta", "5/2", "--format", "json"];
    let mut a = SuiteReport::from_json(&stdout(&run(&args))).unwrap();
    let mut b = SuiteReport::from_json(&stdout(&run(&args))).unwrap();
    a.runtime_millis = 0;
    b.runtime_millis = 0;
    assert_eq!(a, b);
}
