use std::process::{Command, Output};

use peakalg::io::{ElementJson, MatrixJson};

fn peakalg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_peakalg")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn theta_text_and_json() {
    let o = peakalg(&["peak", "theta", "--composition", "2"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "2R_[2] + 2R_[1,1]");

    let o = peakalg(&["--json", "peak", "theta", "--composition", "2"]);
    let x = ElementJson::from_json(&stdout(&o)).unwrap().to_nsf().unwrap();
    assert_eq!(x.to_string(), "2R_[2] + 2R_[1,1]");
}

#[test]
fn matrix_formats() {
    let o = peakalg(&["decomp", "matrix", "--n", "4", "--format", "csv"]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with(",4,31,22"));

    let o = peakalg(&["decomp", "matrix", "--n", "5", "--format", "json"]);
    let m: MatrixJson = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(m.cols.first().map(String::as_str), Some("5"));
}

#[test]
fn exit_codes() {
    assert_eq!(peakalg(&["peak", "theta", "--composition", "2,0"]).status.code(), Some(1));
    assert_eq!(peakalg(&["decomp", "matrix", "--n", "12", "--format", "json"]).status.code(), Some(2));
    assert_eq!(peakalg(&["no-such-command"]).status.code(), Some(1));
    assert_eq!(peakalg(&["--help"]).status.code(), Some(0));
}

#[test]
fn quick_selftest_passes() {
    let o = peakalg(&["selftest", "--level", "quick"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
}
