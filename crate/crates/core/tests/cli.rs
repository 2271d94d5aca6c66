//! End-to-end runs of the command-line tool.

use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_disk-moduli"))
        .args(args)
        .env_remove("DISK_MODULI_MAX_TREES")
        .output()
        .expect("binary runs")
}

fn run_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_disk-moduli"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn json(out: &Output) -> Value {
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("stdout is json")
}

fn error_code(out: &Output) -> String {
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    let last = err.lines().last().expect("error record");
    let v: Value = serde_json::from_str(last).unwrap();
    v["error"]["code"].as_str().unwrap().to_string()
}

#[test]
fn divisors_of_two_two() {
    let v = json(&run(&["divisors", "--n", "2", "--m", "2", "--format", "json"]));
    assert_eq!(v["version"], 1);
    assert_eq!(v["command"], "divisors");
    assert_eq!((v["interior"].as_u64(), v["boundary"].as_u64(), v["mixed"].as_u64()), (Some(1), Some(1), Some(4)));
}

#[test]
fn six_chambers_for_one_four() {
    let v = json(&run(&["chambers", "--n", "1", "--m", "4"]));
    assert_eq!(v["chambers"], 6);
    assert_eq!(v["matches"], true);
}

#[test]
fn euler_refuses_two_interior_particles() {
    assert_eq!(error_code(&run(&["euler", "--n", "2", "--m", "2"])), "UnsupportedN");
    let v = json(&run(&["euler", "--n", "1", "--m", "3"]));
    assert_eq!(v["euler_characteristic"], -1);
}

#[test]
fn fvector_csv() {
    let out = run(&["fvector", "--n", "1", "--m", "3", "--format", "csv"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "codim,count\n0,2\n1,6\n2,3\n");
}

#[test]
fn building_set_sizes() {
    for (n, m, size) in [("2", "2", 4), ("2", "1", 2), ("1", "2", 0), ("1", "3", 1)] {
        let v = json(&run(&["building-set", "--n", n, "--m", m]));
        assert_eq!(v["elements"].as_array().unwrap().len(), size, "({n},{m})");
    }
}

#[test]
fn iso_operands() {
    let v = json(&run(&["iso", "--left", "assoc:4", "--right", "closure:0,5"]));
    assert_eq!(v["isomorphic"], true);
    let v = json(&run(&["iso", "--left", "assoc:4", "--right", "cyclo:3"]));
    assert_eq!(v["isomorphic"], false);
}

#[test]
fn every_subcommand_answers() {
    let cases: &[&[&str]] = &[
        &["strata", "--n", "1", "--m", "3"],
        &["fvector", "--n", "2", "--m", "1"],
        &["chambers", "--n", "2", "--m", "2"],
        &["divisors", "--n", "1", "--m", "3"],
        &["building-set", "--n", "2", "--m", "2"],
        &["poset", "--n", "2", "--m", "1"],
        &["closure", "--n", "1", "--m", "3", "--order", "1,3,2"],
        &["adjacency", "--n", "0", "--m", "5"],
        &["euler", "--n", "0", "--m", "4"],
        &["assoc", "--n", "4"],
        &["cyclo", "--n", "3"],
        &["iso", "--left", "cyclo:3", "--right", "closure:1,3"],
    ];
    for args in cases {
        let v = json(&run(args));
        assert_eq!(v["command"], args[0]);
    }
}

#[test]
fn poset_exports() {
    let out = run(&["poset", "--n", "2", "--m", "1", "--format", "text"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("poset 1\nelements 5\n"), "{text}");
    let out = run(&["poset", "--n", "2", "--m", "1", "--format", "dot"]);
    assert!(String::from_utf8(out.stdout).unwrap().starts_with("digraph poset {"));
}

#[test]
fn adjacency_of_five_points_on_a_line() {
    let v = json(&run(&["adjacency", "--n", "0", "--m", "5"]));
    assert_eq!(v["component_sizes"], serde_json::json!([12, 12]));
}

#[test]
fn render_reads_stdin() {
    let out = run_stdin(&["render", "--tree", "-", "--format", "svg"], "(S(i1,i2)|b1)");
    let svg = String::from_utf8(out.stdout).unwrap();
    assert!(svg.starts_with("<svg"));
    assert_eq!(svg.matches("class=\"loop\"").count(), 1);
    let src = r#"{"root":{"interior":[{"ip":1}],"boundary":[{"bp":1}]}}"#;
    let out = run_stdin(&["render", "--tree", "-", "--format", "dot"], src);
    assert!(String::from_utf8(out.stdout).unwrap().starts_with("graph dual {"));
    let bad = run_stdin(&["render", "--tree", "-"], "K(2,1):(i1|F[P(i2|),b1])");
    assert_eq!(error_code(&bad), "AnchorViolation");
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["strata", "--n", "2", "--m", "2"][..],
        &["poset", "--n", "1", "--m", "3", "--format", "dot"][..],
        &["divisors", "--n", "2", "--m", "3", "--parallel"][..],
    ] {
        assert_eq!(run(args).stdout, run(args).stdout, "{args:?}");
    }
    let seq = run(&["strata", "--n", "2", "--m", "3"]).stdout;
    let par = run(&["strata", "--n", "2", "--m", "3", "--parallel"]).stdout;
    assert_eq!(seq, par);
}

#[test]
fn errors_are_machine_readable() {
    assert_eq!(error_code(&run(&["strata", "--n", "1"])), "Usage");
    assert_eq!(error_code(&run(&["fvector", "--n", "1", "--m", "3", "--format", "svg"])), "Usage");
    assert_eq!(error_code(&run(&["bogus"])), "Usage");
    assert_eq!(error_code(&run(&["chambers", "--n", "2", "--m", "0"])), "UnsupportedM0");
    assert_eq!(error_code(&run(&["chambers", "--n", "1", "--m", "0"])), "DegenerateSpace");
    let capped = Command::new(env!("CARGO_BIN_EXE_disk-moduli"))
        .args(["strata", "--n", "2", "--m", "3"])
        .env("DISK_MODULI_MAX_TREES", "10")
        .output()
        .unwrap();
    assert_eq!(error_code(&capped), "CapExceeded");
    assert!(run(&["--help"]).status.success());
}
