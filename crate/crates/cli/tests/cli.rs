use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;
use skein_core::ptorus::PTorusElement;
use skein_core::s04::S04Element;
use skein_core::torus::TorusElement;
use skein_core::{LaurentPoly, SkeinElement};

fn skein(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_skein"))
        .args(args)
        .output()
        .expect("run skein")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn golden(name: &str) -> String {
    let p = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    std::fs::read_to_string(p).unwrap()
}

fn tmp(name: &str, contents: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    let p = dir.join(name);
    std::fs::write(&p, contents).unwrap();
    p
}

#[test]
fn golden_tor_mul() {
    let o = skein(&["tor", "mul", "(2,1)", "(0,1)", "--basis", "that", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), golden("tor_mul_that.json"));

    let x = TorusElement::from_json(&serde_json::from_str(&stdout(&o)).unwrap()).unwrap();
    assert_eq!(x.len(), 2);
    assert_eq!(x.coeff(&"(2,2)".parse().unwrap()), LaurentPoly::q_pow(2));
    assert_eq!(x.coeff(&"(2,0)".parse().unwrap()), LaurentPoly::q_pow(-2));
}

#[test]
fn golden_order_leq() {
    let o = skein(&["order", "leq", "that", "s", "--n-max", "20", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), golden("order_leq_that_s.json"));

    let o = skein(&["order", "leq", "that", "s", "--n-max", "20"]);
    assert_eq!(stdout(&o), "(That) <= (S) certified to n=20\n");
}

#[test]
fn golden_tor_scan() {
    let o = skein(&["tor", "scan", "--basis", "s", "--bound", "3", "--json"]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(stdout(&o), golden("tor_scan_s_bound3.json"));

    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let want: Value = serde_json::from_str(r#"{"-2": -1, "2": -1}"#).unwrap();
    assert!(v["witnesses"].as_array().unwrap().iter().any(|w| {
        w["a"] == "(2,1)" && w["b"] == "(0,1)" && w["label"] == "1" && w["coeff"] == want
    }));
}

#[test]
fn outputs_are_stable_across_runs() {
    for args in [
        &["tor", "mul", "(2,1)", "(0,1)", "--basis", "that", "--json"][..],
        &["order", "leq", "that", "s", "--n-max", "20", "--json"],
        &["tor", "scan", "--basis", "s", "--bound", "3", "--json"],
        &["s04", "mul", "S(3,1)", "S(0,1)", "--json"],
    ] {
        assert_eq!(stdout(&skein(args)), stdout(&skein(args)), "{args:?}");
    }
}

fn round_trip<L: skein_core::Label>(args: &[&str], name: &str) {
    let o = skein(args);
    assert_eq!(o.status.code(), Some(0), "{args:?}");
    let text = stdout(&o);
    let x = SkeinElement::<L>::from_json(&serde_json::from_str(&text).unwrap()).unwrap();
    let path = tmp(name, &text);
    let again = skein(&["element", path.to_str().unwrap(), "--json"]);
    assert_eq!(stdout(&again), text);
    let y = SkeinElement::<L>::from_json(&serde_json::from_str(&stdout(&again)).unwrap()).unwrap();
    assert_eq!(x, y);

    // the text rendering is the same element
    let plain = stdout(&skein(&["element", path.to_str().unwrap()]));
    assert_eq!(plain, format!("{x}\n"));
}

#[test]
fn json_elements_round_trip() {
    round_trip::<skein_core::torus::TorusLabel>(
        &["tor", "mul", "(3,1)", "(1,2)", "--basis", "monomial", "--json"],
        "t10.json",
    );
    round_trip::<skein_core::ptorus::PTorusLabel>(
        &["ptor", "mul", "T(4,1)", "T(0,1)", "--json"],
        "t11.json",
    );
    round_trip::<skein_core::s04::S04Label>(
        &["s04", "mul", "S(3,1)", "S(0,1)", "--json"],
        "s04.json",
    );
}

#[test]
fn element_files_multiply() {
    let o = skein(&["ptor", "mul", "T(2,1)", "T(0,1)", "--json"]);
    let f = tmp("p.json", &stdout(&o));
    let arg = format!("@{}", f.display());
    let o = skein(&["ptor", "mul", "(1,0)", &arg, "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let x = PTorusElement::from_json(&serde_json::from_str(&stdout(&o)).unwrap()).unwrap();
    let direct = skein_core::ptorus::left_mul_t10(&skein_core::ptorus::mul_tn1_t01(2).unwrap()).unwrap();
    assert_eq!(x, direct);
}

#[test]
fn text_and_json_agree() {
    let j = stdout(&skein(&["s04", "mul", "S(2,1)", "S(0,1)", "--json"]));
    let x = S04Element::from_json(&serde_json::from_str(&j).unwrap()).unwrap();
    let t = stdout(&skein(&["s04", "mul", "S(2,1)", "S(0,1)"]));
    assert_eq!(t, format!("{x}\n"));
}

#[test]
fn exit_codes() {
    assert_eq!(skein(&["tor", "scan", "--bound", "3"]).status.code(), Some(0));
    assert_eq!(skein(&["order", "leq", "s", "that"]).status.code(), Some(2));
    assert_eq!(skein(&["s04", "force-p1", "--delta", "-1"]).status.code(), Some(2));
    assert_eq!(skein(&["certify", "sandwich", "--seq", "monomial"]).status.code(), Some(2));
    assert_eq!(skein(&["certify", "sandwich", "--seq", "that"]).status.code(), Some(0));
    assert_eq!(skein(&["certify", "lower", "--seq", "s", "--n-max", "8"]).status.code(), Some(0));
    assert_eq!(skein(&["ptor", "extract", "--seq", "monomial", "--n", "5"]).status.code(), Some(2));
    assert_eq!(skein(&["--help"]).status.code(), Some(0));
    assert_eq!(skein(&["bogus"]).status.code(), Some(1));
    assert_eq!(skein(&["tor", "scan", "--basis", "t"]).status.code(), Some(1));
    assert_eq!(skein(&["s04", "mul", "(2,1)", "(1,2)"]).status.code(), Some(1));
}

#[test]
fn parse_errors_point_at_the_problem() {
    let o = skein(&["tor", "mul", "(2,x)", "(0,1)"]);
    assert_eq!(o.status.code(), Some(1));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("position 3"), "{err}");
    assert!(err.lines().any(|l| l == "     ^"), "{err}");
}

#[test]
fn sequence_files() {
    let f = tmp("bad.seq", "0: 1\n1: 0 1\n2: -3 0 1\n");
    let arg = format!("file:{}", f.display());
    let o = skein(&["certify", "lower", "--seq", &arg, "--n-max", "2", "--json"]);
    assert_eq!(o.status.code(), Some(2));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["verdict"], "violation");

    let f = tmp("broken.seq", "0: 1\n1: 0 x\n");
    let arg = format!("file:{}", f.display());
    let o = skein(&["certify", "sandwich", "--seq", &arg]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8(o.stderr).unwrap().contains("line 2"));
}
