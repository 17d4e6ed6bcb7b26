use std::process::{Command, Output};

use mckay_core::exactalg::RationalFunction;
use mckay_core::fixtures;
use serde_json::Value;

fn lab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mckay-lab"))
        .args(args)
        .env_remove("MCKAYLAB_SERIES_ORDER")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn e8_z_polynomials() {
    let o = lab(&["poincare", "--type", "E8", "--z"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    for (label, z) in fixtures::E8_Z {
        let line = text
            .lines()
            .find(|l| l.starts_with(&format!("{label}: ")))
            .unwrap_or_else(|| panic!("no line for {label}"));
        let got = RationalFunction::parse(&line[label.len() + 2..]).unwrap();
        assert_eq!(got, RationalFunction::parse(z).unwrap(), "{label}");
    }
}

#[test]
fn unknown_type_is_a_usage_error() {
    let o = lab(&["diagram", "--type", "Z9"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("Z9"));
}

#[test]
fn unknown_subcommand_and_bad_irrep_are_usage_errors() {
    assert_eq!(lab(&["frobnicate"]).status.code(), Some(2));
    let o = lab(&["molien", "--group", "O", "--i", "9", "--j", "4"]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(lab(&["affine-a-product", "--l", "4"]).status.code(), Some(2));
}

#[test]
fn json_round_trips_through_exact_serialization() {
    let o = lab(&["--format", "json", "poincare", "--type", "E8"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    let entries = v["entries"].as_array().unwrap();
    assert_eq!(entries.len(), 9);
    for e in entries {
        let exact: RationalFunction =
            serde_json::from_value(e["series"]["value"].clone()).unwrap();
        let text = e["series"]["text"].as_str().unwrap();
        assert_eq!(exact, RationalFunction::parse(text).unwrap());
    }
    let p1: RationalFunction = serde_json::from_value(entries[0]["series"]["value"].clone()).unwrap();
    assert_eq!(p1, RationalFunction::parse(fixtures::E8_INVARIANTS).unwrap());
}

#[test]
fn series_order_flag_and_environment() {
    let o = lab(&["poincare", "--type", "A1", "--series"]);
    let first = stdout(&o).lines().next().unwrap().to_string();
    assert_eq!(first.split_whitespace().count(), 1 + 64);
    let o = Command::new(env!("CARGO_BIN_EXE_mckay-lab"))
        .args(["poincare", "--type", "A1", "--series"])
        .env("MCKAYLAB_SERIES_ORDER", "5")
        .output()
        .unwrap();
    let first = stdout(&o).lines().next().unwrap().to_string();
    assert_eq!(first.split_whitespace().count(), 1 + 5);
    let o = lab(&["--series-order", "3", "poincare", "--type", "A1", "--series"]);
    let first = stdout(&o).lines().next().unwrap().to_string();
    assert_eq!(first.split_whitespace().count(), 1 + 3);
}

#[test]
fn reflhom_entry_passes() {
    let o = lab(&["reflhom", "--group", "O", "--irrep", "4", "--verbose"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("trace on"));
}

#[test]
fn verify_all_passes_and_is_deterministic() {
    let a = lab(&["verify-all"]);
    assert_eq!(a.status.code(), Some(0), "{}", stdout(&a));
    let b = lab(&["verify-all"]);
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout(&a).contains("15 of 15 criteria passed"));
}
