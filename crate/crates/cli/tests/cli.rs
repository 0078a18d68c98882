use std::path::PathBuf;
use std::process::{Command, Output};

use cable_slopes::base::BaseSpec;
use cable_slopes::commands::{self, Mode};
use cable_slopes::formats::read_closed_form;
use cable_slopes::Format;
use cable_slopes_core::cabling::CableParams;
use cable_slopes_core::conjectures::GridSpec;
use cable_slopes_core::fusion::FusionParams;

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cable-slopes"))
        .args(args)
        .env_remove("CABLE_SLOPES_THREADS")
        .output()
        .expect("running the binary")
}

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join(name)
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn fusion_both_modes_agree() {
    let out = commands::fusion(FusionParams::new(2, 1), 12, Mode::Both, Format::Text).unwrap();
    assert_eq!(out.exit_code(), 0);
    assert!(out.output.contains("discrepancies: 0"));
    assert!(out.output.contains("2,27/2"));
}

#[test]
fn degenerate_fusion_is_rerouted() {
    let out = commands::fusion(FusionParams::new(1, 0), 4, Mode::Closed, Format::Json).unwrap();
    let v: serde_json::Value = serde_json::from_str(&out.output).unwrap();
    assert_eq!(v["rerouted"], true);
    assert_eq!(v["trivial"], false);
    assert_eq!(v["identification"], "K(1,0) = T(2,3)");
}

#[test]
fn unknot_cable_matches_exact() {
    let spec: BaseSpec = "unknot".parse().unwrap();
    let out = commands::cable(&spec, CableParams::new(2, 3).unwrap(), 8, true, None, Format::Text).unwrap();
    assert_eq!(out.exit_code(), 0, "{}", out.output);
    assert!(out.output.contains("agreement: true"));
}

#[test]
fn golden_cable_right_regime() {
    let spec = BaseSpec::File(data("data/8_20.json"));
    let out = commands::cable(&spec, CableParams::new(7, 2).unwrap(), 40, false, None, Format::Text).unwrap();
    assert_eq!(out.exit_code(), 0, "{}", out.output);
    assert!(out.output.contains("agreement: true"));
}

#[test]
fn fit_recovers_golden_samples() {
    let cf = read_closed_form(&data("data/9_44.json")).unwrap();
    let mut csv = String::from("n,d_plus\n");
    for n in 1..=30u64 {
        csv.push_str(&format!("{n},{}\n", cf.degree(n)));
    }
    let out = commands::fit(&csv, 6, Format::Json).unwrap();
    assert_eq!(out.exit_code(), 0);
    let v: serde_json::Value = serde_json::from_str(&out.output).unwrap();
    assert_eq!(v["period"], 3);
    assert_eq!(v["a"][0], "7/6");
}

#[test]
fn fit_of_zeros_is_zero() {
    let csv: String = std::iter::once("n,d_plus\n".to_string()).chain((1..=30).map(|n| format!("{n},0\n"))).collect();
    let out = commands::fit(&csv, 6, Format::Json).unwrap();
    let v: serde_json::Value = serde_json::from_str(&out.output).unwrap();
    assert_eq!(v["period"], 1);
    assert_eq!(v["a"][0], "0/1");
}

#[test]
fn fit_rejects_bad_input() {
    assert!(commands::fit("x,y\n1,2\n", 6, Format::Text).is_err());
    assert!(commands::fit("n,d_plus\n1,abc\n", 6, Format::Text).is_err());
}

#[test]
fn empty_grid_passes() {
    let out = commands::verify(&GridSpec::empty(), &[], Format::Text).unwrap();
    assert_eq!(out.exit_code(), 0);
    assert_eq!(out.output.trim(), "0 reports, 0 failed");
}

#[test]
fn corrupted_golden_fails() {
    let cf = read_closed_form(&data("tests/fixtures/corrupted_8_20.json")).unwrap();
    let out = commands::verify(&GridSpec::empty(), &[("corrupted".into(), cf)], Format::Csv).unwrap();
    assert_eq!(out.exit_code(), 1);
    assert!(out.output.lines().nth(1).unwrap().contains(",fail,"));
}

#[test]
fn verify_output_is_deterministic() {
    let spec = GridSpec { m1: (-2, 2), m2: (-2, 2), qs: vec![2], margin: 1 };
    let a = commands::verify(&spec, &[], Format::Csv).unwrap().output;
    let b = commands::verify(&spec, &[], Format::Csv).unwrap().output;
    assert_eq!(a, b);
}

#[test]
fn exit_codes() {
    assert_eq!(bin(&["verify", "--grid", "empty"]).status.code(), Some(0));
    let golden = data("tests/fixtures/corrupted_8_20.json");
    let o = bin(&["verify", "--grid", "empty", "--golden", golden.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL corrupted_8_20"));
    assert_eq!(bin(&["fusion", "--m1", "2"]).status.code(), Some(2));
    assert_eq!(bin(&["cable", "--base", "torus:2", "-p", "3", "-q", "2"]).status.code(), Some(2));
}

#[test]
fn thread_variable_is_validated() {
    let o = Command::new(env!("CARGO_BIN_EXE_cable-slopes"))
        .args(["verify", "--grid", "empty"])
        .env("CABLE_SLOPES_THREADS", "lots")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    let o = Command::new(env!("CARGO_BIN_EXE_cable-slopes"))
        .args(["verify", "--grid", "empty"])
        .env("CABLE_SLOPES_THREADS", "1")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn output_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t.csv");
    let o = bin(&["torus-exact", "-p", "2", "-q", "3", "--n-max", "3", "-f", "csv", "-o", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    assert!(std::fs::read_to_string(path).unwrap().starts_with("n,d_plus,jones\n"));
}
