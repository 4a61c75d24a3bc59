//! End-to-end tests against the compiled binary: output contents, exit
//! codes, JSON shape, and the JSON round-trip back into library values.

use std::process::{Command, Output};
use std::str::FromStr;

use serde_json::Value;

use abelpairs::family6::kappa6_closed;
use abelpairs::scalar::{rat, Rational};
use abelpairs::{FieldCtx, RatFunc, UniPoly};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_abelpairs"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf8 stdout")
}

fn stderr(output: &Output) -> String {
    String::from_utf8(output.stderr.clone()).expect("utf8 stderr")
}

fn json(output: &Output) -> Value {
    serde_json::from_slice(&output.stdout).expect("valid json")
}

#[test]
fn counts_level_six() {
    let out = run(&["counts", "--n", "6"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("m_hex            10/3"));
    assert!(text.contains("m_box            5/2"));
    assert!(text.contains("m_hex_primitive  3"));
    assert!(text.contains("m_box_primitive  1"));
}

#[test]
fn counts_level_six_mod_five() {
    let out = run(&["counts", "--n", "6", "--char", "5"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("over F5"));
    assert!(text.contains("m_hex            7/3"));
    assert!(text.contains("m_box            3/2"));
}

#[test]
fn counts_rejects_characteristic_two() {
    let out = run(&["counts", "--n", "6", "--char", "2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("not a prime greater than 3"));
}

#[test]
fn counts_rejects_small_level() {
    let out = run(&["counts", "--n", "3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("greater than 3"));
}

#[test]
fn counts_rejects_dividing_characteristic() {
    let out = run(&["counts", "--n", "10", "--char", "5"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("divides"));
}

#[test]
fn counts_json_round_trips() {
    let out = run(&["counts", "--n", "6", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["field"], "Q");
    assert_eq!(v["n"], 6);
    let m_hex = Rational::from_str(v["m_hex"].as_str().unwrap()).unwrap();
    assert_eq!(m_hex, rat(10, 3));
    assert_eq!(Rational::from_str(v["deg_kappa"].as_str().unwrap()).unwrap(), rat(12, 1));
    assert_eq!(v["genus"], 0);
}

#[test]
fn output_is_deterministic() {
    let a = run(&["counts", "--n", "12", "--format", "json"]);
    let b = run(&["counts", "--n", "12", "--format", "json"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn enumerate_hex_level_six() {
    let out = run(&["enumerate", "--n", "6", "--shape", "hex", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let classes = v["classes"].as_array().unwrap();
    assert_eq!(classes.len(), 4);
    let auts: Vec<u64> = classes.iter().map(|c| c["aut"].as_u64().unwrap()).collect();
    assert_eq!(auts.iter().filter(|a| **a == 3).count(), 1);
    let primitive = classes.iter().filter(|c| c["primitive"].as_bool().unwrap()).count();
    assert_eq!(primitive, 3);
}

#[test]
fn total_matches_oracle() {
    let out = run(&["total", "--n", "6", "--oracle", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["total"], "20");
    assert_eq!(v["oracle"], "20");
    assert_eq!(v["agreement"], true);
}

#[test]
fn cusps_level_six_balance() {
    let out = run(&["cusps", "--n", "6", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["pole_mass"], "12");
    assert_eq!(v["cusp_number"], "4");
    assert_eq!(v["classes"].as_array().unwrap().len(), 4);
}

#[test]
fn kappa6_evaluates_exactly() {
    let out = run(&["kappa6", "--t", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("via resultant  -301935091801/278628139008"));
    assert!(text.contains("agreement      true"));
}

#[test]
fn kappa6_reports_boundary_parameter() {
    let out = run(&["kappa6", "--t", "1/9"]);
    assert_eq!(out.status.code(), Some(3), "degenerate outcome is exit 3");
    let text = stdout(&out);
    assert!(text.contains("degenerate"));
    assert!(text.contains("boundary fiber yes"));
}

#[test]
fn kappa6_reduction_round_trips() {
    let out = run(&["kappa6", "--reduce", "5", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["field"], "Fp:5");
    let ctx = FieldCtx::prime_field(5).unwrap();
    let num = poly_from_json(ctx, &v["kappa6"]["numerator"]);
    let den = poly_from_json(ctx, &v["kappa6"]["denominator"]);
    let rebuilt = RatFunc::new(num, den).unwrap();
    assert_eq!(rebuilt, kappa6_closed(ctx), "canonical form survives the trip");
}

fn poly_from_json(ctx: FieldCtx, v: &Value) -> UniPoly {
    let map = v.as_object().unwrap();
    let top = map.keys().map(|k| k.parse::<usize>().unwrap()).max().unwrap_or(0);
    let mut coeffs = vec![ctx.int(0); top + 1];
    for (key, value) in map {
        let q = Rational::from_str(value.as_str().unwrap()).unwrap();
        coeffs[key.parse::<usize>().unwrap()] = ctx.project(&q).unwrap();
    }
    UniPoly::new(ctx, coeffs)
}

#[test]
fn kappa6_census_mod_five() {
    let out = run(&["kappa6", "--census", "5", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["hex_primitive"], 2);
    assert_eq!(v["box_primitive"], 0);
    assert_eq!(v["at_zero"]["value"], "1");
}

#[test]
fn pade_worked_example() {
    let out = run(&["pade", "--n", "3", "--curve", "2,1,-4", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["is_abel"], true);
    assert_eq!(v["norm"]["3"], "4");
    assert_eq!(v["norm"].as_object().unwrap().len(), 1);
}

#[test]
fn pade_torsion_probe() {
    let out = run(&["pade", "--curve", "2,1,-4", "--torsion", "8", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["order"], 3);
    assert_eq!(v["indeterminate"].as_array().unwrap().len(), 0);
}

#[test]
fn pade_reports_singular_table_entry() {
    let out = run(&["pade", "--n", "5", "--curve", "0,0,3"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stdout(&out).contains("degenerate"));
}

#[test]
fn negative_arguments_are_values_not_flags() {
    let out = run(&["kappa6", "--t", "-3/7", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["agreement"], true);
    let out = run(&["pade", "--n", "3", "--curve", "-2,1,4"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn pade_rejects_degenerate_curve() {
    let out = run(&["pade", "--n", "3", "--curve", "2,1,0"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("cubic coefficient is zero"));
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir().join("abelpairs-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("counts.json");
    let out = run(&["counts", "--n", "6", "--format", "json", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty(), "report goes to the file");
    let contents = std::fs::read_to_string(&path).unwrap();
    let v: Value = serde_json::from_str(&contents).unwrap();
    assert_eq!(v["m_hex"], "10/3");
    std::fs::remove_file(&path).ok();
}
