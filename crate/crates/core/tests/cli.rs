use std::path::PathBuf;

use legkit::cli::run;
use serde_json::Value;

fn front(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "..", "fronts", name].iter().collect();
    p.to_string_lossy().into_owned()
}

fn report(args: &[&str]) -> (i32, Value) {
    let out = run(std::iter::once("legkit").chain(args.iter().copied()));
    let v: Value = serde_json::from_str(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", out.stdout));
    (out.code, v)
}

#[test]
fn unknot_invariants() {
    let (code, v) = report(&["invariants", &front("unknot.front")]);
    assert_eq!(code, 0);
    assert_eq!(v["command"], "invariants");
    assert_eq!(v["result"]["tb"], -1);
    assert_eq!(v["result"]["r"], 0);
    assert_eq!(v["version"], env!("CARGO_PKG_VERSION"));
}

#[test]
fn reversed_orientation_flips_r() {
    let (_, v) = report(&["invariants", &front("unknot_splus.front"), "--reverse-orientation"]);
    assert_eq!(v["result"]["r"], -1);
}

#[test]
fn concordance_tb_mismatch_exits_one() {
    let (code, v) = report(&["check-concordance", &front("unknot.front"), &front("unknot_splus.front")]);
    assert_eq!(code, 1);
    assert_eq!(v["result"]["status"], "Obstructed");
    assert_eq!(v["result"]["reason"], "TbMismatch");
}

#[test]
fn invalid_level_exits_two() {
    let (code, v) = report(&["validate", &front("bad.front")]);
    assert_eq!(code, 2);
    assert_eq!(v["result"]["ok"], false);
    assert_eq!(v["result"]["failure"]["InvalidLevel"], 0);
}

#[test]
fn missing_file_exits_two() {
    let out = run(["legkit", "jones", "/nonexistent/x.front"]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("cannot read"));
}

#[test]
fn usage_errors_go_to_stderr() {
    let out = run(["legkit", "stabilize", "a.front", "0:0", "*"]);
    assert_eq!(out.code, 2);
    assert!(out.stdout.is_empty());
    assert!(!out.stderr.is_empty());
}

#[test]
fn search_certificate_replays_through_the_cli() {
    let (code, v) = report(&["search-isotopy", &front("trefoil_kinked.front"), &front("trefoil.front"), "--depth", "2"]);
    assert_eq!(code, 0);
    let cert = v["result"]["Found"].to_string();
    let (code, r) = report(&["replay", &front("trefoil_kinked.front"), &cert]);
    assert_eq!(code, 0);
    assert_eq!(r["result"]["matches_end"], true);
    assert_eq!(r["result"]["word"], "l0 l2 x1 x1 x1 r0 r0");
}

#[test]
fn search_obstruction_exits_one() {
    let (code, v) = report(&["search-isotopy", &front("unknot.front"), &front("unknot_splus.front")]);
    assert_eq!(code, 1);
    assert_eq!(v["result"]["NotFound"]["reason"], "ObstructionTb");
    assert_eq!(v["result"]["NotFound"]["explored"], 0);
}

#[test]
fn apply_and_moves_agree() {
    let (_, v) = report(&["moves", &front("trefoil.front")]);
    let first = v["result"][0].to_string();
    let (code, a) = report(&["apply", &front("trefoil.front"), &first]);
    assert_eq!(code, 0);
    assert!(a["result"]["word"].is_string());
}

#[test]
fn filling_and_cobordism() {
    let (code, v) = report(&["check-filling", &front("trefoil.front"), "--genus", "1", "--slice-genus", "1"]);
    assert_eq!((code, v["result"]["status"].as_str()), (0, Some("Passes")));
    let (code, v) = report(&["check-filling", &front("trefoil_left.front"), "--genus", "0"]);
    assert_eq!(code, 1);
    assert_eq!(v["result"]["reason"], "FillingR");
    let (code, v) = report(&["cobordism-genus", &front("unknot.front"), &front("trefoil.front")]);
    assert_eq!((code, v["result"]["genus"].as_u64()), (0, Some(1)));
    let (code, v) = report(&["cobordism-genus", &front("unknot.front"), &front("unknot_splus.front")]);
    assert_eq!(code, 1);
    assert_eq!(v["result"]["impossible"], "OddTbGap");
}

#[test]
fn decide_simple_uses_jones_to_refute_same_type() {
    let (code, v) = report(&["decide-simple", &front("unknot.front"), &front("unknot.front"), "--same-smooth-type", "true"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["verdict"]["status"], "Decided(yes)");
    let (code, v) =
        report(&["decide-simple", &front("trefoil.front"), &front("figure_eight.front"), "--same-smooth-type", "true"]);
    assert_eq!(code, 1);
    assert_eq!(v["result"]["jones_override"], true);
    assert_eq!(v["result"]["verdict"]["status"], "Decided(no)");
}

#[test]
fn catalog_and_render() {
    let (code, v) = report(&["catalog", "list"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"].as_array().unwrap().len(), 6);
    let (code, _) = report(&["catalog", "get", "hopf"]);
    assert_eq!(code, 2);
    let dir = tempfile::tempdir().unwrap();
    let svg = dir.path().join("t.svg");
    let (code, _) = report(&["render", &front("trefoil.front"), "-o", svg.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(std::fs::read_to_string(svg).unwrap().starts_with("<svg"));
}

#[test]
fn reports_are_deterministic() {
    std::env::set_var(legkit::cli::SEED_VAR, "42");
    let a = run(["legkit", "random", "--size", "14"]);
    let b = run(["legkit", "random", "--size", "14"]);
    assert_eq!(a, b);
    let x = run(["legkit", "moves", &front("figure_eight.front")]);
    let y = run(["legkit", "moves", &front("figure_eight.front")]);
    assert_eq!(x, y);
}

#[test]
fn small_checks() {
    let (code, v) = report(&["lisca-matic", "2", "0", "1"]);
    assert_eq!((code, v["result"]["holds"].as_bool()), (1, Some(false)));
    let (code, _) = report(&["immersed-cylinder", "0", "0", "--smoothly-concordant", "true"]);
    assert_eq!(code, 0);
    let (code, v) = report(&["jones", &front("trefoil.front")]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["text"], "t + t^3 - t^4");
}
