use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;
use tca_core::growth::{GrowthTable, SlopeEstimate};
use tca_core::invariants::{CrosscheckReport, DegreeReport, InvariantSpace, PrimeField, Rationals};
use tca_core::symfunc::SchurExpansion;
use tca_core::tensor_algebra::SnCharacter;
use tca_core::Partition;

fn tca(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tca")).args(args).env_remove("TCA_GROUP_CAP").output().expect("binary runs")
}

fn ok(args: &[&str]) -> String {
    let out = tca(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn ok_json(args: &[&str]) -> Value {
    serde_json::from_str(&ok(args)).unwrap()
}

fn fails(args: &[&str]) -> String {
    let out = tca(args);
    assert!(!out.status.success(), "{args:?} should fail");
    assert!(out.stdout.is_empty());
    let err = String::from_utf8(out.stderr).unwrap();
    assert_eq!(err.trim_end().lines().count(), 1, "diagnostic should be one line: {err:?}");
    err
}

fn group_file(dir: &tempfile::TempDir, name: &str, text: &str) -> String {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

const SWAP_F2: &str = r#"{"field":{"kind":"prime","p":2},"size":2,"generators":[[[0,1],[1,0]]]}"#;
const SWAP_Q: &str = r#"{"field":{"kind":"rational"},"size":2,"generators":[[[0,1],[1,0]]]}"#;
const MINUS_Q: &str = r#"{"field":{"kind":"rational"},"size":2,"generators":[[["-1",0],[0,"-2/2"]]]}"#;

#[test]
fn dimensions() {
    assert_eq!(ok_json(&["dim", "specht", "--shape", "2,1"]), serde_json::json!({"dim": 2}));
    assert_eq!(ok_json(&["dim", "specht", "--shape", "2,2,2"]), serde_json::json!({"dim": 5}));
    assert_eq!(ok_json(&["dim", "schur", "--shape", "1,1,1", "--rank", "2"]), serde_json::json!({"dim": 0}));
    assert_eq!(ok_json(&["dim", "schur", "--shape", "3,1", "--rank", "4"]), serde_json::json!({"dim": 45}));
    // 40 boxes in one row at rank 40 is far beyond u64
    let big = ok(&["dim", "schur", "--shape", "40", "--rank", "40"]);
    assert_eq!(big.trim(), r#"{"dim":53753604366668088230810}"#);
}

#[test]
fn partitions_and_characters() {
    let v = ok_json(&["partitions", "enum", "--n", "5"]);
    assert_eq!(v["count"], 7);
    let parts: Vec<Partition> = serde_json::from_value(v["partitions"].clone()).unwrap();
    assert_eq!(parts[0], Partition::row(5));
    assert_eq!(ok_json(&["partitions", "enum", "--n", "5", "--max-parts", "2"])["count"], 3);

    let sw = ok_json(&["schur-weyl", "--rank", "2", "--degree", "4"]);
    assert_eq!(sw["multiplicities"], serde_json::json!({"1,1,1,1": 0, "2,1,1": 0, "2,2": 1, "3,1": 3, "4": 5}));

    let lr: SchurExpansion = serde_json::from_str(&ok(&["lr", "--mu", "2,1", "--nu", "2"])).unwrap();
    assert_eq!(lr.terms().count(), 4);
}

#[test]
fn schur_functor_reads_an_expansion() {
    let dir = tempfile::tempdir().unwrap();
    let path = group_file(&dir, "x.json", r#"{"2": 1, "1,1": -1, "3": 2}"#);
    // flat weight at n = 2: f^(2) - f^(1,1) = 0
    assert_eq!(ok_json(&["schur-functor", "--expansion", &path, "--degree", "2"])["dim"], 0);
    assert_eq!(ok_json(&["schur-functor", "--expansion", &path, "--degree", "3"])["dim"], 2);
}

#[test]
fn invariants_commands() {
    let dir = tempfile::tempdir().unwrap();
    let f2 = group_file(&dir, "f2.json", SWAP_F2);
    let q = group_file(&dir, "q.json", SWAP_Q);
    let minus = group_file(&dir, "minus.json", MINUS_Q);

    assert_eq!(ok_json(&["invariants", "dims", "--group", &minus, "--max-degree", "3"]), serde_json::json!([1, 0, 4, 0]));
    let molien = ok(&["invariants", "dims", "--group", &q, "--max-degree", "5", "--method", "molien"]);
    let kernel = ok(&["invariants", "dims", "--group", &q, "--max-degree", "5", "--method", "kernel"]);
    assert_eq!(molien, kernel);
    assert_eq!(ok_json(&["invariants", "dims", "--group", &f2, "--max-degree", "3"]), serde_json::json!([1, 1, 2, 4]));
    fails(&["invariants", "dims", "--group", &f2, "--max-degree", "3", "--method", "molien"]);

    let space = ok_json(&["invariants", "basis", "--group", &f2, "--degree", "3"]);
    assert_eq!(InvariantSpace::from_json(PrimeField::new(2).unwrap(), &space).unwrap().dim(), 4);
    let space = ok_json(&["invariants", "basis", "--group", &q, "--degree", "2"]);
    assert_eq!(InvariantSpace::from_json(Rationals, &space).unwrap().dim(), 2);

    let ch = ok_json(&["invariants", "character", "--group", &q, "--degree", "2"]);
    let chi: SnCharacter = serde_json::from_value(ch["character"].clone()).unwrap();
    assert_eq!(chi.degree(), 2);
    assert_eq!(ch["multiplicities"], serde_json::json!({"1,1": 0, "2": 2}));

    let reports: Vec<DegreeReport> =
        serde_json::from_str(&ok(&["invariants", "newgens", "--group", &f2, "--max-degree", "6"])).unwrap();
    assert!(reports.iter().all(|r| r.new_generators >= 1));
    let reports: Vec<DegreeReport> =
        serde_json::from_str(&ok(&["invariants", "newgens", "--group", &q, "--max-degree", "4"])).unwrap();
    assert_eq!(reports.iter().map(|r| r.new_generators).collect::<Vec<_>>(), vec![1, 1, 0, 0]);

    let report: CrosscheckReport =
        serde_json::from_str(&ok(&["invariants", "crosscheck", "--group", &f2, "--degree", "3"])).unwrap();
    assert!(report.agrees && report.polynomial_dim == 4);
}

#[test]
fn group_cap_override() {
    let dir = tempfile::tempdir().unwrap();
    let q = group_file(&dir, "q.json", SWAP_Q);
    let out = Command::new(env!("CARGO_BIN_EXE_tca"))
        .args(["invariants", "dims", "--group", &q, "--max-degree", "2"])
        .env("TCA_GROUP_CAP", "1")
        .output()
        .unwrap();
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("group too large"));
}

#[test]
fn error_exits() {
    assert!(fails(&["bogus"]).contains("bogus"));
    assert!(fails(&["dim", "specht", "--shape", "1,2"]).contains("weakly decreasing"));
    assert!(fails(&["dim", "specht", "--shape", "2,x"]).contains("invalid"));
    assert!(fails(&["invariants", "dims", "--group", "/nonexistent/g.json", "--max-degree", "2"]).contains("cannot read"));
    let dir = tempfile::tempdir().unwrap();
    let junk = group_file(&dir, "junk.json", "{not json");
    assert!(fails(&["invariants", "dims", "--group", &junk, "--max-degree", "2"]).contains("bad group file"));
    let singular = group_file(&dir, "s.json", r#"{"field":{"kind":"rational"},"size":2,"generators":[[[1,1],[1,1]]]}"#);
    assert!(fails(&["invariants", "dims", "--group", &singular, "--max-degree", "2"]).contains("singular"));
    assert!(fails(&["gk", "free", "--rank", "3", "--char", "2", "--max", "5"]).contains("characteristic 2"));
    assert!(fails(&["gk", "free", "--rank", "2", "--char", "2", "--max", "5"]).contains("--lengths unit"));
    assert!(fails(&["gk", "free", "--rank", "2", "--char", "4", "--max", "5"]).contains("not a prime"));
    assert!(fails(&["gk", "slope", "--table", "/nonexistent.csv", "--window", "1:2"]).contains("cannot read"));
}

#[test]
fn growth_tables_round_trip() {
    for args in [
        vec!["gk", "free", "--rank", "2", "--max", "30"],
        vec!["gk", "free", "--rank", "2", "--char", "3", "--max", "30", "--lengths", "unit"],
        vec!["gk", "sym-triv2", "--max", "50"],
        vec!["gk", "sl2", "--char", "2", "--max", "40"],
    ] {
        let json = ok(&args);
        let table = GrowthTable::parse(&json).unwrap();
        assert_eq!(serde_json::to_string(&table).unwrap(), json.trim_end());
        let mut csv_args = args.clone();
        csv_args.extend(["--format", "csv"]);
        let csv = ok(&csv_args);
        assert_eq!(GrowthTable::parse(&csv).unwrap().entries, table.entries);
    }
    assert_eq!(GrowthTable::parse(&ok(&["gk", "sl2", "--max", "10"])).unwrap().value(10).unwrap().to_string(), "6");
}

#[test]
fn deterministic_payloads() {
    let dir = tempfile::tempdir().unwrap();
    let f2 = group_file(&dir, "f2.json", SWAP_F2);
    for args in [
        vec!["schur-weyl", "--rank", "3", "--degree", "5"],
        vec!["invariants", "newgens", "--group", f2.as_str(), "--max-degree", "5"],
        vec!["invariants", "basis", "--group", f2.as_str(), "--degree", "4"],
        vec!["gk", "sym-triv2", "--max", "100"],
    ] {
        assert_eq!(ok(&args), ok(&args));
    }
}

fn slope_from_pipe(table_args: &[&str], window: &str) -> SlopeEstimate {
    let table = tca(table_args);
    assert!(table.status.success());
    let mut child = Command::new(env!("CARGO_BIN_EXE_tca"))
        .args(["gk", "slope", "--window", window])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(&table.stdout).unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn free_table_piped_into_slope() {
    let est = slope_from_pipe(&["gk", "free", "--rank", "2", "--char", "0", "--max", "400"], "200:400");
    assert!((est.slope_f64() - 3.0).abs() < 0.1, "{est:?}");
    assert_eq!(est.window, (200, 400));
    let est = slope_from_pipe(&["gk", "free", "--rank", "2", "--max", "400", "--format", "csv"], "200:400");
    assert!((est.slope_f64() - 3.0).abs() < 0.1);
}

#[test]
fn slope_from_file_and_bad_windows() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t.csv");
    std::fs::write(&path, ok(&["gk", "sl2", "--max", "400", "--format", "csv"])).unwrap();
    let p = path.to_str().unwrap();
    let est: SlopeEstimate = serde_json::from_str(&ok(&["gk", "slope", "--table", p, "--window", "100:400"])).unwrap();
    assert!((est.slope_f64() - 1.0).abs() < 0.05);
    assert!(fails(&["gk", "slope", "--table", p, "--window", "100:401"]).contains("invalid window"));
    assert!(fails(&["gk", "slope", "--table", p, "--window", "100-400"]).contains("LO:HI"));
}
