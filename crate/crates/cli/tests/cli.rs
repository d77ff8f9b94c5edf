use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn injekt(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_injekt"))
        .args(args)
        .env("INJEKT_THREADS", "2")
        .output()
        .expect("binary runs")
}

fn json_of(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("stdout is JSON")
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn construct_writes_morphisms() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("f.json");
    let o = injekt(&["construct", "--family", "wps_phi1", "--weights", "1,6,10,15", "--out", path(&f)]);
    assert_eq!(o.status.code(), Some(0));
    let m: Value = serde_json::from_str(&std::fs::read_to_string(&f).unwrap()).unwrap();
    assert_eq!(m["sections"].as_array().unwrap().len(), 5);

    let o = injekt(&["construct", "--family", "p1pn", "--n", "3", "--d", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json_of(&o)["sections"].as_array().unwrap().len(), 9);

    let o = injekt(&["construct", "--family", "chow_veronese", "--m", "1", "--dvec", "1,1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("subset sums clash"));

    let o = injekt(&["construct", "--list"]);
    assert_eq!(json_of(&o)["families"].as_array().unwrap().len(), 10);
}

#[test]
fn verify_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("f.json");
    injekt(&["construct", "--family", "wps_phi1", "--weights", "1,6,10,15", "--out", path(&f)]);
    let o = injekt(&["verify", "--morphism", path(&f), "--trials", "2000"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json_of(&o)["evidence"], "decoder-certified");

    // [x0^2 : x1^2] identifies [1:1] and [1:-1]
    let squares = r#"{"source": {"kind": "product", "dims": [1]}, "multidegree": [2],
        "sections": [{"blocks": [2], "terms": [{"c": "1", "e": [[2, 0]]}]}, {"blocks": [2], "terms": [{"c": "1", "e": [[0, 2]]}]}],
        "label": "squares", "decoder": null}"#;
    let g = dir.path().join("g.json");
    std::fs::write(&g, squares).unwrap();
    let o = injekt(&["verify", "--morphism", path(&g), "--trials", "500"]);
    assert_eq!(o.status.code(), Some(1), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(!json_of(&o)["collisions"].as_array().unwrap().is_empty());

    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{not json").unwrap();
    assert_eq!(injekt(&["verify", "--morphism", path(&bad)]).status.code(), Some(2));
    assert_eq!(injekt(&["verify", "--morphism", "/nonexistent.json"]).status.code(), Some(2));
}

#[test]
fn decode_inverts() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("f.json");
    injekt(&["construct", "--family", "wps_phi1", "--weights", "1,6,10,15", "--out", path(&f)]);
    let o = injekt(&["--format", "text", "decode", "--morphism", path(&f), "--image", "1,1,2,2,1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&o.stdout).trim(), "[1:1:1:1]");
}

#[test]
fn rank2_and_secant_curve() {
    let dir = tempfile::tempdir().unwrap();
    let t = dir.path().join("t.json");
    std::fs::write(&t, r#"{"m": 1, "slices": [[["0", "1"], ["1", "0"]], [["1", "0"], ["0", "0"]]]}"#).unwrap();
    let o = injekt(&["rank2", "--tensor", path(&t)]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json_of(&o)["decision"], "Border2Rank3");

    let c = dir.path().join("c.json");
    std::fs::write(&c, r#"{"forms": [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]}"#).unwrap();
    let o = injekt(&["secant-curve", "--curve", path(&c), "--point", "1,0,0,1", "--mode", "rational"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json_of(&o)["verdict"], "OnHonestSecant");
    let o = injekt(&["secant-curve", "--curve", path(&c), "--point", "0,1,0,0", "--mode", "modular"]);
    assert_eq!(json_of(&o)["verdict"], "NotOnSecant");
}

#[test]
fn gadget_report_file() {
    let dir = tempfile::tempdir().unwrap();
    let r = dir.path().join("r.json");
    let o = injekt(&["gadget", "--m", "6", "--check", "all", "--trials", "100", "--seed", "7", "--report", path(&r)]);
    assert_eq!(o.status.code(), Some(0));
    let rep: Value = serde_json::from_str(&std::fs::read_to_string(&r).unwrap()).unwrap();
    assert_eq!(rep["clean"], true);
    assert_eq!(rep["seed"], 7);
}

#[test]
fn sepinv_sets() {
    let o = injekt(&["sepinv", "--k", "6", "--weights", "2,2,3,3", "--set", "E", "--trials", "2000", "--seed", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json_of(&o)["reports"].as_array().unwrap().len(), 3);
    let o = injekt(&["sepinv", "--k", "3", "--weights", "1,2", "--set", "control", "--trials", "500"]);
    assert_eq!(o.status.code(), Some(1));
    // x0 alone is not invariant under Z_3
    let dir = tempfile::tempdir().unwrap();
    let s = dir.path().join("s.json");
    std::fs::write(&s, r#"{"polys": [{"blocks": [2], "terms": [{"c": "1", "e": [[1, 0]]}]}]}"#).unwrap();
    let o = injekt(&["sepinv", "--k", "3", "--weights", "1,2", "--set", path(&s), "--trials", "10"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn reports_are_reproducible() {
    let args = ["--no-timestamp", "gadget", "--m", "3", "--trials", "50", "--seed", "5"];
    let a = injekt(&args);
    let b = injekt(&args);
    assert_eq!(a.stdout, b.stdout);
    let one = Command::new(env!("CARGO_BIN_EXE_injekt")).args(args).env("INJEKT_THREADS", "1").output().unwrap();
    assert_eq!(a.stdout, one.stdout);
}

#[test]
fn suite_partial_table_and_broken_rows() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("broken.json");
    std::fs::write(&bad, r#"{"source": {"kind": "product", "dims": [1]}}"#).unwrap();
    let o = injekt(&["--no-timestamp", "suite", "--quick", "--only", "table,rank", "--morphism", path(&bad)]);
    assert_eq!(o.status.code(), Some(1));
    let rows = json_of(&o)["criteria"].as_array().unwrap().clone();
    assert_eq!(rows.len(), 3);
    assert_eq!(rows[0]["passed"], true);
    assert_eq!(rows[1]["passed"], true);
    assert_eq!(rows[2]["passed"], false);

    let o = injekt(&["suite", "--quick", "--only", "graphgadget"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json_of(&o)["criteria"].as_array().unwrap().len(), 1);
    assert_eq!(injekt(&["suite", "--only", "nonsense"]).status.code(), Some(2));
}
