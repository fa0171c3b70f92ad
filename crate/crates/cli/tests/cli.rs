use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../..")
}

fn fixture(name: &str) -> String {
    root().join("fixtures").join(name).to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wdlab")).args(args).output().expect("binary runs")
}

fn run_stdin(args: &[&str], input: &str) -> Output {
    use std::io::Write;
    use std::process::Stdio;
    let mut child = Command::new(env!("CARGO_BIN_EXE_wdlab"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("JSON report")
}

fn tmp(name: &str) -> String {
    let dir = std::env::temp_dir().join(format!("wdlab-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name).to_string_lossy().into_owned()
}

#[test]
fn validate_standard_fixture() {
    let o = run(&["validate", "--input", &fixture("standard_sl2.json")]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["valid"], true);
    assert_eq!(v["smooth"], true);
}

#[test]
fn cohomology_of_unramified_sibling() {
    let o = run(&["cohomology", "--input", &fixture("standard_sl2_n0.json")]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["h2"], 1);
    assert_eq!(v["smooth"], false);
    assert_eq!(v["dual_h0"], 1);
}

#[test]
fn every_fixture_validates() {
    for entry in std::fs::read_dir(root().join("fixtures")).unwrap() {
        let path = entry.unwrap().path();
        let o = run(&["validate", "--input", path.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0), "{}", path.display());
    }
}

#[test]
fn exit_codes() {
    let o = run_stdin(&["validate"], "{ not json");
    assert_eq!(o.status.code(), Some(2));
    let bad_scalar = r#"{"field":{"p":2},"point":{"group":{"type":"GL","n":2},"fK":1,
        "Phi":{"matrix":[["1","y"],["0","1"]]},"N":[["0","0"],["0","0"]]}}"#;
    assert_eq!(run_stdin(&["validate"], bad_scalar).status.code(), Some(2));
    // Ad(Φ)N ≠ pN
    let invalid = r#"{"field":{"p":2},"point":{"group":{"type":"GL","n":2},"fK":1,
        "Phi":{"matrix":[["1","0"],["0","1"]]},"N":[["0","1"],["0","0"]]}}"#;
    let o = run_stdin(&["validate"], invalid);
    assert_eq!(o.status.code(), Some(1));
    let v = json(&o);
    assert_eq!(v["violations"][0]["constraint"], "frobenius_scales_n");
    assert_eq!(run(&["validate", "--input", "/nonexistent/file.json"]).status.code(), Some(2));
}

#[test]
fn smooth_point_then_pushforward() {
    let out = tmp("pair.json");
    let o = run(&["smooth-point", "--group", "GL2xGL2", "--nilpotent", "2,2", "--p", "3", "--output", &out]);
    assert_eq!(o.status.code(), Some(0));
    let o = run(&["pushforward", "--input", &out, "--morphism", "tensor"]);
    assert_eq!(o.status.code(), Some(0));
    let o = run_stdin(&["cohomology"], &String::from_utf8(o.stdout).unwrap());
    assert_eq!(json(&o)["h2"], 0);

    let o = run(&["pushforward", "--input", &fixture("standard_sl2.json"), "--morphism", "sl2:GL3", "--nilpotent", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let o = run_stdin(&["validate"], &String::from_utf8(o.stdout).unwrap());
    assert_eq!(json(&o)["smooth"], true);
    let o = run(&["pushforward", "--input", &fixture("standard_sl2.json"), "--morphism", "bogus"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn fontaine_verbs() {
    let o = run(&["fontaine", "roundtrip", "--input", &fixture("gl2_inertia_order2.json"), "--fL", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["roundtrip"], true);
    let o = run(&["fontaine", "to-wd", "--input", &fixture("gl2_inertia_order2_module.json")]);
    assert_eq!(o.status.code(), Some(0));
    let back: Value = serde_json::from_slice(&o.stdout).unwrap();
    let orig: Value = serde_json::from_str(&std::fs::read_to_string(fixture("gl2_inertia_order2.json")).unwrap()).unwrap();
    assert_eq!(back, orig);
    let o = run(&["fontaine", "to-phimod", "--input", &fixture("gl2_inertia_order2.json"), "--fL", "3"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn dims_verbs() {
    let o = run(&["dims", "local", "--group", "GL2", "--hodge", "1,0", "--l-equals-p"]);
    assert_eq!(json(&o)["local_dim"], 6);
    let o = run(&["dims", "local", "--group", "calG2", "--fixed-det"]);
    assert_eq!(json(&o)["local_dim"], 5);
    let o = run(&["dims", "local", "--group", "GL3", "--hodge", "2,1,0", "--hodge", "0,-1,-2", "--l-equals-p"]);
    assert_eq!(json(&o)["hodge_dim"], 6);
    let o = run(&["dims", "local", "--group", "GL2", "--l-equals-p"]);
    assert_eq!(o.status.code(), Some(1));
    let o = run(&["dims", "global", "--input", &fixture("ledger_calg2.json")]);
    assert_eq!(json(&o)["krull_lower_bound"], 1);
}

#[test]
fn sweep_is_byte_stable_and_smooth() {
    let args = ["sweep", "--group", "GL3", "--partitions", "all", "--count", "50", "--seed", "7"];
    let a = run(&[&args[..], &["--jobs", "4"]].concat());
    let b = run(&[&args[..], &["--jobs", "1"]].concat());
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let text = String::from_utf8(a.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("orbit,kind,index,h0,h1,h2,smooth,very_smooth"));
    let rows: Vec<Vec<&str>> = lines.map(|l| l.split(',').collect()).collect();
    assert_eq!(rows.len(), 3 * 51);
    for r in rows.iter().filter(|r| r[1] == "factory") {
        assert_eq!((r[6], r[7]), ("true", "true"));
    }
}
