use std::process::Command;

use braidscope::cli::run;
use serde_json::Value;

fn data(name: &str) -> String {
    format!("{}/data/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn invoke(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("braidscope").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(args: &[&str]) -> (String, Value) {
    let (code, out, err) = invoke(args);
    assert_eq!(code, 0, "{err}");
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["schema_version"], 1);
    (out, v)
}

#[test]
fn exit_statuses() {
    assert_eq!(invoke(&["--help"]).0, 0);
    assert_eq!(invoke(&["--version"]).0, 0);
    assert_eq!(invoke(&["analyze"]).0, 1);
    assert_eq!(invoke(&["analyze", "--graph", &data("bad.txt"), "-n", "2"]).0, 1);
    assert_eq!(invoke(&["analyze", "--graph", &data("missing.txt"), "-n", "2"]).0, 1);
    // illegal move: e1 runs into the particle sitting at 2
    let (code, out, err) = invoke(&["word", "--graph", &data("p3.txt"), "--base", "1,2", "--", "+e1"]);
    assert_eq!(code, 2);
    assert!(out.is_empty());
    assert!(err.starts_with("error:"));
    assert_eq!(invoke(&["--max-cells", "10", "build", "--graph", &data("k5.txt"), "-n", "2"]).0, 3);
}

#[test]
fn word_moves_a_particle() {
    let (_, v) = json(&["word", "--graph", &data("p3.txt"), "--base", "1,3", "--", "+e1"]);
    let r = &v["results"][0];
    assert_eq!(r["terminus"], "{2,3}");
    assert_eq!(r["spherical"], false);
    let (_, v) = json(&["word", "--graph", &data("p3.txt"), "--base", "1,3", "--against", "", "--", "+e1", "-e1"]);
    assert_eq!(v["results"][0]["reduced_length"], 0);
    assert_eq!(v["results"][0]["equal_to_against"], true);
}

#[test]
fn build_k5_two_particles() {
    let (_, v) = json(&["build", "--graph", &data("k5.txt"), "-n", "2", "--format", "json"]);
    assert_eq!(v["f_vector"], serde_json::json!([10, 30, 15]));
    assert_eq!(v["euler_characteristic"], -5);
    assert_eq!(v["components"], 1);
    // one hyperplane per edge of K5, each crossing the three edges disjoint from it
    assert_eq!(v["hyperplanes"], 10);
    assert_eq!(v["hyperplanes_by_square_walk"], 10);
    let (code, dot, _) = invoke(&["build", "--graph", &data("k5.txt"), "-n", "2", "--format", "dot"]);
    assert_eq!(code, 0);
    assert!(dot.starts_with("graph complex {"));
    assert!(dot.contains("graph delta {"));
}

#[test]
fn json_is_canonical_and_deterministic() {
    let runs: Vec<Vec<&str>> = vec![
        vec!["analyze", "--graph", "K6", "-n", "2"],
        vec!["homology", "--graph", "K5", "-n", "2"],
        vec!["relhyp-check", "--graph", "K6", "--collection", "PAIRS"],
        vec!["table", "--family", "bipartite", "--max", "3", "--particles", "2..3"],
        vec!["build", "--graph", "THETA", "-n", "3"],
    ];
    for args in runs {
        let (k5, k6, pairs, theta) = (data("k5.txt"), data("k6.txt"), data("k6_triangle_pairs.txt"), data("theta4.txt"));
        let args: Vec<&str> = args
            .iter()
            .map(|a| match *a {
                "K5" => k5.as_str(),
                "K6" => k6.as_str(),
                "PAIRS" => pairs.as_str(),
                "THETA" => theta.as_str(),
                other => other,
            })
            .collect();
        let (first, v) = json(&args);
        let (second, _) = json(&args);
        assert_eq!(first, second, "{args:?}");
        let mut again = serde_json::to_string_pretty(&v).unwrap();
        again.push('\n');
        assert_eq!(first, again, "{args:?}");
    }
}

#[test]
fn table_and_relhyp_outputs() {
    let (_, v) = json(&["table", "--family", "complete", "--max", "7", "--particles", "2..5"]);
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 6 * 4);
    let k4 = rows.iter().find(|r| r["graph"] == "K4" && r["particles"] == 2).unwrap();
    assert_eq!(k4["hyperbolic"], true);
    let (_, v) = json(&["relhyp-check", "--graph", &data("k6.txt"), "--collection", &data("k6_triangle_pairs.txt")]);
    assert_eq!(v["valid"], true);
    assert_eq!(v["members"], 10);
    let (code, text, _) = invoke(&["analyze", "--graph", &data("k5.txt"), "-n", "2", "--format", "table"]);
    assert_eq!(code, 0);
    assert!(!text.trim_start().starts_with('{'));
}

#[test]
fn cell_cap_from_environment() {
    let bin = env!("CARGO_BIN_EXE_braidscope");
    let status = |cap: Option<&str>| {
        let mut c = Command::new(bin);
        c.args(["build", "--graph", &data("k5.txt"), "-n", "2"]);
        match cap {
            Some(v) => c.env("BRAIDSCOPE_MAX_CELLS", v),
            None => c.env_remove("BRAIDSCOPE_MAX_CELLS"),
        };
        c.output().unwrap().status.code()
    };
    assert_eq!(status(None), Some(0));
    assert_eq!(status(Some("20")), Some(3));
    assert_eq!(status(Some("1000")), Some(0));
}
