use std::path::PathBuf;
use std::process::Command;

use cubecover::formats::{from_graph6, to_graph6};
use cubecover::{cycle_graph, hypercube, path_graph};
use serde_json::Value;

fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_cubecover"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).expect("utf8 stdout"),
        String::from_utf8(out.stderr).expect("utf8 stderr"),
    )
}

fn json(stdout: &str) -> Value {
    serde_json::from_str(stdout).expect("stdout is one JSON document")
}

fn temp_path(name: &str) -> PathBuf {
    std::env::temp_dir().join(format!("cubecover-cli-{}-{name}", std::process::id()))
}

#[test]
fn basis_constructs_and_reports_not_exists() {
    let (code, stdout, _) = run(&["basis", "2", "elliptic", "--out=json"]);
    assert_eq!(code, 0);
    let doc = json(&stdout);
    assert_eq!(doc["exists"], Value::Bool(true));
    assert_eq!(doc["vectors"].as_array().unwrap().len(), 4);
    assert_eq!(doc["verified"], Value::Bool(true));

    let (code, stdout, _) = run(&["basis", "1", "elliptic", "--out=json"]);
    assert_eq!(code, 0, "NOT-EXISTS is still a successful answer");
    let doc = json(&stdout);
    assert_eq!(doc["exists"], Value::Bool(false));
    let reason = doc["reason"].as_str().unwrap();
    assert!(reason.contains("2 or 3 (mod 4)"), "reason: {reason}");
    assert!(doc.get("vectors").is_none());
}

#[test]
fn basis_brute_force_agrees_with_construction() {
    for (r, t, len) in [(1usize, "hyperbolic", 2usize), (2, "elliptic", 4)] {
        let r_s = r.to_string();
        let (code, stdout, _) = run(&["basis", &r_s, t, "--method=brute", "--out=json"]);
        assert_eq!(code, 0);
        let doc = json(&stdout);
        assert_eq!(doc["exists"], Value::Bool(true), "r={r} {t}");
        assert_eq!(doc["vectors"].as_array().unwrap().len(), len);
        assert_eq!(doc["verified"], Value::Bool(true));
    }
    // inadmissible pair: the search agrees with the parity rule
    let (code, stdout, _) = run(&["basis", "2", "hyperbolic", "--method=brute", "--out=json"]);
    assert_eq!(code, 0);
    assert_eq!(json(&stdout)["exists"], Value::Bool(false));
    // search guard: dimension 10 is out of brute-force range
    let (code, _, stderr) = run(&["basis", "5", "hyperbolic", "--method=brute"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("limited to 8"), "stderr: {stderr}");
}

#[test]
fn verify_ranks_one_and_three_pass() {
    for (r, order) in [("1", "16"), ("3", "92160")] {
        let (code, stdout, _) = run(&["verify", r, "--out=json"]);
        assert_eq!(code, 0, "rank {r} stdout: {stdout}");
        let doc = json(&stdout);
        assert_eq!(doc["all_requested_passed"], Value::Bool(true));
        assert_eq!(doc["aut_order"].as_str().unwrap(), order);
        assert_eq!(doc["aut_order"], doc["pattern_order"]);
    }
}

#[test]
fn verify_rank_two_reports_the_larger_group() {
    let (code, stdout, _) = run(&["verify", "2", "--out=json"]);
    assert_eq!(code, 1, "rank 2 fails the full suite honestly");
    let doc = json(&stdout);
    assert_eq!(doc["aut_order"].as_str().unwrap(), "2304");
    assert_eq!(doc["pattern_order"].as_str().unwrap(), "768");
    let failed: Vec<&str> = doc["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["passed"] == Value::Bool(false))
        .map(|c| c["name"].as_str().unwrap())
        .collect();
    assert_eq!(failed, ["normal-cayley", "aut-order", "local-triviality"]);
    for check in doc["checks"].as_array().unwrap() {
        if check["passed"] == Value::Bool(false) {
            assert!(
                !check["detail"].as_str().unwrap().is_empty(),
                "failed check must carry a witness"
            );
        }
    }

    // the restricted selection passes: the graph still covers the 4-cube
    // 2-arc-transitively even though the full group is larger than the
    // pattern predicts
    let (code, stdout, _) = run(&["verify", "2", "--checks=cover,2at", "--out=json"]);
    assert_eq!(code, 0, "stdout: {stdout}");
    let doc = json(&stdout);
    let names: Vec<&str> = doc["checks"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["name"].as_str().unwrap())
        .collect();
    assert_eq!(names, ["shape", "cover", "two-arc-transitive"]);
    assert_eq!(doc["all_requested_passed"], Value::Bool(true));
}

#[test]
fn verify_rank_four_runs_subgroup_certificates() {
    let (code, stdout, _) = run(&["verify", "4", "--out=json"]);
    assert_eq!(code, 0, "stdout: {stdout}");
    let doc = json(&stdout);
    assert_eq!(doc["full_group_computed"], Value::Bool(false));
    assert!(doc.get("aut_order").is_none());
    let names: Vec<&str> = doc["checks"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["name"].as_str().unwrap())
        .collect();
    assert_eq!(
        names,
        ["shape", "cover", "sigma-embedding", "split-witness", "two-arc-transitive", "normal-cayley"]
    );
    assert_eq!(doc["all_requested_passed"], Value::Bool(true));

    // asking for the stabilizer escalates to the full group
    let (code, stdout, _) = run(&["verify", "4", "--checks=stab", "--out=json"]);
    assert_eq!(code, 0, "stdout: {stdout}");
    let doc = json(&stdout);
    assert_eq!(doc["full_group_computed"], Value::Bool(true));
    assert_eq!(doc["aut_order"].as_str().unwrap(), "20643840");
}

#[test]
fn verify_rejects_bad_usage() {
    let (code, _, _) = run(&["verify", "9"]);
    assert_eq!(code, 2);
    let (code, _, _) = run(&["verify", "0"]);
    assert_eq!(code, 2);
    let (code, _, _) = run(&["verify", "2", "--checks=bogus"]);
    assert_eq!(code, 2);
    let (code, _, _) = run(&["frobnicate"]);
    assert_eq!(code, 2);
    let (code, _, _) = run(&[]);
    assert_eq!(code, 2);
    let (code, _, _) = run(&["--help"]);
    assert_eq!(code, 0);
    let (code, _, _) = run(&["--version"]);
    assert_eq!(code, 0);
}

#[test]
fn verify_exports_the_graph() {
    let path = temp_path("export.g6");
    let path_s = path.to_str().unwrap().to_string();
    let (code, _, _) = run(&["verify", "1", &format!("--export-graph={path_s}")]);
    assert_eq!(code, 0);
    let text = std::fs::read_to_string(&path).unwrap();
    let graph = from_graph6(&text).unwrap();
    assert_eq!(graph.n(), 8);
    assert_eq!(graph.valency(), Some(2));

    // the exported file feeds straight back into the aut command
    let (code, stdout, _) = run(&["aut", &path_s, "--out=json"]);
    assert_eq!(code, 0);
    let doc = json(&stdout);
    assert_eq!(doc["order"].as_str().unwrap(), "16");
    assert_eq!(doc["two_arc_transitive"], Value::Bool(true));
    std::fs::remove_file(&path).ok();
}

#[test]
fn aut_reads_both_formats() {
    let c8 = temp_path("c8.g6");
    std::fs::write(&c8, to_graph6(&cycle_graph(8).unwrap()) + "\n").unwrap();
    let (code, stdout, _) = run(&["aut", c8.to_str().unwrap(), "--out=json"]);
    assert_eq!(code, 0);
    let doc = json(&stdout);
    assert_eq!(doc["order"].as_str().unwrap(), "16");
    assert_eq!(doc["vertex_transitive"], Value::Bool(true));
    assert_eq!(doc["two_arc_transitive"], Value::Bool(true));
    std::fs::remove_file(&c8).ok();

    let q4 = temp_path("q4.edges");
    let cube = hypercube(4).unwrap();
    let lines: Vec<String> = cube
        .edges()
        .into_iter()
        .map(|(u, v)| format!("{u} {v}"))
        .collect();
    std::fs::write(&q4, lines.join("\n") + "\n").unwrap();
    let (code, stdout, _) = run(&["aut", q4.to_str().unwrap(), "--format=edges", "--out=json"]);
    assert_eq!(code, 0);
    let doc = json(&stdout);
    assert_eq!(doc["order"].as_str().unwrap(), "384");
    assert_eq!(doc["two_arc_transitive"], Value::Bool(true));
    std::fs::remove_file(&q4).ok();

    // a path is not regular, so the 2-arc question does not apply
    let p4 = temp_path("p4.g6");
    std::fs::write(&p4, to_graph6(&path_graph(4).unwrap()) + "\n").unwrap();
    let (code, stdout, _) = run(&["aut", p4.to_str().unwrap(), "--out=json"]);
    assert_eq!(code, 0);
    let doc = json(&stdout);
    assert_eq!(doc["order"].as_str().unwrap(), "2");
    assert_eq!(doc["vertex_transitive"], Value::Bool(false));
    assert_eq!(doc["two_arc_transitive"], Value::Null);
    std::fs::remove_file(&p4).ok();
}

#[test]
fn aut_rejects_bad_input() {
    let bad = temp_path("bad.g6");
    std::fs::write(&bad, "this is not graph6 ~~~\n").unwrap();
    let (code, _, stderr) = run(&["aut", bad.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(!stderr.is_empty());
    std::fs::remove_file(&bad).ok();

    let missing = temp_path("missing.g6");
    let (code, _, _) = run(&["aut", missing.to_str().unwrap()]);
    assert_eq!(code, 2);
}

fn strip_timings(doc: &mut Value) {
    match doc {
        Value::Object(map) => {
            map.remove("elapsed_ms");
            for v in map.values_mut() {
                strip_timings(v);
            }
            if map.contains_key("millis") {
                map.insert("millis".into(), Value::from(0));
            }
        }
        Value::Array(items) => {
            for v in items {
                strip_timings(v);
            }
        }
        _ => {}
    }
}

#[test]
fn reports_are_deterministic_for_fixed_inputs() {
    for args in [
        &["verify", "2", "--out=json", "--seed", "42"][..],
        &["basis", "12", "hyperbolic", "--out=json"][..],
        &["verify", "4", "--out=json", "--threads", "2"][..],
    ] {
        let (code_a, out_a, _) = run(args);
        let (code_b, out_b, _) = run(args);
        assert_eq!(code_a, code_b);
        let mut doc_a = json(&out_a);
        let mut doc_b = json(&out_b);
        strip_timings(&mut doc_a);
        strip_timings(&mut doc_b);
        assert_eq!(doc_a, doc_b, "args: {args:?}");
    }
    // the seed is echoed into the report
    let (_, stdout, _) = run(&["verify", "1", "--out=json", "--seed", "42"]);
    assert_eq!(json(&stdout)["seed"], Value::from(42));
}
