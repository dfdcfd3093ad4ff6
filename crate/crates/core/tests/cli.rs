use std::collections::BTreeMap;
use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use minorforge::families::schrijver;
use minorforge::Graph;

fn bin() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_minorforge"));
    cmd.env_remove("MINORFORGE_LIMITS");
    cmd
}

fn fixture(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "fixtures", name].iter().collect();
    p.to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn run_with_stdin(args: &[&str], input: &[u8]) -> Output {
    let mut child = bin()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn temp_file(name: &str, body: &[u8]) -> String {
    let dir = std::env::temp_dir().join(format!("minorforge-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, body).unwrap();
    p.to_string_lossy().into_owned()
}

/// Reads back the subset of DOT that the exporter writes.
fn parse_dot(dot: &str) -> (BTreeMap<usize, String>, Vec<(usize, usize)>) {
    let mut labels = BTreeMap::new();
    let mut edges = Vec::new();
    for line in dot.lines().map(str::trim) {
        if let Some((lhs, rhs)) = line.split_once(" -- ") {
            let v = rhs.split(|c: char| !c.is_ascii_digit()).next().unwrap();
            edges.push((lhs.parse().unwrap(), v.parse().unwrap()));
        } else if let Some(start) = line.find("label=\"") {
            let id = line.split(' ').next().unwrap().parse().unwrap();
            let rest = &line[start + 7..];
            labels.insert(id, rest[..rest.find('"').unwrap()].to_string());
        }
    }
    (labels, edges)
}

#[test]
fn schrijver_dot_parses_back_to_c5() {
    let out = run(&["gen", "schrijver", "5", "2", "--format", "dot"]);
    assert!(out.status.success());
    let (labels, edges) = parse_dot(&stdout(&out));
    let g = schrijver(5, 2).unwrap();
    assert_eq!(edges, g.edges());
    assert_eq!(labels.len(), 5);
    for (v, text) in labels {
        let set: Vec<u32> = text
            .trim_matches(|c| c == '{' || c == '}')
            .split(',')
            .map(|x| x.parse().unwrap())
            .collect();
        assert_eq!(g.label(v).unwrap(), set.as_slice());
    }
    // a 5-cycle: every vertex has degree 2
    let parsed = Graph::new(5, edges).unwrap();
    assert!((0..5).all(|v| parsed.degree(v) == 2));
}

#[test]
fn schrijver_witness_pipes_into_verify() {
    let graph = run(&["gen", "schrijver", "14", "4"]);
    assert!(graph.status.success());
    let graph_file = temp_file("s14_4.json", &graph.stdout);
    let witness = run(&["witness", "schrijver", "14", "4"]);
    assert!(witness.status.success());
    assert!(String::from_utf8_lossy(&witness.stderr).contains("valid"));
    let verify = run_with_stdin(&["verify", "expansion", "--graph", &graph_file], &witness.stdout);
    assert_eq!(verify.status.code(), Some(0), "{}", String::from_utf8_lossy(&verify.stderr));
    assert_eq!(stdout(&verify).trim(), r#"{"valid":true,"violations":[]}"#);
}

#[test]
fn zig_of_k4_is_4() {
    let k4 = temp_file("k4.json", Graph::complete(4).to_json().as_bytes());
    let out = run(&["bounds", "--zig", &k4]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["value"], 4);
    assert_eq!(v["zigzag"].as_array().unwrap().len(), 4);
}

#[test]
fn bounds_from_stdin() {
    let c5 = std::fs::read(fixture("c5.json")).unwrap();
    let out = run_with_stdin(&["bounds", "--chi", "-"], &c5);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["value"], 3);
    let out = run(&["bounds", "--cd", &fixture("hypergraph.json")]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert!(v["value"].as_u64().unwrap() >= 1);
}

#[test]
fn decompose_then_verify_partition() {
    let c5 = fixture("c5.json");
    let p = run(&["decompose", &c5]);
    assert!(p.status.success());
    assert_eq!(
        stdout(&p).trim(),
        r#"{"parts":[[0,1,2,3],[4]],"sides":[[[0,2],[1,3]],[[4],[]]]}"#
    );
    let cert = temp_file("c5_partition.json", &p.stdout);
    assert_eq!(run(&["verify", "partition", "--graph", &c5, &cert]).status.code(), Some(0));
}

#[test]
fn dolnikov_witness_verifies_in_kneser_graph() {
    let h = fixture("hypergraph.json");
    let kg = run(&["gen", "from-json", &h]);
    assert!(kg.status.success());
    let kg_file = temp_file("kg.json", &kg.stdout);
    let m = run(&["witness", "dolnikov", &h]);
    assert!(m.status.success());
    let verify = run_with_stdin(&["verify", "minor", "--graph", &kg_file, "-"], &m.stdout);
    assert_eq!(verify.status.code(), Some(0));
}

#[test]
fn odd_hadwiger_witness_verifies() {
    let c5 = fixture("c5.json");
    let x = run(&["witness", "odd-hadwiger", &c5]);
    assert!(x.status.success());
    let cert = temp_file("c5_expansion.json", &x.stdout);
    assert_eq!(run(&["verify", "expansion", "--graph", &c5, &cert]).status.code(), Some(0));
    let dot = run(&["export", "dot", "--graph", &c5, "--expansion", &cert]);
    assert!(stdout(&dot).contains("style=bold"));
}

#[test]
fn corrupted_certificate_exits_1() {
    let out = run(&["verify", "expansion", "--graph", &fixture("c5.json"), &fixture("c5_bad_expansion.json")]);
    assert_eq!(out.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["valid"], false);
    assert_eq!(v["violations"][0]["check"], "tree_coloring");
}

#[test]
fn malformed_input_exits_2() {
    let bad = temp_file("bad.json", b"{\"n\":3,\"edges\":[[0,5]]}");
    assert_eq!(run(&["bounds", "--chi", &bad]).status.code(), Some(2));
    let junk = temp_file("junk.json", b"not json");
    assert_eq!(run(&["decompose", &junk]).status.code(), Some(2));
    assert_eq!(run(&["gen", "kneser", "3", "0"]).status.code(), Some(2));
    let out = bin()
        .args(["gen", "crown", "2"])
        .env("MINORFORGE_LIMITS", "{\"colours\": 3}")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn size_limit_exits_3_and_env_raises_it() {
    let petersen = temp_file("petersen.json", minorforge::families::kneser(5, 2).unwrap().to_json().as_bytes());
    assert_eq!(run(&["bounds", "--zig", &petersen]).status.code(), Some(3));
    let out = bin()
        .args(["bounds", "--zig", &petersen])
        .env("MINORFORGE_LIMITS", "{\"zig\": 10}")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert!(v["value"].as_u64().unwrap() <= 3);
}

#[test]
fn sweeps() {
    let ok = run(&["sweep", &fixture("sweep_small.json")]);
    assert_eq!(ok.status.code(), Some(0), "{}", stdout(&ok));
    let report: serde_json::Value = serde_json::from_str(&stdout(&ok)).unwrap();
    assert_eq!(report["passed"], true);
    assert_eq!(report["results"].as_array().unwrap().len(), 7);

    let bad = run(&["sweep", &fixture("sweep_corrupted.json")]);
    assert_eq!(bad.status.code(), Some(1));
    let report: serde_json::Value = serde_json::from_str(&stdout(&bad)).unwrap();
    assert_eq!(report["results"][0]["failures"], 0);
    assert_eq!(report["results"][1]["failures"], 1);
    assert!(String::from_utf8_lossy(&bad.stderr).contains("FAIL"));

    let config = temp_file("nonsense.json", br#"{"checks":[{"property":"zig_le_chi"}]}"#);
    assert_eq!(run(&["sweep", &config]).status.code(), Some(2));
}

#[test]
fn sweep_seed_flag_is_reproducible() {
    let config = temp_file(
        "seeded.json",
        br#"{"checks":[{"property":"dolnikov","random":15,"max_ground":5,"max_edges":6}]}"#,
    );
    let a = run(&["sweep", &config, "--seed", "1"]);
    let b = run(&["sweep", &config, "--seed", "1"]);
    assert_eq!(a.stdout, b.stdout);
    let report: serde_json::Value = serde_json::from_str(&stdout(&a)).unwrap();
    assert_eq!(report["seed"], 1);
}

#[test]
fn join_of_generated_graphs() {
    let a = temp_file("k2.json", Graph::complete(2).to_json().as_bytes());
    let b = temp_file("e3.json", Graph::empty(3).to_json().as_bytes());
    let out = run(&["gen", "join", &a, &b]);
    let g = Graph::from_json(stdout(&out).trim()).unwrap();
    assert_eq!(g.order(), 5);
    assert_eq!(g.edge_count(), 1 + 6);
}
