use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_radio-block"))
        .args(args)
        .output()
        .unwrap()
}

fn json(out: &Output) -> Value {
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).unwrap()
}

fn file(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn path_file(dir: &TempDir, n: usize) -> PathBuf {
    let mut text = format!("{n}\n");
    for i in 1..n {
        text += &format!("{} {i}\n", i - 1);
    }
    file(dir, &format!("p{n}.graph"), &text)
}

#[test]
fn lb_of_p4() {
    let dir = TempDir::new().unwrap();
    let out = bin(&["lb", s(&path_file(&dir, 4))]);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "{\"lb\":5}\n");
}

#[test]
fn exact_of_p5() {
    let dir = TempDir::new().unwrap();
    let v = json(&bin(&["exact", s(&path_file(&dir, 5))]));
    assert_eq!(
        (v["rn"].as_u64(), v["lb"].as_u64(), v["gap"].as_u64()),
        (Some(10), Some(9), Some(1))
    );
}

#[test]
fn exact_threads_do_not_change_the_result() {
    let dir = TempDir::new().unwrap();
    let g = path_file(&dir, 7);
    let one = bin(&["exact", s(&g), "--threads", "1"]);
    let four = bin(&["exact", s(&g), "--threads", "4"]);
    assert_eq!(json(&one), json(&four));
    assert_eq!(one.stdout, four.stdout);
}

#[test]
fn exact_respects_max_p() {
    let dir = TempDir::new().unwrap();
    let out = bin(&["exact", s(&path_file(&dir, 6)), "--max-p", "5"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("max_p"));
}

#[test]
fn order_extended_star_shorthand_and_json() {
    let a = json(&bin(&[
        "order",
        "--spec",
        "extended_star",
        "m=3",
        "k=2",
        "h=2",
        "n=4",
    ]));
    assert_eq!(a["span"], 82);
    assert_eq!(a["certificate"]["verdict"]["status"], "certified");
    let b = bin(&[
        "order",
        "--spec",
        r#"{"family":"extended_star","m":3,"k":2,"h":2,"n":4}"#,
    ]);
    assert_eq!(a, json(&b));
}

#[test]
fn certify_reports_each_condition() {
    let dir = TempDir::new().unwrap();
    let g = path_file(&dir, 4);
    let good = json(&bin(&[
        "certify",
        s(&g),
        "--ordering",
        s(&file(&dir, "a", "1 3 0 2")),
    ]));
    assert_eq!(good["verdict"]["status"], "certified");
    let bad = json(&bin(&[
        "certify",
        s(&g),
        "--ordering",
        s(&file(&dir, "b", "0 3 1 2")),
    ]));
    assert_eq!(bad["cond_a"]["ok"], false);
    assert_ne!(bad["verdict"]["status"], "certified");
}

#[test]
fn generate_round_trip() {
    let dir = TempDir::new().unwrap();
    let out = dir.path().join("s.graph");
    json(&bin(&[
        "generate",
        "--spec",
        "path_of_cliques",
        "h=2",
        "n=3",
        "-o",
        s(&out),
    ]));
    let names: Vec<String> =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("s.names.json")).unwrap())
            .unwrap();
    let stdout = bin(&["generate", "--spec", "path_of_cliques", "h=2", "n=3"]).stdout;
    assert_eq!(std::fs::read(&out).unwrap(), stdout);
    let text = String::from_utf8(stdout).unwrap();
    assert_eq!(
        radio_block::Graph::parse(&text).unwrap().order(),
        names.len()
    );
}

#[test]
fn random_generation_is_seeded() {
    let a = bin(&["generate", "--random", "12", "--seed", "9"]);
    let b = bin(&["generate", "--random", "12", "--seed", "9"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(bin(&["generate", "--random", "12"]).status.code(), Some(2));
}

#[test]
fn transfers_between_p4_and_its_line_graph() {
    let dir = TempDir::new().unwrap();
    let t = path_file(&dir, 4);
    let fwd = json(&bin(&[
        "transfer",
        s(&t),
        "--ordering",
        s(&file(&dir, "o", "1 3 0 2")),
        "--direction",
        "to-line",
    ]));
    assert_eq!(
        (fwd["case"].as_str(), fwd["span"].as_u64()),
        (Some("line-iii"), Some(3))
    );
    let back = json(&bin(&[
        "transfer",
        s(&t),
        "--ordering",
        s(&file(&dir, "l", "1 0 2")),
        "--direction",
        "to-tree",
    ]));
    assert_eq!(back["span"], 5);
    assert_eq!(back["valid"], true);
}

#[test]
fn linegraph_writes_graph_file() {
    let dir = TempDir::new().unwrap();
    let out = dir.path().join("l.graph");
    let v = json(&bin(&["linegraph", s(&path_file(&dir, 5)), "-o", s(&out)]));
    assert_eq!(v["order"], 4);
    assert_eq!(std::fs::read_to_string(out).unwrap(), "4\n0 1\n1 2\n2 3\n");
}

#[test]
fn analyze_is_deterministic_and_pretty_is_plain_text() {
    let dir = TempDir::new().unwrap();
    let g = path_file(&dir, 5);
    let a = bin(&["analyze", s(&g)]);
    assert_eq!(a.stdout, bin(&["analyze", s(&g)]).stdout);
    assert_eq!(json(&a)["epsilon"], 1);
    let pretty = String::from_utf8(bin(&["--pretty", "analyze", s(&g)]).stdout).unwrap();
    assert!(pretty
        .lines()
        .any(|l| l.split_whitespace().collect::<Vec<_>>() == ["epsilon", "1"]));
    assert!(!pretty.contains('\x1b'));
}

#[test]
fn exit_codes() {
    let dir = TempDir::new().unwrap();
    let c4 = file(&dir, "c4", "4\n0 1\n1 2\n2 3\n3 0\n");
    let out = bin(&["lb", s(&c4)]);
    assert_eq!(out.status.code(), Some(1));
    let msg = String::from_utf8(out.stderr).unwrap();
    assert_eq!(msg.lines().count(), 1);
    assert!(msg.contains("not a block graph"));

    let k3 = file(&dir, "k3", "3\n0 1\n1 2\n0 2\n");
    assert_eq!(bin(&["lb", s(&k3)]).status.code(), Some(1));
    let bad = file(&dir, "bad", "3\n0 1\n0 1\n");
    assert_eq!(bin(&["analyze", s(&bad)]).status.code(), Some(1));
    assert_eq!(bin(&["lb", "/no/such/file"]).status.code(), Some(1));
    assert_eq!(bin(&["lb"]).status.code(), Some(2));
    assert_eq!(bin(&["frobnicate"]).status.code(), Some(2));
    let t = path_file(&dir, 4);
    assert_eq!(
        bin(&["transfer", s(&t), "--ordering", s(&t), "--direction", "up"])
            .status
            .code(),
        Some(2)
    );
}
