//! End-to-end runs of the `prim5` binary.

use std::path::PathBuf;
use std::process::{Command, Output};

fn prim5(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_prim5")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8 output")
}

fn suz8_fixture() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/tests/data/suz8.gens")
}

#[test]
fn construct_psl2_19_on_171_points() {
    let o = prim5(&["construct", "--table", "1", "--row", "9"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "degree 171, order 3420, stabilizer D10(20)");
}

#[test]
fn construct_needs_prime_for_families() {
    let o = prim5(&["construct", "--table", "2", "--row", "9"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn bad_row_and_bad_prime_are_usage_errors() {
    assert_eq!(prim5(&["construct", "--table", "1", "--row", "99"]).status.code(), Some(2));
    assert_eq!(prim5(&["construct", "--table", "2", "--row", "9", "--p", "29"]).status.code(), Some(2));
    assert_eq!(prim5(&["modrep", "--target", "row12", "--p", "11"]).status.code(), Some(2));
    assert_eq!(prim5(&["no-such-command"]).status.code(), Some(2));
}

#[test]
fn clebsch_graph_export() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("clebsch.el");
    let o = prim5(&["graph", "--table", "3", "--row", "1", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("vertices 16, edges 40"), "{text}");
    assert!(text.contains("SRG(16,5,0,2)"), "{text}");
    assert!(text.contains("automorphism group order 1920"), "{text}");
    let edges = std::fs::read_to_string(&path).unwrap();
    let mut lines = edges.lines();
    assert_eq!(lines.next(), Some("16 40"));
    assert_eq!(lines.count(), 40);
}

#[test]
fn refused_graph_row_is_not_a_usage_error() {
    let o = prim5(&["graph", "--table", "3", "--row", "7"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn norm_quotient_of_psl2_on_a5_cosets() {
    let o = prim5(&["normquot", "--family", "psl2-a5", "--p", "29"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("1 (no length-5 suborbit)"));
    let o = prim5(&["normquot", "--family", "psl2-a5", "--p", "31"]);
    let text = stdout(&o);
    assert!(text.starts_with("2 "), "{text}");
    assert!(text.contains("normalizer: 2"), "{text}");
}

#[test]
fn suborbits_and_digraphs() {
    let o = prim5(&["suborbits", "--table", "1", "--row", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("length      5"));
    let o = prim5(&["digraphs", "--table", "1", "--row", "1"]);
    assert!(stdout(&o).starts_with("1 orbital digraphs of out-valency 5"));
}

#[test]
fn modrep_reports_are_json_lines() {
    let o = prim5(&["modrep", "--target", "lemma61", "--p", "7"]);
    assert_eq!(o.status.code(), Some(0));
    let lines: Vec<serde_json::Value> =
        stdout(&o).lines().map(|l| serde_json::from_str(l).expect("json line")).collect();
    assert_eq!(lines.len(), 2);
    assert_eq!(lines[0]["checkId"], "CENT.lemma61.p7");
    assert_eq!(lines[0]["measured.structure"], "Z8xZ2");
    assert!(lines.iter().all(|l| l["status"] == "pass"));
}

#[test]
fn verify_is_deterministic_without_timing() {
    let run = || {
        let o = prim5(&["verify", "--select", "T1.0", "--select", "NORMA4", "--omit-timing", "--jobs", "2"]);
        assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
        stdout(&o)
    };
    let a = run();
    assert_eq!(a, run());
    for line in a.lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert!(v.get("runtimeMs").is_none());
        assert_ne!(v["status"], "fail", "{line}");
    }
}

#[test]
fn verify_writes_file_and_summary() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.jsonl");
    let o = prim5(&[
        "verify",
        "--select",
        "T1.10",
        "--suz8",
        suz8_fixture().to_str().unwrap(),
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&o.stderr).contains("1 pass, 0 fail, 0 skip"));
    let v: serde_json::Value = serde_json::from_str(std::fs::read_to_string(&path).unwrap().trim()).unwrap();
    assert_eq!(v["checkId"], "T1.10");
    assert!(v.get("runtimeMs").is_some());
}

#[test]
fn empty_selection_succeeds() {
    let o = prim5(&["verify", "--select", "NOTHING"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).is_empty());
}
