use std::process::{Command, Output};

use ringlab::harness::{AnalysisReport, RuleReport};
use ringlab::invariants::RadicalReport;
use ringlab::properties::PropertyVerdict;

fn ringlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ringlab"))
        .env_remove("RINGLAB_CACHE")
        .args(args)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn prop_exit_codes() {
    let o = ringlab(&["prop", "nj_symmetric", "M(2, Z(2))"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("a=1"), "{}", stdout(&o));
    assert_eq!(ringlab(&["prop", "nj_symmetric", "T(2, Z(4))"]).status.code(), Some(0));
    assert_eq!(ringlab(&["prop", "nope", "Z(2)"]).status.code(), Some(2));
    let o = ringlab(&["prop", "nj_symmetric", "T(2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("offset 4"));
}

#[test]
fn size_errors_exit_two() {
    let o = ringlab(&["--max-order", "100", "radical", "M(2, Z(4))"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("exceeds"));
}

#[test]
fn json_outputs_round_trip() {
    let o = ringlab(&["--json", "prop", "symmetric", "T(2, Z(2))"]);
    let v: PropertyVerdict = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(!v.holds && v.witness.is_some());

    let o = ringlab(&["--json", "radical", "Z(12)"]);
    let r = RadicalReport::from_json(&stdout(&o)).unwrap();
    assert_eq!(r.jacobson.to_vec(), vec![0, 6]);

    let o = ringlab(&["--json", "--no-cache", "analyze", "Z(4)"]);
    let a = AnalysisReport::from_json(&stdout(&o)).unwrap();
    assert_eq!(a.name, "Z(4)");
    assert_eq!(a.to_json().trim(), stdout(&o).trim());

    let o = ringlab(&["--json", "verify", "--rules", "R1,R24"]);
    assert_eq!(o.status.code(), Some(0));
    let report = RuleReport::from_json(&stdout(&o)).unwrap();
    assert_eq!(report.rules.len(), 2);
    assert_eq!(report.to_json().trim(), stdout(&o).trim());
}

#[test]
fn cache_hit_matches_miss() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    let miss = ringlab(&["--json", "--cache", d, "analyze", "CD(2, Z(4))"]);
    assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 1);
    let hit = ringlab(&["--json", "--cache", d, "analyze", "CD(2, Z(4))"]);
    let fresh = ringlab(&["--json", "--no-cache", "analyze", "CD(2, Z(4))"]);
    assert_eq!(miss.stdout, hit.stdout);
    assert_eq!(fresh.stdout, hit.stdout);

    let via_env = Command::new(env!("CARGO_BIN_EXE_ringlab"))
        .env("RINGLAB_CACHE", d)
        .args(["--json", "analyze", "CD(2, Z(4))"])
        .output()
        .unwrap();
    assert_eq!(via_env.stdout, hit.stdout);
}

#[test]
fn verify_with_corpus_file_and_unknown_rule() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("corpus.txt");
    std::fs::write(&path, "# two rings\nZ(4)\nM(2, Z(2))\n@random seed=3 count=2\n").unwrap();
    let o = ringlab(&["--json", "verify", "--corpus", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let report = RuleReport::from_json(&stdout(&o)).unwrap();
    assert_eq!(report.corpus.len(), 4);

    assert_eq!(ringlab(&["verify", "--rules", "R0"]).status.code(), Some(2));
}

#[test]
fn search_found_and_exhausted() {
    let o = ringlab(&["search", "--hyp", "melt", "--not", "nj_symmetric"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("found M(2, Z(2))"));
    let o = ringlab(&["search", "--hyp", "symmetric", "--not", "nj_symmetric"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("exhausted("));
    let o = ringlab(&["search", "--hyp", "nj_symmetric", "--not", "symmetric", "--budget", "5"]);
    assert_eq!(stdout(&o).trim(), "exhausted(5): no ring found");
}

#[test]
fn ideals_and_truncation() {
    let o = ringlab(&["--json", "ideals", "M(2, Z(2))"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["left"]["count"], 5);
    assert_eq!(v["two_sided"]["count"], 2);
    let o = ringlab(&["ideals", "M(2, Z(2))", "--cap", "2"]);
    assert_eq!(o.status.code(), Some(2));
}
