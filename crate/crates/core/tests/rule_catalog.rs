use ringlab::harness::{default_corpus, run_rules, RuleStatus};

#[test]
fn default_corpus_passes_every_rule() {
    let corpus = default_corpus();
    let report = run_rules(&corpus, &[]).unwrap();
    println!("{}", report.table());
    assert!(report.is_clean(), "{}", report.table());
    for id in ["R5", "R12", "R13", "R14", "R15", "R16", "R24", "R25"] {
        assert!(report.rule(id).unwrap().exercised() > 0, "{id} is vacuous");
    }
    for id in ["R1", "R22"] {
        let r = report.rule(id).unwrap();
        assert_eq!(r.outcomes.len(), corpus.len());
        assert!(r.outcomes.iter().all(|o| matches!(o.status, RuleStatus::Pass { .. })));
    }
}
