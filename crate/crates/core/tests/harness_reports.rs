use symdist::graph::{construct_example1, Graph};
use symdist::harness::{
    default_corpus, verify_all, verify_lemma_divisor, verify_main_theorem, CampaignVerdict, HarnessOptions,
    Provenance, RecordVerdict,
};

fn in_pool<T: Send>(threads: usize, f: impl FnOnce() -> T + Send) -> T {
    rayon::ThreadPoolBuilder::new().num_threads(threads).build().unwrap().install(f)
}

#[test]
fn verify_all_is_deterministic_across_workers_and_seeds() {
    let a = in_pool(1, || verify_all(&HarnessOptions::default()));
    let b = in_pool(4, || {
        verify_all(&HarnessOptions {
            schedule_seed: 99,
            ..HarnessOptions::default()
        })
    });
    assert_eq!(a.verdict, CampaignVerdict::Pass);
    assert_eq!(a.verdict.exit_code(), 0);
    assert_eq!(
        serde_json::to_string(&a.deterministic_json()).unwrap(),
        serde_json::to_string(&b.deterministic_json()).unwrap()
    );
}

#[test]
fn main_campaign_scope() {
    let corpus = vec![
        ("k2".to_string(), Graph::complete(2)),
        ("k3".to_string(), Graph::complete(3)),
        ("ex".to_string(), construct_example1(2, 6).unwrap()),
        ("p3".to_string(), Graph::path(3)),
    ];
    let r = verify_main_theorem(&corpus, &HarnessOptions::default());
    let verdict = |id: &str| r.records.iter().find(|x| x.id == id).unwrap().verdict;
    assert_eq!(verdict("k2"), RecordVerdict::OutOfScope);
    assert_eq!(verdict("k3"), RecordVerdict::OutOfScope);
    assert_eq!(verdict("ex"), RecordVerdict::Pass);
    assert_eq!(verdict("p3"), RecordVerdict::Pass);
    let example = r.records.iter().find(|x| x.id == "example1(2,6)").unwrap();
    assert_eq!(example.provenance, Provenance::Paper);
    assert_eq!(example.computed["d_index"], 2);
}

#[test]
fn corpus_ids_are_unique_and_complete() {
    let corpus = default_corpus(6);
    assert_eq!(corpus.len(), 1 + 2 + 4 + 11 + 34 + 156);
    let ids: std::collections::HashSet<_> = corpus.iter().map(|c| c.0.clone()).collect();
    assert_eq!(ids.len(), corpus.len());
}

#[test]
fn tiny_budget_gives_incomplete_not_pass() {
    let mut opts = HarnessOptions::default();
    opts.subgroup_budget.max_group_order = 100;
    let r = verify_lemma_divisor(&opts);
    assert_eq!(r.verdict, CampaignVerdict::Incomplete);
    assert_eq!(r.verdict.exit_code(), 2);
    assert!(r.counterexamples.is_empty());
    assert!(!r.incomplete.is_empty());
}
