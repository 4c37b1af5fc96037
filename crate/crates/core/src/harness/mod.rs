//! Verification campaigns and their JSON reports.

mod campaigns;
mod report;

pub use campaigns::{
    default_corpus, matched_orbit_graph, verify_all, verify_an_arithmetic, verify_catalog,
    verify_lemma_divisor, verify_lemma_uniform, verify_main_theorem, HarnessOptions, DIVISOR_CASES,
};
pub use report::{
    CampaignReport, CampaignVerdict, Provenance, Record, RecordVerdict, SuiteReport, Timings,
    SCHEMA_VERSION,
};
