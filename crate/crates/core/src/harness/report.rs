use serde::Serialize;
use serde_json::Value;

pub const SCHEMA_VERSION: u32 = 1;

/// Where an expected value comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    /// Quoted from the source result being checked.
    Paper,
    /// Computed independently by this crate or by hand.
    Derived,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RecordVerdict {
    Pass,
    Fail,
    OutOfScope,
    /// A budget ran out before an answer was reached.
    Unknown,
}

#[derive(Clone, Debug, Serialize)]
pub struct Record {
    pub id: String,
    pub provenance: Provenance,
    pub computed: Value,
    pub expected: Value,
    pub verdict: RecordVerdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Record {
    /// A record that passes iff `computed == expected`.
    pub fn compare(id: impl Into<String>, provenance: Provenance, computed: Value, expected: Value) -> Self {
        let verdict = if computed == expected {
            RecordVerdict::Pass
        } else {
            RecordVerdict::Fail
        };
        Record {
            id: id.into(),
            provenance,
            computed,
            expected,
            verdict,
            note: None,
        }
    }

    pub fn with_verdict(mut self, verdict: RecordVerdict) -> Self {
        self.verdict = verdict;
        self
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CampaignVerdict {
    Pass,
    Counterexample,
    Incomplete,
}

impl CampaignVerdict {
    pub fn exit_code(self) -> i32 {
        match self {
            CampaignVerdict::Pass => 0,
            CampaignVerdict::Counterexample => 1,
            CampaignVerdict::Incomplete => 2,
        }
    }

    fn worst(self, other: Self) -> Self {
        use CampaignVerdict::*;
        match (self, other) {
            (Counterexample, _) | (_, Counterexample) => Counterexample,
            (Incomplete, _) | (_, Incomplete) => Incomplete,
            _ => Pass,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CampaignReport {
    pub schema_version: u32,
    pub campaign: String,
    pub verdict: CampaignVerdict,
    pub summary: Value,
    /// Ids of failing records.
    pub counterexamples: Vec<String>,
    /// Ids of records left undecided by a budget.
    pub incomplete: Vec<String>,
    pub records: Vec<Record>,
    /// Wall-clock seconds; excluded from determinism comparisons.
    pub timings: Timings,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Timings {
    pub seconds: f64,
}

impl CampaignReport {
    /// Sorts records by id and derives the verdict and the id lists.
    pub fn new(campaign: &str, mut records: Vec<Record>, summary: Value, seconds: f64) -> Self {
        records.sort_by_key(|a| natural_key(&a.id));
        let ids = |v: RecordVerdict| -> Vec<String> {
            records.iter().filter(|r| r.verdict == v).map(|r| r.id.clone()).collect()
        };
        let counterexamples = ids(RecordVerdict::Fail);
        let incomplete = ids(RecordVerdict::Unknown);
        let verdict = if !counterexamples.is_empty() {
            CampaignVerdict::Counterexample
        } else if !incomplete.is_empty() {
            CampaignVerdict::Incomplete
        } else {
            CampaignVerdict::Pass
        };
        CampaignReport {
            schema_version: SCHEMA_VERSION,
            campaign: campaign.into(),
            verdict,
            summary,
            counterexamples,
            incomplete,
            records,
            timings: Timings { seconds },
        }
    }

    pub fn count(&self, v: RecordVerdict) -> usize {
        self.records.iter().filter(|r| r.verdict == v).count()
    }

    /// The report as JSON with the timing fields removed.
    pub fn deterministic_json(&self) -> Value {
        let mut v = serde_json::to_value(self).unwrap();
        v.as_object_mut().unwrap().remove("timings");
        v
    }
}

/// Several campaigns run together.
#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub schema_version: u32,
    pub verdict: CampaignVerdict,
    pub campaigns: Vec<CampaignReport>,
}

impl SuiteReport {
    pub fn new(campaigns: Vec<CampaignReport>) -> Self {
        let verdict = campaigns
            .iter()
            .fold(CampaignVerdict::Pass, |acc, c| acc.worst(c.verdict));
        SuiteReport {
            schema_version: SCHEMA_VERSION,
            verdict,
            campaigns,
        }
    }

    pub fn deterministic_json(&self) -> Value {
        let mut v = serde_json::to_value(self).unwrap();
        for c in v["campaigns"].as_array_mut().unwrap() {
            c.as_object_mut().unwrap().remove("timings");
        }
        v
    }
}

/// Orders ids so that embedded numbers compare numerically ("n7-g10" after "n7-g9").
fn natural_key(id: &str) -> Vec<(String, u64)> {
    let mut out = Vec::new();
    let mut text = String::new();
    let mut num: Option<u64> = None;
    for ch in id.chars() {
        if let Some(d) = ch.to_digit(10) {
            num = Some(num.unwrap_or(0).saturating_mul(10).saturating_add(d as u64));
        } else {
            if let Some(v) = num.take() {
                out.push((std::mem::take(&mut text), v));
            }
            text.push(ch);
        }
    }
    out.push((text, num.unwrap_or(0)));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn verdict_and_ordering() {
        let records = vec![
            Record::compare("g10", Provenance::Derived, json!(2), json!(2)),
            Record::compare("g9", Provenance::Paper, json!(3), json!(2)),
            Record::compare("g2", Provenance::Derived, json!(null), json!(2)).with_verdict(RecordVerdict::Unknown),
        ];
        let r = CampaignReport::new("t", records, json!({}), 0.5);
        let ids: Vec<_> = r.records.iter().map(|r| r.id.as_str()).collect();
        assert_eq!(ids, ["g2", "g9", "g10"]);
        assert_eq!(r.verdict, CampaignVerdict::Counterexample);
        assert_eq!(r.verdict.exit_code(), 1);
        assert_eq!(r.incomplete, ["g2"]);
        assert!(r.deterministic_json().get("timings").is_none());
    }

    #[test]
    fn suite_takes_the_worst() {
        let pass = CampaignReport::new("a", vec![], json!({}), 0.0);
        let unknown = CampaignReport::new(
            "b",
            vec![Record::compare("x", Provenance::Derived, json!(1), json!(1)).with_verdict(RecordVerdict::Unknown)],
            json!({}),
            0.0,
        );
        assert_eq!(SuiteReport::new(vec![pass.clone()]).verdict.exit_code(), 0);
        assert_eq!(SuiteReport::new(vec![pass, unknown]).verdict.exit_code(), 2);
    }
}
