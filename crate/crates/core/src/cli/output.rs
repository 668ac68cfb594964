use serde::Serialize;

use crate::classes::{IdentityReport, MarginReport, Verdict};
use crate::format::json_number;
use crate::theorems::ConjectureReport;

/// Version of the report layout written by `verify`, `explore` and `identity`.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, Serialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum Body {
    Margin(MarginReport),
    Identity(IdentityReport),
    Conjecture(ConjectureReport),
    Error { message: String },
}

impl Body {
    /// Verdict used for the expectation test. The explorer has no verdict of
    /// its own; it passes when its real-parameter slice is consistent.
    pub fn verdict(&self) -> Option<Verdict> {
        match self {
            Body::Margin(r) => Some(r.verdict),
            Body::Identity(r) => Some(r.verdict),
            Body::Conjecture(r) => Some(if r.real_slice_consistent {
                Verdict::Pass
            } else {
                Verdict::Fail
            }),
            Body::Error { .. } => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Status {
    /// The verdict matches the registry's expectation.
    AsExpected,
    Unexpected,
    Error,
}

#[derive(Clone, Debug, Serialize)]
pub struct Record {
    pub check: String,
    pub expected_verdict: Verdict,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none", serialize_with = "ser_opt_ms")]
    pub wall_time_ms: Option<f64>,
    pub report: Body,
}

fn ser_opt_ms<S: serde::Serializer>(x: &Option<f64>, s: S) -> Result<S::Ok, S::Error> {
    match x {
        Some(v) => json_number(*v).serialize(s),
        None => s.serialize_none(),
    }
}

impl Record {
    pub fn new(check: &str, expected: Verdict, report: Body, wall_time_ms: Option<f64>) -> Self {
        let status = match report.verdict() {
            None => Status::Error,
            Some(v) if v == expected => Status::AsExpected,
            Some(_) => Status::Unexpected,
        };
        Self {
            check: check.to_string(),
            expected_verdict: expected,
            status,
            wall_time_ms,
            report,
        }
    }
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Summary {
    pub records: usize,
    pub as_expected: usize,
    pub unexpected: usize,
    pub errors: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub schema_version: u32,
    pub records: Vec<Record>,
    pub summary: Summary,
}

impl RunReport {
    pub fn new(records: Vec<Record>) -> Self {
        let mut summary = Summary {
            records: records.len(),
            ..Default::default()
        };
        for r in &records {
            match r.status {
                Status::AsExpected => summary.as_expected += 1,
                Status::Unexpected => summary.unexpected += 1,
                Status::Error => summary.errors += 1,
            }
        }
        Self {
            schema_version: SCHEMA_VERSION,
            records,
            summary,
        }
    }

    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("reports serialize");
        text.push('\n');
        text
    }

    /// Flattened view: one CSV line per record, conjecture rows expanded.
    pub fn to_csv(&self) -> String {
        use crate::format::sig17;
        let mut out = String::new();
        for r in &self.records {
            match &r.report {
                Body::Conjecture(c) => out.push_str(&c.to_csv()),
                body => {
                    if out.is_empty() {
                        out.push_str("check,check_id,verdict,status,value,tolerance\n");
                    }
                    let (id, value, tol) = match body {
                        Body::Margin(m) => (m.check_id.as_str(), sig17(m.min_margin), sig17(m.tolerance)),
                        Body::Identity(i) => (i.check_id.as_str(), sig17(i.max_abs_deviation), sig17(i.tolerance)),
                        _ => ("error", String::new(), String::new()),
                    };
                    let verdict = body.verdict().map_or("ERROR", Verdict::as_str);
                    out.push_str(&format!("{},{id},{verdict},{:?},{value},{tol}\n", r.check, r.status));
                }
            }
        }
        out
    }

    pub fn exit_code(&self) -> u8 {
        if self.summary.errors > 0 {
            3
        } else if self.summary.unexpected > 0 {
            1
        } else {
            0
        }
    }
}
