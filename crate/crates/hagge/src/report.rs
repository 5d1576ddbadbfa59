//! JSON serialization of check reports.

use hagge_core::verify::{CheckRecord, CheckReport};
use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct JsonInstance {
    pub sa: String,
    pub sb: String,
    pub sc: String,
    pub point: [String; 3],
    pub realization: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct JsonCheck {
    pub id: String,
    pub name: String,
    pub status: String,
    pub detail: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct JsonSummary {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct JsonReport {
    pub instance: JsonInstance,
    pub checks: Vec<JsonCheck>,
    pub summary: JsonSummary,
}

impl From<&CheckRecord> for JsonCheck {
    fn from(c: &CheckRecord) -> Self {
        JsonCheck {
            id: c.id.to_string(),
            name: c.name.to_string(),
            status: c.status.as_str().to_string(),
            detail: c.detail.clone(),
        }
    }
}

impl JsonReport {
    /// One report from the main checklist plus any extra records, such as
    /// closed-form comparisons.
    pub fn new(report: &CheckReport, extra: &[CheckRecord]) -> Self {
        let i = &report.instance;
        let checks: Vec<JsonCheck> = report
            .checks
            .iter()
            .chain(extra)
            .map(JsonCheck::from)
            .collect();
        let count = |s: &str| checks.iter().filter(|c| c.status == s).count();
        let summary = JsonSummary {
            pass: count("pass"),
            fail: count("fail"),
            skipped: count("skipped"),
        };
        JsonReport {
            instance: JsonInstance {
                sa: i.sa.clone(),
                sb: i.sb.clone(),
                sc: i.sc.clone(),
                point: i.point.clone(),
                realization: i.realization.to_string(),
            },
            checks,
            summary,
        }
    }

    pub fn all_passed(&self) -> bool {
        self.summary.fail == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// A short human-readable summary.
    pub fn describe(&self) -> String {
        let mut out = format!(
            "triangle ({}, {}, {}), point ({}), {}: {} pass, {} fail, {} skipped\n",
            self.instance.sa,
            self.instance.sb,
            self.instance.sc,
            self.instance.point.join(", "),
            self.instance.realization,
            self.summary.pass,
            self.summary.fail,
            self.summary.skipped
        );
        for c in &self.checks {
            out.push_str(&format!("  {:<4} {:<7} {}", c.id, c.status, c.name));
            if !c.detail.is_empty() {
                out.push_str(&format!(" [{}]", c.detail));
            }
            out.push('\n');
        }
        out
    }
}
