use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::Duration;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    Fail,
    ReportOnly,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::ReportOnly => "report-only",
        }
    }
}

/// One check on one catalog entry.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub id: String,
    pub check: String,
    pub verdict: Verdict,
    /// Truncation order for series checks; absent for symbolic ones.
    pub order: Option<usize>,
    pub witness: Option<String>,
    /// Parameter name to its specialized value, or `"symbolic"`.
    pub params: BTreeMap<String, String>,
    pub detail: String,
}

/// Records in catalog order, with wall-clock times kept apart so the
/// records themselves are reproducible byte for byte.
#[derive(Clone, Debug, Default)]
pub struct Report {
    pub records: Vec<CheckRecord>,
    pub runtimes: Vec<Duration>,
}

#[derive(Serialize)]
struct JsonReport<'a> {
    records: &'a [CheckRecord],
}

impl Report {
    pub fn push(&mut self, record: CheckRecord, runtime: Duration) {
        self.records.push(record);
        self.runtimes.push(runtime);
    }

    pub fn extend(&mut self, other: Report) {
        self.records.extend(other.records);
        self.runtimes.extend(other.runtimes);
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckRecord> {
        self.records.iter().filter(|r| r.verdict == Verdict::Fail)
    }

    pub fn passed(&self) -> bool {
        self.failures().next().is_none()
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&JsonReport { records: &self.records })
            .expect("report serializes");
        s.push('\n');
        s
    }

    /// Fixed-width table; witnesses are listed after it.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "{:<9} {:<15} {:<12} {:<6} detail", "id", "check", "verdict", "order");
        for r in &self.records {
            let order = r.order.map(|n| n.to_string()).unwrap_or_else(|| "-".into());
            let _ = writeln!(
                s,
                "{:<9} {:<15} {:<12} {:<6} {}",
                r.id,
                r.check,
                r.verdict.as_str(),
                order,
                r.detail
            );
        }
        let failed: Vec<&CheckRecord> =
            self.records.iter().filter(|r| r.verdict == Verdict::Fail && r.witness.is_some()).collect();
        if !failed.is_empty() {
            s.push_str("\nwitnesses:\n");
            for r in failed {
                let _ = writeln!(s, "[{} {}] {}", r.id, r.check, r.witness.as_deref().unwrap_or(""));
            }
        }
        let counts = |v: Verdict| self.records.iter().filter(|r| r.verdict == v).count();
        let _ = writeln!(
            s,
            "\n{} pass, {} fail, {} report-only",
            counts(Verdict::Pass),
            counts(Verdict::Fail),
            counts(Verdict::ReportOnly)
        );
        s
    }

    pub fn timings(&self) -> String {
        let mut s = String::new();
        for (r, t) in self.records.iter().zip(&self.runtimes) {
            let _ = writeln!(s, "{:<9} {:<15} {:>10.3} ms", r.id, r.check, t.as_secs_f64() * 1e3);
        }
        s
    }
}
