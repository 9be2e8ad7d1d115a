use std::fmt::Write as _;

use serde::Serialize;
use slicepd::resolution::BettiTable;
use slicepd::slicefamily::SupportCount;
use slicepd::witness::Check;

#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
pub struct CheckRow {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

impl From<Check> for CheckRow {
    fn from(c: Check) -> Self {
        CheckRow {
            name: c.name,
            pass: c.pass,
            detail: c.detail,
        }
    }
}

#[derive(Serialize, Debug, Clone, Copy, PartialEq, Eq)]
pub struct SupportRow {
    pub multiplicity: usize,
    pub distinct: usize,
}

impl From<SupportCount> for SupportRow {
    fn from(c: SupportCount) -> Self {
        SupportRow {
            multiplicity: c.multiplicity,
            distinct: c.distinct,
        }
    }
}

#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
pub struct BettiEntry {
    pub i: usize,
    pub j: i64,
    pub value: usize,
}

/// Result of one command; `checks` decides the exit status.
#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub shape: String,
    pub field: String,
    pub checks: Vec<CheckRow>,
    pub pd: Option<u64>,
    pub support: Option<SupportRow>,
    /// Command-specific lines: generators, bases, tables.
    pub output: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub betti: Option<Vec<BettiEntry>>,
}

impl Report {
    pub fn new(shape: impl ToString, field: impl ToString) -> Self {
        Report {
            shape: shape.to_string(),
            field: field.to_string(),
            checks: Vec::new(),
            pd: None,
            support: None,
            output: Vec::new(),
            betti: None,
        }
    }

    pub fn check(&mut self, name: impl Into<String>, pass: bool, detail: impl Into<String>) {
        self.checks.push(CheckRow {
            name: name.into(),
            pass,
            detail: detail.into(),
        });
    }

    pub fn line(&mut self, line: impl Into<String>) {
        self.output.push(line.into());
    }

    pub fn set_betti(&mut self, table: &BettiTable) {
        self.betti = Some(
            table
                .entries()
                .map(|((i, j), value)| BettiEntry { i, j, value })
                .collect(),
        );
    }

    /// All checks passed (and there was at least one).
    pub fn pass(&self) -> bool {
        !self.checks.is_empty() && self.checks.iter().all(|c| c.pass)
    }

    pub fn failed(&self) -> impl Iterator<Item = &CheckRow> {
        self.checks.iter().filter(|c| !c.pass)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "shape {} over {}", self.shape, self.field);
        for line in &self.output {
            let _ = writeln!(s, "{line}");
        }
        for c in &self.checks {
            let mark = if c.pass { "PASS" } else { "FAIL" };
            if c.detail.is_empty() {
                let _ = writeln!(s, "[{mark}] {}", c.name);
            } else {
                let _ = writeln!(s, "[{mark}] {}: {}", c.name, c.detail);
            }
        }
        if let Some(pd) = self.pd {
            let _ = writeln!(s, "pd = {pd}");
        }
        if let Some(sup) = self.support {
            let _ = writeln!(
                s,
                "support: multiplicity {}, distinct {}",
                sup.multiplicity, sup.distinct
            );
        }
        let passed = self.checks.iter().filter(|c| c.pass).count();
        let verdict = if self.pass() { "PASS" } else { "FAIL" };
        let _ = writeln!(
            s,
            "result: {verdict} ({passed}/{} checks)",
            self.checks.len()
        );
        for c in self.failed() {
            let _ = writeln!(s, "failed: {}", c.name);
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_schema_keys() {
        let mut r = Report::new("2x2", "QQ");
        r.check("a", true, "");
        let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        let mut keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
        keys.sort_unstable();
        assert_eq!(
            keys,
            ["checks", "field", "output", "pd", "shape", "support"]
        );
        assert_eq!(v["checks"][0]["name"], "a");
        assert!(r.to_json().ends_with('\n'));
    }

    #[test]
    fn empty_reports_fail() {
        let r = Report::new("2x2", "QQ");
        assert!(!r.pass());
        assert!(r.to_text().ends_with("(0/0 checks)\n"));
    }
}
