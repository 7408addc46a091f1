//! Machine-readable verification reports.

use std::time::Instant;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
    Limitation,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Check {
    pub id: String,
    pub anchor: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    /// Wall time of the check; not serialized, so report content stays
    /// deterministic for fixed inputs.
    #[serde(skip, default)]
    pub millis: u64,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Report {
    pub entry: String,
    pub suite: String,
    pub degree: usize,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(entry: &str, suite: &str, degree: usize) -> Self {
        Report { entry: entry.into(), suite: suite.into(), degree, checks: Vec::new() }
    }

    /// Runs a check closure; Ok(()) is a pass, Err(witness) a failure.
    pub fn check(&mut self, id: &str, anchor: &str, f: impl FnOnce() -> Result<(), String>) {
        let start = Instant::now();
        let (status, witness) = match f() {
            Ok(()) => (Status::Pass, None),
            Err(w) => (Status::Fail, Some(w)),
        };
        self.checks.push(Check {
            id: id.into(),
            anchor: anchor.into(),
            status,
            witness,
            millis: start.elapsed().as_millis() as u64,
        });
    }

    pub fn push(&mut self, id: &str, anchor: &str, status: Status, witness: Option<String>) {
        self.checks.push(Check { id: id.into(), anchor: anchor.into(), status, witness, millis: 0 });
    }

    /// Canonical ordering: report content must not depend on scheduling.
    pub fn finalize(&mut self) {
        self.checks.sort_by(|a, b| a.id.cmp(&b.id));
    }

    pub fn failed(&self) -> usize {
        self.checks.iter().filter(|c| c.status == Status::Fail).count()
    }

    pub fn passed(&self) -> usize {
        self.checks.iter().filter(|c| c.status == Status::Pass).count()
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "suite {} for {} (degree bound {})\n",
            self.suite, self.entry, self.degree
        ));
        for c in &self.checks {
            let s = match c.status {
                Status::Pass => "pass",
                Status::Fail => "FAIL",
                Status::Skipped => "skip",
                Status::Limitation => "limitation",
            };
            out.push_str(&format!("  [{}] {} ({})", s, c.id, c.anchor));
            if let Some(w) = &c.witness {
                out.push_str(&format!(" -- {}", w));
            }
            out.push('\n');
        }
        out.push_str(&format!(
            "  {} passed, {} failed, {} total\n",
            self.passed(),
            self.failed(),
            self.checks.len()
        ));
        out
    }

    pub fn render_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip_is_stable() {
        let mut r = Report::new("taft", "hopf", 6);
        r.check("a1", "x", || Ok(()));
        r.check("a0", "y", || Err("w".into()));
        r.finalize();
        let j = r.render_json();
        let back: Report = serde_json::from_str(&j).unwrap();
        assert_eq!(serde_json::to_string(&back).unwrap(), serde_json::to_string(&r).unwrap());
        assert_eq!(back.checks[0].id, "a0");
        assert_eq!(r.failed(), 1);
    }
}
