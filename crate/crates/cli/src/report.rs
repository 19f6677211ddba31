//! Report assembly and rendering.

use serde::Serialize;
use serde_json::Value;
use su2_pfaffian::battery::CheckResult;
use su2_pfaffian::C64;

pub const SCHEMA: &str = "1";

#[derive(Debug, Serialize)]
pub struct Entry {
    pub name: String,
    pub anchor: String,
    pub status: &'static str,
    pub max_residual: f64,
    pub expected: String,
    pub observed: String,
    pub runtime_ms: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub details: Option<Value>,
}

impl Entry {
    pub fn passed(&self) -> bool {
        self.status == "pass"
    }
}

impl From<CheckResult> for Entry {
    fn from(r: CheckResult) -> Self {
        Entry {
            name: r.name,
            anchor: r.anchor,
            status: status(r.pass),
            max_residual: r.max_residual,
            expected: r.expected,
            observed: r.observed,
            runtime_ms: r.runtime_ms,
            details: None,
        }
    }
}

pub fn status(pass: bool) -> &'static str {
    if pass {
        "pass"
    } else {
        "fail"
    }
}

#[derive(Debug, Serialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Debug, Serialize)]
pub struct Report {
    pub schema: &'static str,
    pub command: &'static str,
    pub config: Value,
    pub checks: Vec<Entry>,
    pub summary: Summary,
}

impl Report {
    pub fn new(command: &'static str, config: Value, mut checks: Vec<Entry>) -> Self {
        checks.sort_by(|a, b| a.name.cmp(&b.name));
        let passed = checks.iter().filter(|c| c.passed()).count();
        let summary = Summary {
            total: checks.len(),
            passed,
            failed: checks.len() - passed,
        };
        Report {
            schema: SCHEMA,
            command,
            config,
            checks,
            summary,
        }
    }

    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_markdown(&self) -> String {
        let mut s = format!(
            "# su2pf {}\n\n{} of {} checks passed.\n\n| check | status | max residual | observed |\n|---|---|---|---|\n",
            self.command, self.summary.passed, self.summary.total
        );
        for c in &self.checks {
            s.push_str(&format!(
                "| {} | {} | {:.3e} | {} |\n",
                c.name,
                c.status.to_uppercase(),
                c.max_residual,
                c.observed.replace('|', "\\|")
            ));
        }
        s
    }
}

/// `[re, im]` for JSON output.
pub fn pair(z: C64) -> [f64; 2] {
    [z.re, z.im]
}
