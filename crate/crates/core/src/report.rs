//! Verification reports and their text, CSV and JSON renderings.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::exactalg::parse_rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Error,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Error => "error",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseResult {
    pub params: BTreeMap<String, String>,
    pub status: Status,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub errored: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct SuiteReport {
    pub suite: String,
    pub cases: Vec<CaseResult>,
    pub summary: Summary,
    pub runtime_millis: u64,
}

/// Orders parameter values numerically when both parse as rationals.
fn compare_values(a: &str, b: &str) -> Ordering {
    match (parse_rational(a), parse_rational(b)) {
        (Some(x), Some(y)) => x.cmp(&y),
        _ => a.cmp(b),
    }
}

fn compare_params(a: &BTreeMap<String, String>, b: &BTreeMap<String, String>) -> Ordering {
    for ((ka, va), (kb, vb)) in a.iter().zip(b.iter()) {
        let ord = ka.cmp(kb).then_with(|| compare_values(va, vb));
        if ord != Ordering::Equal {
            return ord;
        }
    }
    a.len().cmp(&b.len())
}

impl SuiteReport {
    /// Sorts the cases by their parameters and tallies them.
    pub fn new(suite: &str, mut cases: Vec<CaseResult>, runtime_millis: u64) -> Self {
        cases.sort_by(|a, b| compare_params(&a.params, &b.params).then_with(|| a.detail.cmp(&b.detail)));
        let count = |s: Status| cases.iter().filter(|c| c.status == s).count();
        let summary = Summary {
            total: cases.len(),
            passed: count(Status::Pass),
            failed: count(Status::Fail),
            errored: count(Status::Error),
        };
        SuiteReport {
            suite: suite.to_string(),
            cases,
            summary,
            runtime_millis,
        }
    }

    pub fn is_success(&self) -> bool {
        self.summary.failed == 0 && self.summary.errored == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Table,
    Csv,
    Json,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "table" => Ok(Format::Table),
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            other => Err(format!("unknown format `{other}` (expected table, csv or json)")),
        }
    }
}

fn params_inline(params: &BTreeMap<String, String>) -> String {
    params
        .iter()
        .map(|(k, v)| format!("{k}={v}"))
        .collect::<Vec<_>>()
        .join(" ")
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// Renders one or more reports. JSON output is a single object for one
/// report and an array otherwise.
pub fn render_reports(reports: &[SuiteReport], format: Format) -> String {
    let mut out = String::new();
    match format {
        Format::Json => {
            out = if reports.len() == 1 {
                reports[0].to_json()
            } else {
                serde_json::to_string_pretty(reports).expect("reports serialize")
            };
            out.push('\n');
        }
        Format::Csv => {
            out.push_str("suite,status,params,detail\n");
            for r in reports {
                for c in &r.cases {
                    let _ = writeln!(
                        out,
                        "{},{},{},{}",
                        r.suite,
                        c.status.as_str(),
                        csv_field(&params_inline(&c.params)),
                        csv_field(&c.detail)
                    );
                }
            }
        }
        Format::Table => {
            for r in reports {
                let _ = writeln!(out, "== {} ==", r.suite);
                for c in &r.cases {
                    let _ = writeln!(
                        out,
                        "  {:<5}  {:<40}  {}",
                        c.status.as_str(),
                        params_inline(&c.params),
                        c.detail
                    );
                }
                let s = &r.summary;
                let _ = writeln!(
                    out,
                    "  {} cases: {} passed, {} failed, {} errors ({} ms)",
                    s.total, s.passed, s.failed, s.errored, r.runtime_millis
                );
            }
        }
    }
    out
}
