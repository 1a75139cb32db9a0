//! Sweep reports: per-instance records, counterexample certificates, and
//! stable serialization.
//!
//! Report bodies are byte-identical across runs for identical inputs. The
//! only run-dependent values (wall-clock timestamp, elapsed time) live in a
//! separate `meta` object so report files diff cleanly.

use std::fmt;
use std::time::{SystemTime, UNIX_EPOCH};

use serde::Serialize;

use crate::graph::Graph;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    Skip,
    Timeout,
    /// A confirmed violation of an open conjecture or cited value: a result
    /// to report, not a harness failure.
    Finding,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
            Status::Skip => "skip",
            Status::Timeout => "timeout",
            Status::Finding => "FINDING",
        })
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Relation {
    Lt,
    Le,
    Eq,
    Ge,
}

impl Relation {
    pub fn holds(&self, left: usize, right: usize) -> bool {
        match self {
            Relation::Lt => left < right,
            Relation::Le => left <= right,
            Relation::Eq => left == right,
            Relation::Ge => left >= right,
        }
    }

    pub fn symbol(&self) -> &'static str {
        match self {
            Relation::Lt => "<",
            Relation::Le => "<=",
            Relation::Eq => "=",
            Relation::Ge => ">=",
        }
    }
}

/// What a check asserts about the computed quantity.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum PredictionValue {
    Exact { value: usize },
    Interval { lo: usize, hi: usize },
    Relation { relation: Relation },
}

impl PredictionValue {
    pub fn admits(&self, computed: &ComputedValue) -> bool {
        match (self, computed) {
            (PredictionValue::Exact { value }, ComputedValue::Value { value: got }) => value == got,
            (PredictionValue::Interval { lo, hi }, ComputedValue::Value { value: got }) => {
                lo <= got && got <= hi
            }
            (PredictionValue::Relation { relation }, ComputedValue::Pair { left, right }) => {
                relation.holds(*left, *right)
            }
            _ => false,
        }
    }
}

impl fmt::Display for PredictionValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PredictionValue::Exact { value } => write!(f, "= {value}"),
            PredictionValue::Interval { lo, hi } => write!(f, "in [{lo}, {hi}]"),
            PredictionValue::Relation { relation } => {
                write!(f, "left {} right", relation.symbol())
            }
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ComputedValue {
    Value { value: usize },
    Pair { left: usize, right: usize },
}

impl fmt::Display for ComputedValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ComputedValue::Value { value } => write!(f, "{value}"),
            ComputedValue::Pair { left, right } => write!(f, "({left}, {right})"),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Record {
    pub label: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub predicted: Option<PredictionValue>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub computed: Option<ComputedValue>,
    pub status: Status,
    /// Solver nodes expanded for this record; deterministic.
    pub nodes: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Record {
    pub fn skip(label: String, reason: String) -> Record {
        Record {
            label,
            predicted: None,
            computed: None,
            status: Status::Skip,
            nodes: 0,
            note: Some(reason),
        }
    }
}

/// A self-contained exhibit: the instance graph plus whatever set or values
/// make the record reproducible on its own.
#[derive(Clone, Debug, Serialize)]
pub struct Certificate {
    pub kind: String,
    pub label: String,
    pub graph: Graph,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<usize>>,
    pub note: String,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Default, Serialize)]
pub struct Summary {
    pub instances: usize,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    pub timeouts: usize,
    pub findings: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub sweep: String,
    pub records: Vec<Record>,
    pub certificates: Vec<Certificate>,
    pub summary: Summary,
}

impl Report {
    pub fn new(sweep: String, records: Vec<Record>, certificates: Vec<Certificate>) -> Report {
        let mut summary = Summary {
            instances: records.len(),
            ..Summary::default()
        };
        for r in &records {
            match r.status {
                Status::Pass => summary.passed += 1,
                Status::Fail => summary.failed += 1,
                Status::Skip => summary.skipped += 1,
                Status::Timeout => summary.timeouts += 1,
                Status::Finding => summary.findings += 1,
            }
        }
        Report {
            sweep,
            records,
            certificates,
            summary,
        }
    }

    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0 && self.summary.timeouts == 0 && self.summary.findings == 0
    }

    pub fn to_json(&self, elapsed_ms: u64) -> String {
        let doc = ReportDocument {
            meta: Meta {
                generated_at_unix: SystemTime::now()
                    .duration_since(UNIX_EPOCH)
                    .map(|d| d.as_secs())
                    .unwrap_or(0),
                elapsed_ms,
            },
            report: self,
        };
        serde_json::to_string_pretty(&doc).expect("report serialization cannot fail")
    }

    pub fn to_markdown(&self) -> String {
        let mut out = format!("# {}\n\n", self.sweep);
        out.push_str("| instance | predicted | computed | status | nodes |\n");
        out.push_str("|---|---|---|---|---|\n");
        for r in &self.records {
            let predicted = r
                .predicted
                .map_or_else(|| "-".to_string(), |p| p.to_string());
            let computed = r
                .computed
                .map_or_else(|| "-".to_string(), |c| c.to_string());
            out.push_str(&format!(
                "| {} | {} | {} | {} | {} |\n",
                r.label, predicted, computed, r.status, r.nodes
            ));
        }
        let s = &self.summary;
        out.push_str(&format!(
            "\n{} instances: {} passed, {} failed, {} skipped, {} timeouts, {} findings\n",
            s.instances, s.passed, s.failed, s.skipped, s.timeouts, s.findings
        ));
        for c in &self.certificates {
            out.push_str(&format!(
                "\n- certificate [{}] {}: {} graph={}",
                c.kind,
                c.label,
                c.note,
                c.graph.to_json_string()
            ));
            if let Some(w) = &c.witness {
                out.push_str(&format!(" witness={w:?}"));
            }
            out.push('\n');
        }
        out
    }
}

/// Serialized wrapper; the run-dependent fields stay out of `report`.
#[derive(Serialize)]
struct ReportDocument<'a> {
    meta: Meta,
    report: &'a Report,
}

#[derive(Serialize)]
struct Meta {
    generated_at_unix: u64,
    elapsed_ms: u64,
}
