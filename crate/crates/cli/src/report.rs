//! Report assembly and the two renderers.
//!
//! The text renderer is for humans; the structured renderer is JSON under
//! the schema tag `semiflat-report/1` with stable key order, meant for CI
//! assertions. Both are byte-identical across repeated runs and across the
//! parallel/sequential execution modes: entry order is the request order,
//! every collection is sorted deterministically upstream, and wall-clock
//! timings are only rendered when explicitly requested.

use serde::Serialize;

use semiflat::Limits;

pub const SCHEMA: &str = "semiflat-report/1";

/// Outcome class of one analysis entry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    /// Ran to completion; results (positive or negative) are trustworthy.
    Ok,
    /// A statement that holds mathematically came out false — an engine
    /// defect or a miscalibrated oracle, never a property of the inputs.
    Violation,
    /// Could not be decided within the configured caps.
    Inconclusive,
    /// The analysis could not run on these inputs.
    Error,
}

/// Overall report status. Any violation dominates; otherwise any entry
/// that failed to decide (or to run) keeps the report from claiming `ok`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Overall {
    Ok,
    Violations,
    Inconclusive,
}

/// The caps a verdict was computed under, echoed on every entry.
#[derive(Debug, Clone, Serialize)]
pub struct CapsUsed {
    pub tensor_cap: usize,
    pub slack: usize,
    pub enum_cap: usize,
    pub module_size_bound: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bound: Option<usize>,
}

impl CapsUsed {
    pub fn from_limits(limits: &Limits, bound: Option<usize>) -> Self {
        CapsUsed {
            tensor_cap: limits.tensor_cap,
            slack: limits.slack,
            enum_cap: limits.enum_cap,
            module_size_bound: limits.module_size_bound,
            bound,
        }
    }

    fn render(&self) -> String {
        let mut s = format!(
            "tensor_cap={} slack={} enum_cap={} module_size_bound={}",
            self.tensor_cap, self.slack, self.enum_cap, self.module_size_bound
        );
        if let Some(b) = self.bound {
            s.push_str(&format!(" bound={b}"));
        }
        s
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Entry {
    pub label: String,
    /// Which decision route produced the verdicts.
    pub method: String,
    pub status: Status,
    pub caps: CapsUsed,
    /// Verdicts and witnesses, one per line, in a fixed order.
    pub lines: Vec<String>,
    /// Wall-clock milliseconds; rendered only on request (timings are the
    /// one nondeterministic field).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub millis: Option<u128>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub schema: &'static str,
    pub overall: Overall,
    pub entries: Vec<Entry>,
}

impl Report {
    pub fn new(entries: Vec<Entry>) -> Self {
        let overall = if entries.iter().any(|e| e.status == Status::Violation) {
            Overall::Violations
        } else if entries
            .iter()
            .any(|e| matches!(e.status, Status::Inconclusive | Status::Error))
        {
            Overall::Inconclusive
        } else {
            Overall::Ok
        };
        Report { schema: SCHEMA, overall, entries }
    }

    /// CI contract: 0 all good, 2 theorem violation, 3 undecided within
    /// caps (or an analysis failed to run). Input errors exit 4 before a
    /// report exists.
    pub fn exit_code(&self) -> u8 {
        match self.overall {
            Overall::Ok => 0,
            Overall::Violations => 2,
            Overall::Inconclusive => 3,
        }
    }

    pub fn render_text(&self, timings: bool) -> String {
        let mut out = String::new();
        out.push_str(&format!("overall: {}\n", overall_str(self.overall)));
        for (i, e) in self.entries.iter().enumerate() {
            out.push('\n');
            out.push_str(&format!("[{}/{}] {}\n", i + 1, self.entries.len(), e.label));
            out.push_str(&format!("  status: {}\n", status_str(e.status)));
            out.push_str(&format!("  method: {}\n", e.method));
            out.push_str(&format!("  caps: {}\n", e.caps.render()));
            if timings {
                if let Some(ms) = e.millis {
                    out.push_str(&format!("  millis: {ms}\n"));
                }
            }
            for line in &e.lines {
                out.push_str(&format!("  {line}\n"));
            }
        }
        out
    }

    pub fn render_structured(&self, timings: bool) -> String {
        let mut value = self.clone();
        if !timings {
            for e in &mut value.entries {
                e.millis = None;
            }
        }
        let mut text = serde_json::to_string_pretty(&value).expect("report serializes");
        text.push('\n');
        text
    }
}

fn status_str(s: Status) -> &'static str {
    match s {
        Status::Ok => "ok",
        Status::Violation => "violation",
        Status::Inconclusive => "inconclusive",
        Status::Error => "error",
    }
}

fn overall_str(o: Overall) -> &'static str {
    match o {
        Overall::Ok => "ok",
        Overall::Violations => "violations",
        Overall::Inconclusive => "inconclusive",
    }
}
