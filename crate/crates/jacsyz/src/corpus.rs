//! JSON Lines corpus of curves with optional pinned invariants.
//!
//! One object per line; blank lines and lines starting with `#` are skipped.
//!
//! ```text
//! {"name": "cusp", "polynomial": "y^2*z - x^3", "assume_rational_cuspidal": true,
//!  "expected": {"mdr": 1, "tau": 2, "verdict": "NearlyFree", "d1": 1, "d2": 2, "nu": 1}}
//! ```

use std::path::Path;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::analyze::{analyze, Options};
use crate::error::{Error, ExitClass, Mismatch, Result};
use crate::report::AnalysisReport;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CorpusEntry {
    pub name: String,
    pub polynomial: String,
    #[serde(default)]
    pub assume_rational_cuspidal: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected: Option<Expected>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Expected {
    pub mdr: Option<usize>,
    pub tau: Option<usize>,
    pub verdict: Option<String>,
    pub d1: Option<usize>,
    pub d2: Option<usize>,
    pub nu: Option<usize>,
}

pub fn parse_corpus(text: &str) -> Result<Vec<CorpusEntry>> {
    let mut entries = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let entry: CorpusEntry = serde_json::from_str(line)
            .map_err(|e| Error::CorpusParse { line: i + 1, message: e.to_string() })?;
        entries.push(entry);
    }
    Ok(entries)
}

pub fn load(path: &Path) -> Result<Vec<CorpusEntry>> {
    let text = std::fs::read_to_string(path).map_err(|e| match e.kind() {
        std::io::ErrorKind::NotFound => Error::FileNotFound(path.display().to_string()),
        _ => Error::Io { path: path.display().to_string(), message: e.to_string() },
    })?;
    parse_corpus(&text)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FieldCheck {
    pub field: String,
    pub expected: String,
    pub found: String,
    pub ok: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EntryError {
    pub code: String,
    pub message: String,
    #[serde(skip)]
    pub class: Option<ExitClass>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EntryResult {
    pub name: String,
    pub passed: bool,
    pub checks: Vec<FieldCheck>,
    pub error: Option<EntryError>,
    pub report: Option<AnalysisReport>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BatchSummary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub entries: Vec<EntryResult>,
}

fn compare(expected: &Expected, report: &AnalysisReport) -> Vec<FieldCheck> {
    let mut checks = Vec::new();
    let mut push = |field: &str, want: Option<String>, got: String| {
        if let Some(want) = want {
            checks.push(FieldCheck { field: field.into(), ok: want == got, expected: want, found: got });
        }
    };
    let show = |v: Option<usize>| v.map(|x| x.to_string());
    let exp = |i: usize| report.exponents.map_or("none".to_string(), |e| e[i].to_string());
    push("mdr", show(expected.mdr), report.mdr.to_string());
    push("tau", show(expected.tau), report.tau.to_string());
    push("nu", show(expected.nu), report.nu.to_string());
    push("verdict", expected.verdict.clone(), report.verdict.clone());
    push("d1", show(expected.d1), exp(0));
    push("d2", show(expected.d2), exp(1));
    checks
}

pub fn run_entry(entry: &CorpusEntry, opts: &Options) -> EntryResult {
    let opts = Options { cuspidal: opts.cuspidal || entry.assume_rational_cuspidal, ..*opts };
    match analyze(&entry.polynomial, &opts) {
        Ok(report) => {
            let report = report.without_timings();
            let checks = entry.expected.as_ref().map(|e| compare(e, &report)).unwrap_or_default();
            let confirms = report.coverage.as_ref().map_or(true, |c| c.bound_violation.is_none());
            EntryResult {
                name: entry.name.clone(),
                passed: confirms && checks.iter().all(|c| c.ok),
                checks,
                error: None,
                report: Some(report),
            }
        }
        Err(e) => EntryResult {
            name: entry.name.clone(),
            passed: false,
            checks: Vec::new(),
            error: Some(EntryError {
                code: e.code().into(),
                message: e.to_string(),
                class: Some(e.class()),
            }),
            report: None,
        },
    }
}

/// Analyzes every entry in parallel; results keep corpus order.
pub fn run_batch(entries: &[CorpusEntry], opts: &Options) -> BatchSummary {
    let results: Vec<EntryResult> = entries.par_iter().map(|e| run_entry(e, opts)).collect();
    let passed = results.iter().filter(|r| r.passed).count();
    BatchSummary { total: results.len(), passed, failed: results.len() - passed, entries: results }
}

impl BatchSummary {
    pub fn mismatches(&self) -> Vec<Mismatch> {
        self.entries
            .iter()
            .flat_map(|r| {
                r.checks.iter().filter(|c| !c.ok).map(|c| Mismatch {
                    entry: r.name.clone(),
                    field: c.field.clone(),
                    expected: c.expected.clone(),
                    found: c.found.clone(),
                })
            })
            .collect()
    }

    pub fn exit_class(&self) -> ExitClass {
        self.entries
            .iter()
            .filter(|r| !r.passed)
            .map(|r| r.error.as_ref().and_then(|e| e.class).unwrap_or(ExitClass::Mismatch))
            .max()
            .unwrap_or(ExitClass::Success)
    }

    pub fn render_text(&self) -> String {
        use std::fmt::Write as _;
        let fields = ["mdr", "tau", "nu", "verdict", "d1", "d2"];
        let width = self.entries.iter().map(|r| r.name.len()).max().unwrap_or(4).max(4);
        let mut s = String::new();
        let _ = write!(s, "{:<width$}", "name");
        for f in fields {
            let _ = write!(s, " {f:>8}");
        }
        let _ = writeln!(s, "  result");
        for r in &self.entries {
            let _ = write!(s, "{:<width$}", r.name);
            for f in fields {
                let cell = match r.checks.iter().find(|c| c.field == f) {
                    Some(c) if c.ok => "pass",
                    Some(_) => "FAIL",
                    None if r.error.is_some() => "error",
                    None => "-",
                };
                let _ = write!(s, " {cell:>8}");
            }
            let result = if r.passed { "PASS" } else { "FAIL" };
            let _ = write!(s, "  {result}");
            if let Some(e) = &r.error {
                let _ = write!(s, " ({}: {})", e.code, e.message);
            }
            if let Some(rep) = &r.report {
                if rep.escalations > 0 {
                    let _ = write!(s, " [saturation escalated {}x]", rep.escalations);
                }
                if let Some(v) = rep.coverage.as_ref().and_then(|c| c.bound_violation.as_ref()) {
                    let _ = write!(s, " (BoundViolated: {v})");
                }
            }
            let _ = writeln!(s);
        }
        for m in self.mismatches() {
            let _ = writeln!(s, "ExpectationMismatch: {m}");
        }
        let _ = writeln!(s, "{} entries, {} passed, {} failed", self.total, self.passed, self.failed);
        s
    }
}
