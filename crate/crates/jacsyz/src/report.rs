//! Serializable analysis reports and their text rendering.

use std::fmt::Write as _;

use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AnalysisReport {
    pub polynomial: String,
    pub degree: i64,
    pub assume_rational_cuspidal: bool,
    pub mdr: usize,
    pub tau: usize,
    /// `tau(d, r)` for `r = mdr`.
    pub tau_dr: i64,
    pub nu: usize,
    pub verdict: String,
    pub exponents: Option<[usize; 2]>,
    /// `T = 3(d - 2)`.
    pub t: i64,
    pub defect: Vec<DegreeDim>,
    pub escalations: u32,
    pub bounds: Vec<BoundCheck>,
    pub notes: Vec<String>,
    pub monodromy: Option<Vec<WaltherEntry>>,
    pub coverage: Option<CoverageEntry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings: Option<Timings>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeDim {
    pub degree: i64,
    pub dim: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundCheck {
    pub check: String,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WaltherEntry {
    pub j: i64,
    pub e2_k: usize,
    pub e2_d_minus_k: usize,
    pub h1: usize,
    pub h2: usize,
    pub defect_degree: i64,
    pub defect_dim: usize,
    pub vacuous: bool,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoverageEntry {
    pub status: String,
    pub covered: bool,
    pub gap: Option<[i64; 2]>,
    pub citation: String,
    pub confirms: bool,
    pub counterexample_candidate: bool,
    pub bound_violation: Option<String>,
}

/// Wall-clock milliseconds per pipeline stage.
#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct Timings {
    pub parse_ms: f64,
    pub mdr_ms: f64,
    pub tjurina_ms: f64,
    pub defect_ms: f64,
    pub classify_ms: f64,
    pub monodromy_ms: f64,
    pub total_ms: f64,
}

impl AnalysisReport {
    pub fn without_timings(mut self) -> Self {
        self.timings = None;
        self
    }

    pub fn render_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "f        = {}", self.polynomial);
        let _ = writeln!(s, "degree   = {}", self.degree);
        let _ = writeln!(s, "mdr      = {}", self.mdr);
        let _ = writeln!(s, "tau      = {}   (tau(d, r) = {})", self.tau, self.tau_dr);
        let _ = writeln!(s, "nu       = {}", self.nu);
        match self.exponents {
            Some([a, b]) => {
                let _ = writeln!(s, "verdict  = {} with exponents ({a}, {b})", self.verdict);
            }
            None => {
                let _ = writeln!(s, "verdict  = {}", self.verdict);
            }
        }
        let _ = writeln!(s, "\ndefect module N(f), T = {}", self.t);
        let _ = writeln!(s, "  k  dim N(f)_k");
        for row in &self.defect {
            let _ = writeln!(s, "{:>3}  {}", row.degree, row.dim);
        }
        if self.escalations > 0 {
            let _ = writeln!(s, "  (saturation floor escalated {} times)", self.escalations);
        }
        if !self.bounds.is_empty() {
            let _ = writeln!(s, "\nbounds");
            for b in &self.bounds {
                let _ = writeln!(s, "  [{}] {}", if b.holds { "ok" } else { "FAIL" }, b.check);
            }
        }
        if let Some(rows) = &self.monodromy {
            let _ = writeln!(s, "\nmonodromy (lambda = exp(-2 pi i (j-1)/d))");
            let _ = writeln!(s, "  j  E2_k  E2_d-k  h1  h2  n(2d-2-j)");
            for r in rows {
                let _ = writeln!(
                    s,
                    "{:>3}  {:>4}  {:>6}  {:>2}  {:>2}  {:>2}{}{}",
                    r.j,
                    r.e2_k,
                    r.e2_d_minus_k,
                    r.h1,
                    r.h2,
                    r.defect_dim,
                    if r.vacuous { " (vacuous)" } else { "" },
                    if r.holds { "" } else { "  FAIL" }
                );
            }
        }
        if let Some(c) = &self.coverage {
            let _ = writeln!(s, "\ncoverage = {} ({})", c.status, c.citation);
            if let Some([lo, hi]) = c.gap {
                let _ = writeln!(s, "  open window for this degree: mdr in [{lo}, {hi}]");
            }
            if let Some(v) = &c.bound_violation {
                let _ = writeln!(s, "  bound violated: {v}; the cuspidal assertion is likely wrong");
            }
            if c.counterexample_candidate {
                let _ = writeln!(s, "  neither free nor nearly free: counterexample candidate");
            }
        }
        for n in &self.notes {
            let _ = writeln!(s, "note: {n}");
        }
        if let Some(t) = &self.timings {
            let _ = writeln!(
                s,
                "\ntime: {:.1} ms (mdr {:.1}, tau {:.1}, defect {:.1}, monodromy {:.1})",
                t.total_ms, t.mdr_ms, t.tjurina_ms, t.defect_ms, t.monodromy_ms
            );
        }
        s
    }
}
