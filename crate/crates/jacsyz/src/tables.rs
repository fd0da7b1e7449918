//! Coverage and Hilbert function tables.

use std::fmt::Write as _;

use jacsyz_core::jacobian::{ar_dims, milnor_dims};
use jacsyz_core::{defect_profile, dim_s, exception_table, CurveContext};
use serde::Serialize;

use crate::error::Result;

/// Odd degrees `d <= 90` not settled for every `mdr`, with the open values.
pub const KNOWN_EXCEPTIONS: [(i64, &[i64]); 7] = [
    (35, &[16]),
    (45, &[21]),
    (55, &[26]),
    (63, &[29, 30]),
    (65, &[31]),
    (77, &[36, 37]),
    (85, &[41]),
];

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OpenDegree {
    pub d: i64,
    pub mdr: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoverageTable {
    pub d_max: i64,
    pub odd_degrees: usize,
    pub open_degrees: usize,
    pub open_cases: usize,
    pub exceptions: Vec<OpenDegree>,
    /// Every `(d, mdr)` with `mdr` below this value is settled.
    pub min_uncovered_mdr: Option<i64>,
    /// Every degree up to this one is settled.
    pub settled_through: i64,
}

pub fn coverage_table(d_max: i64) -> CoverageTable {
    let t = exception_table(d_max);
    let exceptions: Vec<OpenDegree> = t
        .entries
        .iter()
        .map(|&(d, (lo, hi))| OpenDegree { d, mdr: (lo..=hi).collect() })
        .collect();
    let settled_through = exceptions.first().map_or(d_max.max(2), |e| e.d - 1);
    CoverageTable {
        d_max,
        odd_degrees: (3..=d_max).step_by(2).count(),
        open_degrees: exceptions.len(),
        open_cases: exceptions.iter().map(|e| e.mdr.len()).sum(),
        exceptions,
        min_uncovered_mdr: t.min_uncovered_mdr,
        settled_through,
    }
}

impl CoverageTable {
    /// Compares against [`KNOWN_EXCEPTIONS`] restricted to `d <= min(d_max, 90)`.
    /// Returns the list of differences.
    pub fn check_known(&self) -> Vec<String> {
        let limit = self.d_max.min(90);
        let ours: Vec<(i64, Vec<i64>)> =
            self.exceptions.iter().filter(|e| e.d <= limit).map(|e| (e.d, e.mdr.clone())).collect();
        let known: Vec<(i64, Vec<i64>)> =
            KNOWN_EXCEPTIONS.iter().filter(|(d, _)| *d <= limit).map(|(d, r)| (*d, r.to_vec())).collect();
        let mut diffs = Vec::new();
        for (d, r) in &known {
            match ours.iter().find(|(e, _)| e == d) {
                None => diffs.push(format!("d = {d}: expected open mdr {r:?}, found none")),
                Some((_, got)) if got != r => {
                    diffs.push(format!("d = {d}: expected open mdr {r:?}, found {got:?}"))
                }
                _ => {}
            }
        }
        for (d, got) in &ours {
            if !known.iter().any(|(e, _)| e == d) {
                diffs.push(format!("d = {d}: unexpected open mdr {got:?}"));
            }
        }
        diffs
    }

    pub fn render_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "odd degrees 3..={}: {} checked", self.d_max, self.odd_degrees);
        if self.exceptions.is_empty() {
            let _ = writeln!(s, "no open cases");
        } else {
            let _ = writeln!(s, "   d  open mdr");
            for e in &self.exceptions {
                let list: Vec<String> = e.mdr.iter().map(|r| r.to_string()).collect();
                let _ = writeln!(s, "{:>4}  {{{}}}", e.d, list.join(", "));
            }
        }
        let _ = writeln!(
            s,
            "{} open degrees, {} open (d, mdr) pairs",
            self.open_degrees, self.open_cases
        );
        let _ = writeln!(s, "all degrees d <= {} settled", self.settled_through);
        if let Some(m) = self.min_uncovered_mdr {
            let _ = writeln!(s, "all curves with mdr <= {} settled", m - 1);
        }
        s
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HilbertRow {
    pub degree: i64,
    pub dim_s: usize,
    pub ar: usize,
    pub milnor: usize,
    pub defect: usize,
}

/// Graded dimensions of `S`, `AR(f)`, `M(f) = S/J_f` and `N(f)` on `0..=max_degree`.
pub fn hilbert_table(ctx: &CurveContext, max_degree: i64) -> Result<Vec<HilbertRow>> {
    let profile = defect_profile(ctx)?;
    let ar = ar_dims(ctx, 0, max_degree);
    let m = milnor_dims(ctx, 0, max_degree);
    (0..=max_degree)
        .map(|k| {
            Ok(HilbertRow {
                degree: k,
                dim_s: dim_s(k),
                ar: ar.get(k)?,
                milnor: m.get(k)?,
                defect: profile.dim(k),
            })
        })
        .collect()
}

pub fn render_hilbert(rows: &[HilbertRow]) -> String {
    let mut s = String::from("   k  dim S_k  dim AR_k  dim M_k  dim N_k\n");
    for r in rows {
        let _ = writeln!(
            s,
            "{:>4}  {:>7}  {:>8}  {:>7}  {:>7}",
            r.degree, r.dim_s, r.ar, r.milnor, r.defect
        );
    }
    s
}
