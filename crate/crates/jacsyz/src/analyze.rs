use std::time::Instant;

use jacsyz_core::classify::{check_mdr_bounds, classify_from};
use jacsyz_core::coverage::report_for;
use jacsyz_core::{
    defect_profile, make_context, mdr, parse_poly, tjurina, walther_check, CurveContext, RankMode,
};

use crate::error::Result;
use crate::report::{AnalysisReport, BoundCheck, CoverageEntry, DegreeDim, Timings, WaltherEntry};

#[derive(Debug, Clone, Copy, Default)]
pub struct Options {
    pub cuspidal: bool,
    pub certified: bool,
}

impl Options {
    pub fn rank_mode(&self) -> RankMode {
        if self.certified {
            RankMode::Certified
        } else {
            RankMode::MultiModular
        }
    }
}

fn ms(since: Instant) -> f64 {
    since.elapsed().as_secs_f64() * 1e3
}

pub fn context(poly: &str, opts: &Options) -> Result<CurveContext> {
    let f = parse_poly(poly)?;
    Ok(make_context(f, opts.cuspidal)?.with_rank_mode(opts.rank_mode()))
}

/// Runs the whole pipeline on one polynomial.
pub fn analyze(poly: &str, opts: &Options) -> Result<AnalysisReport> {
    let start = Instant::now();
    let ctx = context(poly, opts)?;
    let parse_ms = ms(start);
    let mut report = analyze_context(&ctx)?;
    if let Some(t) = report.timings.as_mut() {
        t.parse_ms = parse_ms;
        t.total_ms = ms(start);
    }
    Ok(report)
}

pub fn analyze_context(ctx: &CurveContext) -> Result<AnalysisReport> {
    let start = Instant::now();
    let d = ctx.degree();
    let cuspidal = ctx.assume_rational_cuspidal;

    let t = Instant::now();
    let r = mdr(ctx);
    let mdr_ms = ms(t);

    let t = Instant::now();
    let tau = tjurina(ctx)?;
    let tjurina_ms = ms(t);

    let t = Instant::now();
    let profile = defect_profile(ctx)?;
    profile.verify()?;
    let defect_ms = ms(t);

    let t = Instant::now();
    let c = classify_from(d, r, tau, profile)?;
    let bounds = match check_mdr_bounds(d, r, c.verdict, cuspidal) {
        Ok(rep) => rep.checks,
        Err(jacsyz_core::Error::BoundViolated(what)) if cuspidal => vec![(what, false)],
        Err(e) => return Err(e.into()),
    };
    let classify_ms = ms(t);

    let t = Instant::now();
    let (monodromy, coverage) = if cuspidal {
        let rows = walther_check(ctx, &c.profile)?
            .rows
            .into_iter()
            .map(|w| WaltherEntry {
                j: w.j,
                e2_k: w.e2_k,
                e2_d_minus_k: w.e2_dk,
                h1: w.h1,
                h2: w.h2,
                defect_degree: w.lhs_degree,
                defect_dim: w.lhs,
                vacuous: w.vacuous,
                holds: w.holds(),
            })
            .collect();
        let conj = report_for(ctx, c.clone())?;
        let cov = CoverageEntry {
            status: conj.coverage.status.name().to_string(),
            covered: conj.coverage.status.is_covered(),
            gap: conj.coverage.gap.map(|(a, b)| [a, b]),
            citation: conj.coverage.citation.to_string(),
            confirms: conj.confirms,
            counterexample_candidate: conj.counterexample_candidate,
            bound_violation: conj.bound_violation,
        };
        (Some(rows), Some(cov))
    } else {
        (None, None)
    };
    let monodromy_ms = ms(t);

    Ok(AnalysisReport {
        polynomial: ctx.f().render(),
        degree: d,
        assume_rational_cuspidal: cuspidal,
        mdr: c.r,
        tau: c.tau,
        tau_dr: c.tau_dr,
        nu: c.nu,
        verdict: c.verdict.name().to_string(),
        exponents: c.exponents.map(|(a, b)| [a, b]),
        t: c.profile.t,
        defect: c.profile.n.iter().map(|(degree, dim)| DegreeDim { degree, dim }).collect(),
        escalations: c.profile.escalations,
        bounds: bounds.into_iter().map(|(check, holds)| BoundCheck { check, holds }).collect(),
        notes: c.notes,
        monodromy,
        coverage,
        timings: Some(Timings {
            parse_ms: 0.0,
            mdr_ms,
            tjurina_ms,
            defect_ms,
            classify_ms,
            monodromy_ms,
            total_ms: ms(start),
        }),
    })
}
