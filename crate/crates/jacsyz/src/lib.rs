//! Command-line analysis of Jacobian syzygies of plane curves: the analysis
//! pipeline, JSON reports, the curve corpus and the coverage tables.
//! All mathematics lives in [`jacsyz_core`].

pub mod analyze;
pub mod corpus;
pub mod error;
pub mod report;
pub mod tables;

pub use analyze::{analyze, analyze_context, Options};
pub use corpus::{load, parse_corpus, run_batch, BatchSummary, CorpusEntry, Expected};
pub use error::{Error, ExitClass, Result};
pub use report::AnalysisReport;
pub use tables::{coverage_table, hilbert_table, CoverageTable, KNOWN_EXCEPTIONS};

/// Exit class of a finished analysis: a cuspidal curve that violates a
/// proven bound, or is neither free nor nearly free, is a mismatch.
pub fn report_exit_class(report: &AnalysisReport) -> ExitClass {
    match &report.coverage {
        Some(c) if c.bound_violation.is_some() || c.counterexample_candidate => ExitClass::Mismatch,
        _ => ExitClass::Success,
    }
}
