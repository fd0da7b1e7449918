//! Jacobian syzygies of reduced plane curves.
//!
//! Everything here is exact: polynomials carry arbitrary-precision rational
//! coefficients and every dimension is the rank or nullity of a graded
//! multiplication map, computed either modulo word-size primes (with
//! cross-checking) or by fraction-free elimination over the integers.
//!
//! The crate is `no_std` and only needs `alloc`. IO, the command-line
//! front-end and report formats live in the `jacsyz` crate.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod classify;
pub mod coverage;
pub mod defect;
mod error;
pub mod jacobian;
pub mod linalg;
pub mod monodromy;
pub mod poly;

pub use classify::{classify, mdr_bound_check, tau_formula, Classification, Verdict};
pub use coverage::{
    conjecture_report, coverage, exception_table, profile, remark_bound, CoverageStatus,
    CoverageVerdict, FactorizationProfile,
};
pub use defect::{defect_profile, nu, sat_dim, DefectProfile};
pub use error::{Error, Result};
pub use jacobian::{ar_basis, ar_dim, mdr, milnor_dim, tjurina, GradedDims, SyzygyVector};
pub use linalg::{ExactMatrix, KernelBasis, RankMode};
pub use monodromy::{e2_dim, h1_eigen, walther_check, EigenspaceQuery, MonodromyReport};
pub use poly::{dim_s, make_context, parse_poly, CurveContext, HomPoly, Monomial, Rational, Variable};
