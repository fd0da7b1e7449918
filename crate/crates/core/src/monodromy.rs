//! Monodromy eigenspaces of the Milnor fiber `F: f = 1` for rational
//! cuspidal curves, through divergence-free Jacobian relations.
//!
//! Eigenvalues `exp(-2 pi i (j-1)/d)` are never formed; a query only carries
//! the index `j`.

use alloc::format;
use alloc::vec::Vec;

use crate::defect::DefectProfile;
use crate::error::{Error, Result};
use crate::jacobian::relation_matrix;
use crate::linalg::{self, ExactMatrix};
use crate::poly::{dim_s, CurveContext, Monomial, Rational, Variable};

use num_bigint::BigInt;

/// The eigenvalue `exp(-2 pi i (j - 1)/d)`, `1 <= j <= d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EigenspaceQuery {
    j: i64,
    d: i64,
}

impl EigenspaceQuery {
    pub fn new(j: i64, d: i64) -> Result<Self> {
        if !(1..=d).contains(&j) {
            return Err(Error::NotApplicable(format!("j = {j} is outside 1..={d}")));
        }
        Ok(EigenspaceQuery { j, d })
    }

    pub fn j(&self) -> i64 {
        self.j
    }

    /// `k = j - 1`.
    pub fn k(&self) -> i64 {
        self.j - 1
    }

    /// The eigenvalue as the residue `(j - 1) mod d`.
    pub fn residue(&self) -> i64 {
        (self.j - 1).rem_euclid(self.d)
    }

    pub fn is_trivial(&self) -> bool {
        self.residue() == 0
    }
}

/// Matrix of `(a, b, c) -> a_x + b_y + c_z` on `S_q^3`.
fn divergence_matrix(q: i64) -> ExactMatrix {
    let mut m = ExactMatrix::new(dim_s(q - 1));
    for v in Variable::ALL {
        for mono in Monomial::basis(q as u32) {
            let e = mono.exponent(v);
            if e == 0 {
                m.push_column(None);
                continue;
            }
            let mut exps = mono.exponents();
            exps[v.slot()] -= 1;
            let target = Monomial::new(exps[0], exps[1], exps[2]);
            m.push_column(Some((target.index(), Rational::from_integer(BigInt::from(e)))));
        }
    }
    m
}

/// `dim E_2^{1,0}(f)_q`: Jacobian relations of degree `q - 2` with zero
/// divergence. Only defined for `q <= d`.
pub fn e2_dim(ctx: &CurveContext, q: i64) -> Result<usize> {
    let d = ctx.degree();
    if q > d {
        return Err(Error::QOutOfRange { q, d });
    }
    let src = q - 2;
    if src < 0 {
        return Ok(0);
    }
    let system = relation_matrix(ctx, src).stack(&divergence_matrix(src));
    Ok(system.cols() - linalg::rank(&system, ctx.rank_mode))
}

fn require_cuspidal(ctx: &CurveContext) -> Result<()> {
    if !ctx.assume_rational_cuspidal {
        return Err(Error::NotApplicable(
            "monodromy formulas need a curve asserted rational cuspidal".into(),
        ));
    }
    Ok(())
}

/// `dim H^1(F)_lambda = dim E_2(f)_k + dim E_2(f)_{d-k}` with `k = j - 1`.
pub fn h1_eigen(ctx: &CurveContext, query: EigenspaceQuery) -> Result<usize> {
    require_cuspidal(ctx)?;
    if query.is_trivial() {
        return Err(Error::NotApplicable("lambda = 1 is excluded".into()));
    }
    let k = query.k();
    Ok(e2_dim(ctx, k)? + e2_dim(ctx, ctx.degree() - k)?)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WaltherRow {
    pub j: i64,
    pub e2_k: usize,
    pub e2_dk: usize,
    pub h1: usize,
    /// `h1 + 1`, from the Euler characteristic of the complement.
    pub h2: usize,
    /// `dim N(f)_{2d-2-j}`.
    pub lhs: usize,
    pub lhs_degree: i64,
    /// The defect degree lies outside `0..=T`, so the check holds trivially.
    pub vacuous: bool,
}

impl WaltherRow {
    pub fn holds(&self) -> bool {
        self.lhs <= self.h2
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonodromyReport {
    pub rows: Vec<WaltherRow>,
}

/// Checks `dim N(f)_{2d-2-j} <= dim H^2(F)_lambda` for `j = 2..=d`.
pub fn walther_check(ctx: &CurveContext, profile: &DefectProfile) -> Result<MonodromyReport> {
    require_cuspidal(ctx)?;
    let d = ctx.degree();
    let mut rows = Vec::new();
    for j in 2..=d {
        let q = EigenspaceQuery::new(j, d)?;
        let k = q.k();
        let (e2_k, e2_dk) = (e2_dim(ctx, k)?, e2_dim(ctx, d - k)?);
        let h1 = e2_k + e2_dk;
        let lhs_degree = 2 * d - 2 - j;
        let vacuous = lhs_degree < 0 || lhs_degree > profile.t;
        let lhs = if vacuous { 0 } else { profile.dim(lhs_degree) };
        let row = WaltherRow { j, e2_k, e2_dk, h1, h2: h1 + 1, lhs, lhs_degree, vacuous };
        if !row.holds() {
            return Err(Error::InequalityViolated { j, lhs, h2: row.h2 });
        }
        rows.push(row);
    }
    Ok(MonodromyReport { rows })
}
