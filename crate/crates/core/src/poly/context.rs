use num_bigint::BigInt;

use super::{HomPoly, Monomial, Rational, Variable};
use crate::error::{Error, Result};
use crate::linalg::RankMode;

/// A curve `C: f = 0` together with its partial derivatives.
#[derive(Debug, Clone)]
pub struct CurveContext {
    f: HomPoly,
    partials: [HomPoly; 3],
    /// The user asserts that `C` is rational and cuspidal. Never verified.
    pub assume_rational_cuspidal: bool,
    /// How ranks and saturations are computed; defaults to multi-modular.
    pub rank_mode: RankMode,
}

/// Builds the context for `f`. Reducedness is not checked here.
pub fn make_context(f: HomPoly, assume_rational_cuspidal: bool) -> Result<CurveContext> {
    let d = f.degree();
    if d < 2 {
        return Err(Error::DegreeTooSmall(d as i64));
    }
    let partials = Variable::ALL.map(|v| f.partial(v));
    let mut euler = HomPoly::zero(d);
    for (v, p) in Variable::ALL.iter().zip(&partials) {
        euler = euler.add(&p.mul_monomial(&Monomial::var(*v)));
    }
    if euler != f.scale(&Rational::from_integer(BigInt::from(d))) {
        return Err(Error::EulerCheckFailed);
    }
    Ok(CurveContext {
        f,
        partials,
        assume_rational_cuspidal,
        rank_mode: RankMode::MultiModular,
    })
}

impl CurveContext {
    pub fn with_rank_mode(mut self, mode: RankMode) -> Self {
        self.rank_mode = mode;
        self
    }

    pub fn f(&self) -> &HomPoly {
        &self.f
    }

    pub fn degree(&self) -> i64 {
        self.f.degree() as i64
    }

    /// `T = 3d - 6`, the degree about which `N(f)` is self-dual.
    pub fn t(&self) -> i64 {
        3 * self.degree() - 6
    }

    pub fn partial(&self, v: Variable) -> &HomPoly {
        match v {
            Variable::X => &self.partials[0],
            Variable::Y => &self.partials[1],
            Variable::Z => &self.partials[2],
        }
    }

    pub fn partials(&self) -> &[HomPoly; 3] {
        &self.partials
    }
}
