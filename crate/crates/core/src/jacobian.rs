//! Graded pieces of the Jacobian syzygy module `AR(f)` and of the Milnor
//! algebra `M(f) = S / J_f`.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::linalg::{self, ExactMatrix};
use crate::poly::{dim_s, CurveContext, HomPoly, Monomial, Variable};

/// A Jacobian relation `a*f_x + b*f_y + c*f_z = 0` of degree `q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SyzygyVector {
    pub degree: u32,
    pub components: [HomPoly; 3],
}

impl SyzygyVector {
    /// `a*f_x + b*f_y + c*f_z`, which is zero for a genuine relation.
    pub fn apply(&self, ctx: &CurveContext) -> HomPoly {
        let mut acc = HomPoly::zero(self.degree + ctx.degree() as u32 - 1);
        for (comp, partial) in self.components.iter().zip(ctx.partials()) {
            acc = acc.add(&comp.mul(partial));
        }
        acc
    }

    /// `a_x + b_y + c_z`.
    pub fn divergence(&self) -> HomPoly {
        let mut acc = HomPoly::zero(self.degree.saturating_sub(1));
        for (comp, v) in self.components.iter().zip(Variable::ALL) {
            acc = acc.add(&comp.partial(v));
        }
        acc
    }
}

/// Dimensions indexed by degree over a declared closed range.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedDims {
    start: i64,
    values: Vec<usize>,
}

impl GradedDims {
    pub fn new(start: i64, values: Vec<usize>) -> Self {
        GradedDims { start, values }
    }

    pub fn from_fn(start: i64, end: i64, mut f: impl FnMut(i64) -> Result<usize>) -> Result<Self> {
        let values = (start..=end).map(&mut f).collect::<Result<Vec<_>>>()?;
        Ok(GradedDims { start, values })
    }

    pub fn start(&self) -> i64 {
        self.start
    }

    pub fn end(&self) -> i64 {
        self.start + self.values.len() as i64 - 1
    }

    pub fn get(&self, degree: i64) -> Result<usize> {
        if degree < self.start || degree > self.end() {
            return Err(Error::OutOfRange { degree, start: self.start, end: self.end() });
        }
        Ok(self.values[(degree - self.start) as usize])
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, usize)> + '_ {
        self.values.iter().enumerate().map(move |(i, &v)| (self.start + i as i64, v))
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }
}

/// Matrix of `S_q^3 -> S_{q+d-1}`, `(a, b, c) -> a*f_x + b*f_y + c*f_z`.
///
/// Columns run over the `a` block, then `b`, then `c`, each in monomial
/// index order.
pub fn relation_matrix(ctx: &CurveContext, q: i64) -> ExactMatrix {
    let target = q + ctx.degree() - 1;
    let mut m = ExactMatrix::new(dim_s(target));
    if q < 0 {
        return m;
    }
    let basis = Monomial::basis(q as u32);
    for partial in ctx.partials() {
        for mono in &basis {
            m.push_column(partial.terms().map(|(t, c)| (t.mul(mono).index(), c.clone())));
        }
    }
    m
}

/// `dim AR(f)_q`.
pub fn ar_dim(ctx: &CurveContext, q: i64) -> usize {
    if q < 0 {
        return 0;
    }
    let m = relation_matrix(ctx, q);
    m.cols() - linalg::rank(&m, ctx.rank_mode)
}

fn split_triple(q: u32, v: &[crate::poly::Rational]) -> [HomPoly; 3] {
    let n = dim_s(q as i64);
    [
        HomPoly::from_dense(q, &v[..n]),
        HomPoly::from_dense(q, &v[n..2 * n]),
        HomPoly::from_dense(q, &v[2 * n..]),
    ]
}

/// Canonical basis of `AR(f)_q`, each element checked against `f`.
pub fn ar_basis(ctx: &CurveContext, q: i64) -> Vec<SyzygyVector> {
    if q < 0 {
        return Vec::new();
    }
    let q = q as u32;
    let kernel = linalg::kernel(&relation_matrix(ctx, q as i64));
    kernel
        .vectors
        .iter()
        .map(|v| {
            let syz = SyzygyVector { degree: q, components: split_triple(q, v) };
            assert!(syz.apply(ctx).is_zero(), "kernel vector is not a Jacobian relation");
            syz
        })
        .collect()
}

/// Least `q >= 0` with `AR(f)_q != 0`. The Koszul relations bound it by `d - 1`.
pub fn mdr(ctx: &CurveContext) -> usize {
    let d = ctx.degree();
    (0..d)
        .find(|&q| ar_dim(ctx, q) > 0)
        .expect("Koszul relations live in degree d - 1") as usize
}

/// `dim M(f)_k = dim S_k - dim (J_f)_k`.
pub fn milnor_dim(ctx: &CurveContext, k: i64) -> usize {
    if k < 0 {
        return 0;
    }
    let q = k - ctx.degree() + 1;
    if q < 0 {
        return dim_s(k);
    }
    dim_s(k) - linalg::rank(&relation_matrix(ctx, q), ctx.rank_mode)
}

/// The total Tjurina number, read off as the stable value of the Hilbert
/// function of `M(f)`.
///
/// The scan starts at `T = 3d - 6` and stops at the first three equal
/// consecutive values. A run of `d` strict increases is taken as a sign of
/// a non-reduced `f` (the Hilbert function then grows without bound).
pub fn tjurina(ctx: &CurveContext) -> Result<usize> {
    let d = ctx.degree();
    let start = ctx.t().max(d - 1);
    // hard stop, far past any plateau seen in practice for reduced curves
    let limit = start + 4 * d + 8;
    let mut window: Vec<usize> = Vec::new();
    let mut increasing_run = 0;
    let mut k = start;
    while k <= limit {
        let v = milnor_dim(ctx, k);
        if let Some(&last) = window.last() {
            if v > last {
                increasing_run += 1;
                if increasing_run >= d {
                    return Err(Error::NonReducedInput { degree: k });
                }
            } else {
                increasing_run = 0;
            }
        }
        window.push(v);
        if let [.., a, b, c] = window[..] {
            if a == b && b == c {
                return Ok(c);
            }
        }
        k += 1;
    }
    Err(Error::NonReducedInput { degree: limit })
}

/// `dim AR(f)_q` for `q` in `start..=end`.
pub fn ar_dims(ctx: &CurveContext, start: i64, end: i64) -> GradedDims {
    GradedDims::from_fn(start, end, |q| Ok(ar_dim(ctx, q))).expect("infallible")
}

/// The Hilbert function of `M(f)` on `start..=end`.
pub fn milnor_dims(ctx: &CurveContext, start: i64, end: i64) -> GradedDims {
    GradedDims::from_fn(start, end, |k| Ok(milnor_dim(ctx, k))).expect("infallible")
}
