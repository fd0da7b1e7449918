//! The defect module `N(f) = I_f / J_f`, where `I_f` is the saturation of
//! the Jacobian ideal with respect to `(x, y, z)`.
//!
//! `(I_f)_k` is computed as the limit of
//! `V_N = { g in S_k : g*x^N, g*y^N, g*z^N in J_f }`. Each membership test
//! is a normal form against the reduced echelon basis of `(J_f)_{k+N}`, so
//! only one echelon per degree is ever computed.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::jacobian::GradedDims;
use crate::linalg::echelon::{rank_of_rows, reduced_echelon, Echelon};
use crate::linalg::field::{Field, PrimeField, RationalField};
use crate::linalg::{RankMode, PRIMES};
use crate::poly::{dim_s, CurveContext, Monomial, Variable};

/// Graded dimensions of `N(f)` on `0..=T`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DefectProfile {
    pub n: GradedDims,
    /// `dim N(f)_{floor(T/2)}`.
    pub nu: usize,
    pub t: i64,
    /// How many times the saturation floor had to be doubled.
    pub escalations: u32,
}

impl DefectProfile {
    pub fn from_values(t: i64, values: Vec<usize>) -> Result<Self> {
        if values.len() as i64 != t + 1 {
            return Err(Error::DimensionMismatch { expected: (t + 1) as usize, found: values.len() });
        }
        let n = GradedDims::new(0, values);
        let nu = n.get(t / 2)?;
        Ok(DefectProfile { n, nu, t, escalations: 0 })
    }

    /// `dim N(f)_k`, zero outside `0..=T`.
    pub fn dim(&self, k: i64) -> usize {
        self.n.get(k).unwrap_or(0)
    }

    /// Checks duality `n(j) = n(T - j)` and the unimodal Lefschetz chain.
    pub fn verify(&self) -> Result<()> {
        let t = self.t;
        for j in 0..=t {
            let (a, b) = (self.dim(j), self.dim(t - j));
            if a != b {
                return Err(Error::ProfileInconsistent(format!(
                    "duality fails: n({j}) = {a} but n({}) = {b}",
                    t - j
                )));
            }
        }
        let mid = t / 2;
        for j in 1..=t {
            let (prev, cur) = (self.dim(j - 1), self.dim(j));
            let ok = if j <= mid { prev <= cur } else { prev >= cur };
            if !ok {
                return Err(Error::ProfileInconsistent(format!(
                    "Lefschetz chain fails between degrees {} and {j}: {prev} then {cur}",
                    j - 1
                )));
            }
        }
        Ok(())
    }
}

/// Reduced echelon bases of `(J_f)_m`, one per degree, over one field.
struct JacobianPieces<'a, F: Field> {
    ctx: &'a CurveContext,
    field: F,
    partials: [Vec<(Monomial, F::Elem)>; 3],
    cache: BTreeMap<i64, Echelon<F::Elem>>,
}

impl<'a, F: Field> JacobianPieces<'a, F> {
    /// `None` when a coefficient of `f` has no image in the field.
    fn new(ctx: &'a CurveContext, field: F) -> Option<Self> {
        let mut partials: [Vec<(Monomial, F::Elem)>; 3] = Default::default();
        for (slot, p) in partials.iter_mut().zip(ctx.partials()) {
            for (m, c) in p.terms() {
                slot.push((*m, field.reduce(c)?));
            }
        }
        Some(JacobianPieces { ctx, field, partials, cache: BTreeMap::new() })
    }

    fn ensure_echelon(&mut self, m: i64) {
        if !self.cache.contains_key(&m) {
            let cols = dim_s(m);
            let q = m - self.ctx.degree() + 1;
            let mut rows = Vec::new();
            if q >= 0 {
                for mono in Monomial::basis(q as u32) {
                    for partial in &self.partials {
                        if partial.is_empty() {
                            continue;
                        }
                        let mut row = alloc::vec![self.field.zero(); cols];
                        for (t, c) in partial {
                            row[t.mul(&mono).index()] = c.clone();
                        }
                        rows.push(row);
                    }
                }
            }
            let e = reduced_echelon(&self.field, rows, cols);
            self.cache.insert(m, e);
        }
    }

    fn jacobian_dim(&mut self, m: i64) -> usize {
        if m < 0 {
            return 0;
        }
        self.ensure_echelon(m);
        self.cache[&m].rank()
    }

    /// `dim V_N` in degree `k`.
    fn colon_dim(&mut self, k: i64, n: u32) -> usize {
        let m = k + n as i64;
        self.ensure_echelon(m);
        let ech = &self.cache[&m];
        let field = &self.field;
        let pivot_of = ech.pivot_of_column();
        let mut free_pos = alloc::vec![usize::MAX; ech.cols];
        let mut free_cols = Vec::new();
        for (c, p) in pivot_of.iter().enumerate() {
            if p.is_none() {
                free_pos[c] = free_cols.len();
                free_cols.push(c);
            }
        }
        let nf = free_cols.len();
        if nf == 0 {
            return dim_s(k);
        }
        let mut vectors = Vec::with_capacity(dim_s(k));
        for g in Monomial::basis(k as u32) {
            let mut v = alloc::vec![field.zero(); 3 * nf];
            for (slot, var) in Variable::ALL.into_iter().enumerate() {
                let j = g.mul(&Monomial::pow_of(var, n)).index();
                let block = &mut v[slot * nf..(slot + 1) * nf];
                match pivot_of[j] {
                    // e_j = row - (row restricted to free columns), so its
                    // normal form is the negated free part of the row
                    Some(r) => {
                        for (dst, &c) in block.iter_mut().zip(&free_cols) {
                            *dst = field.neg(&ech.rows[r][c]);
                        }
                    }
                    None => block[free_pos[j]] = field.one(),
                }
            }
            vectors.push(v);
        }
        dim_s(k) - rank_of_rows(field, vectors, 3 * nf)
    }

    /// `dim (I_f)_k`, running the colon chain from `N = floor` until it
    /// is stable for one step.
    fn saturation_dim(&mut self, k: i64, floor: i64) -> usize {
        let mut n = floor.max(0) as u32;
        let mut current = self.colon_dim(k, n);
        loop {
            let next = self.colon_dim(k, n + 1);
            if next == current {
                return current;
            }
            current = next;
            n += 1;
        }
    }

    fn profile(&mut self, floor_scale: i64) -> Vec<usize> {
        let t = self.ctx.t();
        (0..=t)
            .map(|k| {
                let sat = self.saturation_dim(k, floor_scale * (t - k + 1));
                sat - self.jacobian_dim(k)
            })
            .collect()
    }
}

/// Runs `job` modulo two primes, falling back to the rationals when they
/// disagree or no two primes are usable.
fn across_fields<T: PartialEq>(
    ctx: &CurveContext,
    mut job_mod: impl FnMut(&mut JacobianPieces<'_, PrimeField>) -> T,
    mut job_q: impl FnMut(&mut JacobianPieces<'_, RationalField>) -> T,
) -> T {
    if ctx.rank_mode == RankMode::MultiModular {
        let mut results = PRIMES
            .iter()
            .filter_map(|&p| JacobianPieces::new(ctx, PrimeField::new(p)))
            .take(2)
            .map(|mut pieces| job_mod(&mut pieces));
        if let (Some(a), Some(b)) = (results.next(), results.next()) {
            if a == b {
                return a;
            }
        }
    }
    let mut pieces = JacobianPieces::new(ctx, RationalField).expect("rationals embed");
    job_q(&mut pieces)
}

/// `dim (I_f)_k`.
pub fn sat_dim(ctx: &CurveContext, k: i64) -> usize {
    if k < 0 {
        return 0;
    }
    let floor = ctx.t() - k + 1;
    across_fields(
        ctx,
        |p| p.saturation_dim(k, floor),
        |p| p.saturation_dim(k, floor),
    )
}

const MAX_ESCALATIONS: u32 = 3;

/// `n(k) = dim (I_f)_k - dim (J_f)_k` for `k` in `0..=T`, checked against
/// duality and the Lefschetz chain. A failed check doubles the saturation
/// floor and recomputes, up to three times.
pub fn defect_profile(ctx: &CurveContext) -> Result<DefectProfile> {
    let t = ctx.t();
    let mut scale = 1;
    let mut escalations = 0;
    loop {
        let values = across_fields(ctx, |p| p.profile(scale), |p| p.profile(scale));
        let mut profile = DefectProfile::from_values(t, values)?;
        profile.escalations = escalations;
        match profile.verify() {
            Ok(()) => return Ok(profile),
            Err(e) if escalations == MAX_ESCALATIONS => return Err(e),
            Err(_) => {
                escalations += 1;
                scale *= 2;
            }
        }
    }
}

/// `nu(f) = dim N(f)_{floor(T/2)}`.
pub fn nu(ctx: &CurveContext) -> Result<usize> {
    Ok(defect_profile(ctx)?.nu)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jacobian::milnor_dim;
    use crate::poly::{make_context, parse_poly};
    use alloc::vec;

    fn ctx(s: &str) -> CurveContext {
        make_context(parse_poly(s).unwrap(), false).unwrap()
    }

    #[test]
    fn saturation_small_cases() {
        assert_eq!(sat_dim(&ctx("x^2 + y^2 + z^2"), 0), 1);
        // the saturation contains z, which vanishes at the cusp (0:1:0)
        assert_eq!(sat_dim(&ctx("y^2*z - x^3"), 1), 1);
        let tri = ctx("x*y*z");
        for k in 0..=3 {
            assert_eq!(sat_dim(&tri, k), dim_s(k) - milnor_dim(&tri, k), "k = {k}");
        }
    }

    #[test]
    fn profiles() {
        let tri = defect_profile(&ctx("x*y*z")).unwrap();
        assert_eq!(tri.n.values(), &[0, 0, 0, 0]);
        assert_eq!(tri.nu, 0);
        let cusp = defect_profile(&ctx("y^2*z - x^3")).unwrap();
        assert_eq!(cusp.nu, 1);
        let conic = defect_profile(&ctx("x^2 + y^2 + z^2")).unwrap();
        assert_eq!(conic.n.values(), &[1]);
        assert_eq!(conic.escalations, 0);
    }

    #[test]
    fn smooth_quartic_defect_is_milnor_algebra() {
        let c = ctx("x^4 + y^4 + z^4");
        let prof = defect_profile(&c).unwrap();
        for k in 0..=6 {
            assert_eq!(prof.dim(k), milnor_dim(&c, k));
        }
        assert_eq!(nu(&c).unwrap(), 7);
    }

    #[test]
    fn certified_and_modular_profiles_agree() {
        for s in ["y^2*z - x^3", "x*y*z*(x+y+z)", "x^4 + y^3*z"] {
            let m = defect_profile(&ctx(s)).unwrap();
            let c = defect_profile(&ctx(s).with_rank_mode(RankMode::Certified)).unwrap();
            assert_eq!(m, c, "{s}");
        }
    }

    #[test]
    fn verify_rejects_broken_profiles() {
        let p = DefectProfile::from_values(3, vec![0, 1, 2, 0]).unwrap();
        assert!(matches!(p.verify(), Err(Error::ProfileInconsistent(_))));
        let p = DefectProfile::from_values(4, vec![1, 0, 1, 0, 1]).unwrap();
        assert!(matches!(p.verify(), Err(Error::ProfileInconsistent(_))));
        let p = DefectProfile::from_values(4, vec![0, 1, 2, 1, 0]).unwrap();
        assert_eq!(p.verify(), Ok(()));
        assert_eq!(p.nu, 2);
        assert!(DefectProfile::from_values(4, vec![0, 1]).is_err());
    }
}
