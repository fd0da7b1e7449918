//! Brute-force recomputation of the graded invariants, sharing nothing with
//! the library beyond reading the coefficients of `f`.
//!
//! Polynomials are maps from exponent triples to rationals, multiplication
//! maps are built row by row, ranks come from plain Gaussian elimination
//! over the rationals and the saturation is tested against every monomial
//! of degree `N`.

#![allow(dead_code)]

use std::collections::BTreeMap;

use jacsyz_core::HomPoly;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Q = BigRational;
pub type Poly = BTreeMap<[u32; 3], Q>;

pub fn monomials(k: i64) -> Vec<[u32; 3]> {
    let mut out = Vec::new();
    if k < 0 {
        return out;
    }
    let k = k as u32;
    for a in 0..=k {
        for b in 0..=k - a {
            out.push([a, b, k - a - b]);
        }
    }
    out
}

pub fn from_hom(f: &HomPoly) -> Poly {
    f.terms().map(|(m, c)| (m.exponents(), c.clone())).collect()
}

pub fn degree(f: &Poly) -> i64 {
    f.keys().next().map(|e| (e[0] + e[1] + e[2]) as i64).unwrap_or(-1)
}

pub fn partial(f: &Poly, v: usize) -> Poly {
    let mut out = Poly::new();
    for (e, c) in f {
        if e[v] > 0 {
            let mut e2 = *e;
            e2[v] -= 1;
            out.insert(e2, c * Q::from_integer(e[v].into()));
        }
    }
    out
}

fn times_monomial(f: &Poly, m: [u32; 3]) -> Poly {
    f.iter().map(|(e, c)| ([e[0] + m[0], e[1] + m[1], e[2] + m[2]], c.clone())).collect()
}

fn to_vector(p: &Poly, k: i64) -> Vec<Q> {
    let basis = monomials(k);
    basis.iter().map(|m| p.get(m).cloned().unwrap_or_else(Q::zero)).collect()
}

/// Row-reduces in place and returns the pivot columns.
pub fn row_reduce(rows: &mut Vec<Vec<Q>>) -> Vec<usize> {
    let cols = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = Q::one() / rows[r][c].clone();
        for x in rows[r].iter_mut() {
            *x = &*x * &inv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    *x = &*x - &f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

pub fn rank(mut rows: Vec<Vec<Q>>) -> usize {
    row_reduce(&mut rows).len()
}

/// Spanning rows of `(J_f)_k`.
fn jacobian_rows(f: &Poly, k: i64) -> Vec<Vec<Q>> {
    let d = degree(f);
    let mut rows = Vec::new();
    for v in 0..3 {
        let fv = partial(f, v);
        for m in monomials(k - (d - 1)) {
            rows.push(to_vector(&times_monomial(&fv, m), k));
        }
    }
    rows
}

pub fn jacobian_dim(f: &Poly, k: i64) -> usize {
    rank(jacobian_rows(f, k))
}

pub fn milnor(f: &Poly, k: i64) -> usize {
    if k < 0 {
        return 0;
    }
    monomials(k).len() - jacobian_dim(f, k)
}

/// `dim AR(f)_q`: the rows of `J_{q+d-1}` are exactly the images of the
/// `3 dim S_q` basis relations, so the kernel is what the rank misses.
pub fn ar(f: &Poly, q: i64) -> usize {
    if q < 0 {
        return 0;
    }
    3 * monomials(q).len() - jacobian_dim(f, q + degree(f) - 1)
}

pub fn mdr(f: &Poly) -> i64 {
    (0..).find(|&q| ar(f, q) > 0).unwrap()
}

/// `T = 3(d - 2)`.
pub fn t(f: &Poly) -> i64 {
    3 * (degree(f) - 2)
}

pub fn tau(f: &Poly) -> usize {
    let t = t(f);
    let a = milnor(f, t + 1);
    assert_eq!(a, milnor(f, t + 2), "Hilbert function not yet stable");
    a
}

/// `dim { g in S_k : g m in J_f for every monomial m of degree n }`.
pub fn saturation(f: &Poly, k: i64, n: i64) -> usize {
    let mut echelon = jacobian_rows(f, k + n);
    let pivots = row_reduce(&mut echelon);
    let basis = monomials(k);
    // residual of each g * m modulo J, stacked over all m, one column per g
    let mut rows: Vec<Vec<Q>> = Vec::new();
    for m in monomials(n) {
        let residuals: Vec<Vec<Q>> = basis
            .iter()
            .map(|g| {
                let mut v = to_vector(&BTreeMap::from([([g[0] + m[0], g[1] + m[1], g[2] + m[2]], Q::one())]), k + n);
                for (row, &c) in echelon.iter().zip(&pivots) {
                    if !v[c].is_zero() {
                        let f = v[c].clone();
                        for (x, y) in v.iter_mut().zip(row) {
                            *x = &*x - &f * y;
                        }
                    }
                }
                v
            })
            .collect();
        let width = residuals.first().map_or(0, |r| r.len());
        for coord in 0..width {
            let row: Vec<Q> = residuals.iter().map(|r| r[coord].clone()).collect();
            if row.iter().any(|x| !x.is_zero()) {
                rows.push(row);
            }
        }
    }
    basis.len() - rank(rows)
}

/// `dim N(f)_k` for `0 <= k <= T`, saturating with `N = T - k + 2`.
pub fn defect(f: &Poly) -> Vec<usize> {
    let t = t(f);
    (0..=t)
        .map(|k| {
            let sat = saturation(f, k, t - k + 2);
            sat - jacobian_dim(f, k)
        })
        .collect()
}
