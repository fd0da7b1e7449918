#![allow(dead_code)]

use jacsyz_core::{make_context, parse_poly, CurveContext, HomPoly, Monomial, Rational, Variable};
use num_bigint::BigInt;

/// `(polynomial, rational cuspidal)`.
pub const SMALL_CURVES: &[(&str, bool)] = &[
    ("x^2 + y^2 + z^2", false),
    ("x*y*z", false),
    ("x^3 - y^3", false),
    ("y^2*z - x^3", true),
    ("y^2*z - x^3 - x^2*z", false),
    ("x^4 + y^4 + z^4", false),
    ("x^4 + y^3*z", true),
    ("(y^2*z - x^3)*z", false),
    ("x*y*(x^2 + y^2 + z^2)", false),
    ("x^5 + y^4*z", true),
    ("y^2*z^3 - x^5", true),
];

pub const CORPUS_CURVES: &[(&str, bool)] = &[
    ("x^2 + y^2 + z^2", false),
    ("x^4 + y^4 + z^4", false),
    ("x^5 + y^5 + z^5", false),
    ("x*y*z", false),
    ("x^3 - y^3", false),
    ("y^2*z - x^3 - x^2*z", false),
    ("x*y*(x^2 + y^2 + z^2)", false),
    ("(y^2*z - x^3)*z", false),
    ("x*y*z*(x - y)*(x - z)*(y - z)", false),
    ("y^2*z - x^3", true),
    ("x^4 + y^3*z", true),
    ("x^5 + y^4*z", true),
    ("x^6 + y^5*z", true),
    ("x^7 + y^6*z", true),
    ("x^8 + y^7*z", true),
    ("x^15 + y^14*z", true),
    ("y^2*z^3 - x^5", true),
    ("y^3*z^4 - x^7", true),
    ("y^4*z^11 - x^15", true),
];

pub fn ctx(s: &str, cuspidal: bool) -> CurveContext {
    make_context(parse_poly(s).unwrap(), cuspidal).unwrap()
}

pub fn binom2(n: i64) -> i64 {
    if n < 2 {
        0
    } else {
        n * (n - 1) / 2
    }
}

/// `f(A (x, y, z)^T)` for an integer matrix `A`.
pub fn substitute(f: &HomPoly, a: [[i64; 3]; 3]) -> HomPoly {
    let q = |n: i64| Rational::from_integer(BigInt::from(n));
    let forms: Vec<HomPoly> = a
        .iter()
        .map(|row| {
            HomPoly::from_terms(
                1,
                Variable::ALL.iter().zip(row).map(|(&v, &c)| (Monomial::var(v), q(c))),
            )
        })
        .collect();
    let mut out = HomPoly::zero(f.degree());
    for (m, c) in f.terms() {
        let mut term = HomPoly::monomial(Monomial::new(0, 0, 0), c.clone());
        for (i, form) in forms.iter().enumerate() {
            for _ in 0..m.exponents()[i] {
                term = term.mul(form);
            }
        }
        out = out.add(&term);
    }
    out
}
