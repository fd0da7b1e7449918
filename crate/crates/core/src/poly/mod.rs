//! Homogeneous polynomials in `x, y, z` over the rationals.

mod context;
mod parse;

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub use context::{make_context, CurveContext};
pub use parse::parse_poly;

pub type Rational = BigRational;

/// Dimension of the graded piece `S_k`, zero for negative `k`.
pub fn dim_s(k: i64) -> usize {
    if k < 0 {
        0
    } else {
        let k = k as usize;
        (k + 1) * (k + 2) / 2
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Variable {
    X,
    Y,
    Z,
}

impl Variable {
    pub const ALL: [Variable; 3] = [Variable::X, Variable::Y, Variable::Z];

    pub(crate) fn slot(self) -> usize {
        match self {
            Variable::X => 0,
            Variable::Y => 1,
            Variable::Z => 2,
        }
    }

    pub fn name(self) -> char {
        match self {
            Variable::X => 'x',
            Variable::Y => 'y',
            Variable::Z => 'z',
        }
    }
}

/// `x^e[0] * y^e[1] * z^e[2]`.
///
/// The ordering is the canonical graded one: higher degree first, then
/// decreasing power of `x`, then decreasing power of `y`. Within one degree
/// it agrees with [`Monomial::index`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: [u32; 3],
}

impl Monomial {
    pub const ONE: Monomial = Monomial { exps: [0, 0, 0] };

    pub fn new(ex: u32, ey: u32, ez: u32) -> Self {
        Monomial { exps: [ex, ey, ez] }
    }

    pub fn var(v: Variable) -> Self {
        let mut exps = [0; 3];
        exps[v.slot()] = 1;
        Monomial { exps }
    }

    pub fn pow_of(v: Variable, n: u32) -> Self {
        let mut exps = [0; 3];
        exps[v.slot()] = n;
        Monomial { exps }
    }

    pub fn exponents(&self) -> [u32; 3] {
        self.exps
    }

    pub fn exponent(&self, v: Variable) -> u32 {
        self.exps[v.slot()]
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: [
                self.exps[0] + other.exps[0],
                self.exps[1] + other.exps[1],
                self.exps[2] + other.exps[2],
            ],
        }
    }

    /// Position of this monomial in the basis of `S_degree`.
    pub fn index(&self) -> usize {
        let s = (self.exps[1] + self.exps[2]) as usize;
        s * (s + 1) / 2 + self.exps[2] as usize
    }

    /// Inverse of [`Monomial::index`] for degree `k`.
    pub fn from_index(k: u32, index: usize) -> Monomial {
        // s is the largest integer with s(s+1)/2 <= index
        let mut s = 0usize;
        while (s + 1) * (s + 2) / 2 <= index {
            s += 1;
        }
        let c = index - s * (s + 1) / 2;
        debug_assert!(s <= k as usize && c <= s);
        Monomial::new(k - s as u32, (s - c) as u32, c as u32)
    }

    /// All monomials of degree `k`, in index order.
    pub fn basis(k: u32) -> Vec<Monomial> {
        let mut out = Vec::with_capacity(dim_s(k as i64));
        for s in 0..=k {
            for c in 0..=s {
                out.push(Monomial::new(k - s, s - c, c));
            }
        }
        out
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .degree()
            .cmp(&self.degree())
            .then(other.exps[0].cmp(&self.exps[0]))
            .then(other.exps[1].cmp(&self.exps[1]))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in Variable::ALL {
            let e = self.exponent(v);
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{}", v.name())?;
            } else {
                write!(f, "{}^{}", v.name(), e)?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

/// A homogeneous polynomial with no stored zero coefficients.
///
/// The zero polynomial keeps a nominal degree so that graded bookkeeping
/// (e.g. the components of a syzygy) stays uniform.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomPoly {
    degree: u32,
    terms: BTreeMap<Monomial, Rational>,
}

impl HomPoly {
    pub fn zero(degree: u32) -> Self {
        HomPoly { degree, terms: BTreeMap::new() }
    }

    pub fn monomial(m: Monomial, coeff: Rational) -> Self {
        let mut p = HomPoly::zero(m.degree());
        p.add_term(m, coeff);
        p
    }

    /// Builds a polynomial from terms, summing repeated monomials.
    ///
    /// Panics if a monomial has the wrong degree.
    pub fn from_terms<I>(degree: u32, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, Rational)>,
    {
        let mut p = HomPoly::zero(degree);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    /// Coefficients listed in the basis order of `S_degree`.
    pub fn from_dense(degree: u32, coeffs: &[Rational]) -> Self {
        assert_eq!(coeffs.len(), dim_s(degree as i64));
        let terms = coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (Monomial::from_index(degree, i), c.clone()))
            .collect();
        HomPoly { degree, terms }
    }

    pub fn to_dense(&self) -> Vec<Rational> {
        let mut out = alloc::vec![Rational::zero(); dim_s(self.degree as i64)];
        for (m, c) in &self.terms {
            out[m.index()] = c.clone();
        }
        out
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        assert_eq!(m.degree(), self.degree, "monomial {m} has the wrong degree");
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(m).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Terms in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn add(&self, other: &HomPoly) -> HomPoly {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        assert_eq!(self.degree, other.degree, "adding polynomials of different degrees");
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c.clone());
        }
        out
    }

    pub fn neg(&self) -> HomPoly {
        HomPoly {
            degree: self.degree,
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }

    pub fn sub(&self, other: &HomPoly) -> HomPoly {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Rational) -> HomPoly {
        if c.is_zero() {
            return HomPoly::zero(self.degree);
        }
        HomPoly {
            degree: self.degree,
            terms: self.terms.iter().map(|(m, a)| (*m, a * c)).collect(),
        }
    }

    pub fn mul(&self, other: &HomPoly) -> HomPoly {
        let mut out = HomPoly::zero(self.degree + other.degree);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    pub fn mul_monomial(&self, m: &Monomial) -> HomPoly {
        HomPoly {
            degree: self.degree + m.degree(),
            terms: self.terms.iter().map(|(k, c)| (k.mul(m), c.clone())).collect(),
        }
    }

    /// Formal partial derivative. The result has degree `deg - 1` (or stays
    /// at 0 for constants, as the zero polynomial).
    pub fn partial(&self, v: Variable) -> HomPoly {
        let mut out = HomPoly::zero(self.degree.saturating_sub(1));
        let slot = v.slot();
        for (m, c) in &self.terms {
            let e = m.exps[slot];
            if e == 0 {
                continue;
            }
            let mut exps = m.exps;
            exps[slot] -= 1;
            out.add_term(Monomial { exps }, c * Rational::from_integer(BigInt::from(e)));
        }
        out
    }

    /// Multiplies by the common denominator and divides by the content, so
    /// the result has coprime integer coefficients and a positive leading
    /// coefficient.
    pub fn primitive(&self) -> HomPoly {
        let Some((_, lead)) = self.terms.iter().next() else {
            return self.clone();
        };
        let mut den = BigInt::one();
        for c in self.terms.values() {
            den = num_integer::Integer::lcm(&den, c.denom());
        }
        let mut content = BigInt::zero();
        for c in self.terms.values() {
            let scaled = c.numer() * (&den / c.denom());
            content = num_integer::Integer::gcd(&content, &scaled);
        }
        let mut factor = Rational::new(den, content);
        if lead.is_negative() {
            factor = -factor;
        }
        self.scale(&factor)
    }
}

impl fmt::Display for HomPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let a = c.abs();
            let is_const = m.degree() == 0;
            if a.is_one() {
                if is_const {
                    f.write_str("1")?;
                } else {
                    write!(f, "{m}")?;
                }
            } else {
                if a.is_integer() {
                    write!(f, "{}", a.numer())?;
                } else {
                    write!(f, "{}/{}", a.numer(), a.denom())?;
                }
                if !is_const {
                    write!(f, "*{m}")?;
                }
            }
        }
        Ok(())
    }
}

impl HomPoly {
    /// Canonical text form, re-readable by [`parse_poly`].
    pub fn render(&self) -> String {
        alloc::format!("{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use proptest::prelude::*;

    fn q(n: i64) -> Rational {
        Rational::from_integer(BigInt::from(n))
    }

    #[test]
    fn dim_s_values() {
        assert_eq!(dim_s(0), 1);
        assert_eq!(dim_s(2), 6);
        assert_eq!(dim_s(-1), 0);
        assert_eq!(dim_s(-7), 0);
    }

    #[test]
    fn basis_order_and_index() {
        let b = Monomial::basis(2);
        let names: Vec<String> = b.iter().map(|m| alloc::format!("{m}")).collect();
        assert_eq!(names, vec!["x^2", "x*y", "x*z", "y^2", "y*z", "z^2"]);
        for k in 0..12u32 {
            let basis = Monomial::basis(k);
            assert_eq!(basis.len(), dim_s(k as i64));
            for (i, m) in basis.iter().enumerate() {
                assert_eq!(m.index(), i);
                assert_eq!(Monomial::from_index(k, i), *m);
            }
            assert!(basis.windows(2).all(|w| w[0] < w[1]));
        }
    }

    #[test]
    fn partial_examples() {
        let x3 = HomPoly::monomial(Monomial::new(3, 0, 0), q(1));
        assert_eq!(x3.partial(Variable::X), HomPoly::monomial(Monomial::new(2, 0, 0), q(3)));
        let y2z = HomPoly::monomial(Monomial::new(0, 2, 1), q(1));
        let dx = y2z.partial(Variable::X);
        assert!(dx.is_zero());
        assert_eq!(dx.degree(), 2);
        assert_eq!(y2z.partial(Variable::Y), HomPoly::monomial(Monomial::new(0, 1, 1), q(2)));
    }

    #[test]
    fn render_examples() {
        let p = parse_poly("y^2*z - x^3").unwrap();
        assert_eq!(p.render(), "-x^3 + y^2*z");
        let p = parse_poly("1/2*x^2 - 3*y*z + z^2").unwrap();
        assert_eq!(p.render(), "1/2*x^2 - 3*y*z + z^2");
    }

    #[test]
    fn primitive_clears_denominators() {
        let p = parse_poly("-1/2*x^2 + 3/4*y^2").unwrap();
        assert_eq!(p.primitive().render(), "2*x^2 - 3*y^2");
    }

    fn arb_poly(max_deg: u32) -> impl Strategy<Value = HomPoly> {
        (0..=max_deg).prop_flat_map(|deg| {
            let n = dim_s(deg as i64);
            proptest::collection::vec((-5i64..=5, 1i64..=3), n).prop_map(move |cs| {
                let coeffs: Vec<Rational> = cs
                    .into_iter()
                    .map(|(a, b)| Rational::new(BigInt::from(a), BigInt::from(b)))
                    .collect();
                HomPoly::from_dense(deg, &coeffs)
            })
        })
    }

    proptest! {
        #[test]
        fn leibniz_rule(p in arb_poly(3), r in arb_poly(3)) {
            for v in Variable::ALL {
                let lhs = p.mul(&r).partial(v);
                let rhs = p.partial(v).mul(&r).add(&p.mul(&r.partial(v)));
                // zero polys may carry different nominal degrees, compare terms
                prop_assert_eq!(lhs.terms().collect::<Vec<_>>(), rhs.terms().collect::<Vec<_>>());
            }
        }

        #[test]
        fn render_parse_round_trip(p in arb_poly(6)) {
            prop_assume!(!p.is_zero());
            let back = parse_poly(&p.render()).unwrap();
            prop_assert_eq!(back, p);
        }

        #[test]
        fn euler_relation(p in arb_poly(6)) {
            prop_assume!(!p.is_zero() && p.degree() > 0);
            let mut sum = HomPoly::zero(p.degree());
            for v in Variable::ALL {
                sum = sum.add(&p.partial(v).mul_monomial(&Monomial::var(v)));
            }
            prop_assert_eq!(sum, p.scale(&q(p.degree() as i64)));
        }

        #[test]
        fn multiplication_adds_degrees(p in arb_poly(4), r in arb_poly(4)) {
            prop_assert_eq!(p.mul(&r).degree(), p.degree() + r.degree());
        }
    }
}
