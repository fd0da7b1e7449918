//! Recursive-descent parser for polynomial expressions in `x, y, z`.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := ('+' | '-') unary | power
//! power  := atom ('^' integer)?
//! atom   := integer | 'x' | 'y' | 'z' | '(' expr ')'
//! ```
//!
//! Division is only allowed by nonzero constants, so `1/2*x^2` and
//! `x^2/3` both work.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{HomPoly, Monomial, Rational, Variable};
use crate::error::{Error, Result};

const MAX_EXPONENT: u32 = 4096;

/// Parses and expands `text`; the result must be a nonzero homogeneous form.
pub fn parse_poly(text: &str) -> Result<HomPoly> {
    let mut parser = Parser { src: text.as_bytes(), pos: 0 };
    let p = parser.expr()?;
    parser.skip_ws();
    if parser.pos < parser.src.len() {
        return Err(parser.error("unexpected trailing input"));
    }
    let mut degrees = p.terms.keys().map(Monomial::degree);
    let Some(first) = degrees.next() else {
        return Err(Error::ZeroPolynomial);
    };
    let (low, high) = degrees.fold((first, first), |(lo, hi), d| (lo.min(d), hi.max(d)));
    if low != high {
        return Err(Error::NotHomogeneous { low, high });
    }
    Ok(HomPoly { degree: low, terms: p.terms })
}

/// A not necessarily homogeneous polynomial, used while expanding.
#[derive(Clone)]
struct Expr {
    terms: BTreeMap<Monomial, Rational>,
}

impl Expr {
    fn constant(c: Rational) -> Expr {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::ONE, c);
        }
        Expr { terms }
    }

    fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&Monomial::ONE).cloned(),
            _ => None,
        }
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        let slot = self.terms.entry(m).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&m);
        }
    }

    fn add(mut self, other: &Expr, sign: bool) -> Expr {
        for (m, c) in &other.terms {
            self.add_term(*m, if sign { c.clone() } else { -c });
        }
        self
    }

    fn mul(&self, other: &Expr) -> Expr {
        let mut out = Expr { terms: BTreeMap::new() };
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    fn pow(&self, mut n: u32) -> Expr {
        let mut base = self.clone();
        let mut acc = Expr::constant(Rational::one());
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, message: &str) -> Error {
        Error::Syntax { offset: self.pos, message: message.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut acc = self.term()?;
        while let Some(op @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = acc.add(&rhs, op == b'+');
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Expr> {
        let mut acc = self.unary()?;
        while let Some(op @ (b'*' | b'/')) = self.peek() {
            self.pos += 1;
            let at = self.pos;
            let rhs = self.unary()?;
            if op == b'*' {
                acc = acc.mul(&rhs);
            } else {
                match rhs.as_constant() {
                    Some(c) if !c.is_zero() => acc = acc.mul(&Expr::constant(c.recip())),
                    Some(_) => {
                        return Err(Error::Syntax { offset: at, message: "division by zero".into() })
                    }
                    None => {
                        return Err(Error::Syntax {
                            offset: at,
                            message: "division by a non-constant".into(),
                        })
                    }
                }
            }
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Expr> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                let e = self.unary()?;
                Ok(Expr::constant(Rational::zero()).add(&e, false))
            }
            Some(b'+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let digits = self.digits();
            if digits.is_empty() {
                return Err(self.error("expected a nonnegative integer exponent"));
            }
            let n: u32 = digits
                .parse()
                .ok()
                .filter(|&n| n <= MAX_EXPONENT)
                .ok_or_else(|| self.error("exponent too large"))?;
            return Ok(base.pow(n));
        }
        Ok(base)
    }

    fn digits(&mut self) -> String {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.src[start..self.pos]).into_owned()
    }

    fn atom(&mut self) -> Result<Expr> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.error("expected ')'"));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(c @ (b'x' | b'y' | b'z')) => {
                self.pos += 1;
                let v = match c {
                    b'x' => Variable::X,
                    b'y' => Variable::Y,
                    _ => Variable::Z,
                };
                let mut terms = BTreeMap::new();
                terms.insert(Monomial::var(v), Rational::one());
                Ok(Expr { terms })
            }
            Some(c) if c.is_ascii_digit() => {
                let digits = self.digits();
                let n: BigInt = digits.parse().map_err(|_| self.error("bad integer literal"))?;
                Ok(Expr::constant(Rational::from_integer(n)))
            }
            Some(_) => Err(self.error("expected a number, a variable or '('")),
            None => Err(self.error("unexpected end of input")),
        }
    }
}
