use core::fmt::Debug;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::poly::Rational;

/// Primes just below 2^61. The multi-modular path uses the first two that
/// do not divide any denominator of the input.
pub const PRIMES: [u64; 5] = [
    2305843009213693951,
    2305843009213693921,
    2305843009213693907,
    2305843009213693723,
    2305843009213693693,
];

pub(crate) trait Field {
    type Elem: Clone + PartialEq + Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Self::Elem;
    fn reduce(&self, q: &Rational) -> Option<Self::Elem>;

    /// `dst[i] -= factor * src[i]`
    fn sub_scaled(&self, dst: &mut [Self::Elem], factor: &Self::Elem, src: &[Self::Elem]) {
        for (d, s) in dst.iter_mut().zip(src) {
            if !self.is_zero(s) {
                *d = self.sub(d, &self.mul(factor, s));
            }
        }
    }

    fn scale(&self, row: &mut [Self::Elem], factor: &Self::Elem) {
        for a in row.iter_mut() {
            if !self.is_zero(a) {
                *a = self.mul(a, factor);
            }
        }
    }
}

/// `Z/pZ` for an odd prime `p < 2^63`, elements kept in Montgomery form.
#[derive(Debug, Clone, Copy)]
pub(crate) struct PrimeField {
    p: u64,
    neg_p_inv: u64,
    r2: u64,
    one: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Self {
        assert!(p % 2 == 1 && p < (1 << 63));
        // Newton iteration for p^{-1} mod 2^64
        let mut inv = p;
        for _ in 0..6 {
            inv = inv.wrapping_mul(2u64.wrapping_sub(p.wrapping_mul(inv)));
        }
        let r = ((1u128 << 64) % p as u128) as u64;
        let r2 = ((r as u128 * r as u128) % p as u128) as u64;
        PrimeField { p, neg_p_inv: inv.wrapping_neg(), r2, one: r }
    }

    #[inline(always)]
    fn redc(&self, t: u128) -> u64 {
        let m = (t as u64).wrapping_mul(self.neg_p_inv);
        let u = ((t + m as u128 * self.p as u128) >> 64) as u64;
        if u >= self.p {
            u - self.p
        } else {
            u
        }
    }

    pub fn mont_in(&self, a: u64) -> u64 {
        self.redc(a as u128 * self.r2 as u128)
    }

    #[cfg(test)]
    pub fn mont_out(&self, a: u64) -> u64 {
        self.redc(a as u128)
    }

    fn reduce_int(&self, n: &BigInt) -> u64 {
        let r = n.mod_floor(&BigInt::from(self.p));
        self.mont_in(r.to_u64().expect("residue fits in u64"))
    }

    fn pow(&self, a: u64, mut e: u64) -> u64 {
        let mut base = a;
        let mut acc = self.one;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }
}

impl Field for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }

    fn one(&self) -> u64 {
        self.one
    }

    #[inline(always)]
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }

    #[inline(always)]
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + (self.p - b)
        }
    }

    #[inline(always)]
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        self.redc(*a as u128 * *b as u128)
    }

    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }

    fn inv(&self, a: &u64) -> u64 {
        assert!(*a != 0, "inverting zero");
        self.pow(*a, self.p - 2)
    }

    fn reduce(&self, q: &Rational) -> Option<u64> {
        let den = self.reduce_int(q.denom());
        if den == 0 {
            return None;
        }
        Some(self.mul(&self.reduce_int(q.numer()), &self.inv(&den)))
    }

    fn sub_scaled(&self, dst: &mut [u64], factor: &u64, src: &[u64]) {
        let f = *factor;
        for (d, &s) in dst.iter_mut().zip(src) {
            if s != 0 {
                let prod = self.redc(f as u128 * s as u128);
                *d = self.sub(d, &prod);
            }
        }
    }
}

/// The rationals, for the certified path.
#[derive(Debug, Clone, Copy, Default)]
pub(crate) struct RationalField;

impl Field for RationalField {
    type Elem = Rational;

    fn zero(&self) -> Rational {
        Rational::zero()
    }

    fn one(&self) -> Rational {
        Rational::one()
    }

    fn is_zero(&self, a: &Rational) -> bool {
        a.is_zero()
    }

    fn sub(&self, a: &Rational, b: &Rational) -> Rational {
        a - b
    }

    fn mul(&self, a: &Rational, b: &Rational) -> Rational {
        a * b
    }

    fn neg(&self, a: &Rational) -> Rational {
        -a
    }

    fn inv(&self, a: &Rational) -> Rational {
        a.recip()
    }

    fn reduce(&self, q: &Rational) -> Option<Rational> {
        Some(q.clone())
    }
}
