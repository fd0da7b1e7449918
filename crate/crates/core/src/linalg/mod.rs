//! Exact rank, kernel and membership for matrices of graded maps.
//!
//! Two rank routes are available. [`RankMode::MultiModular`] reduces the
//! matrix modulo two primes near 2^61 and falls back to the certified route
//! whenever they disagree. [`RankMode::Certified`] runs Bareiss elimination
//! over the integers.

mod bareiss;
pub(crate) mod echelon;
pub(crate) mod field;

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::Rational;
use field::{Field, PrimeField};

pub use field::PRIMES;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum RankMode {
    Certified,
    #[default]
    MultiModular,
}

/// A rational matrix stored by sparse columns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    columns: Vec<Vec<(usize, Rational)>>,
}

impl ExactMatrix {
    /// A matrix with `rows` rows and no columns yet.
    pub fn new(rows: usize) -> Self {
        ExactMatrix { rows, columns: Vec::new() }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix { rows, columns: alloc::vec![Vec::new(); cols] }
    }

    pub fn from_rows(rows: &[Vec<Rational>]) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let mut m = ExactMatrix::zeros(nrows, ncols);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), ncols, "ragged rows");
            for (j, x) in row.iter().enumerate() {
                if !x.is_zero() {
                    m.columns[j].push((i, x.clone()));
                }
            }
        }
        m
    }

    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Self {
        let rows: Vec<Vec<Rational>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| Rational::from_integer(BigInt::from(x))).collect())
            .collect();
        ExactMatrix::from_rows(&rows)
    }

    /// Appends a column given as `(row, value)` pairs; repeated rows are summed.
    pub fn push_column<I>(&mut self, entries: I)
    where
        I: IntoIterator<Item = (usize, Rational)>,
    {
        let mut col: Vec<(usize, Rational)> = Vec::new();
        for (r, x) in entries {
            assert!(r < self.rows, "row {r} out of range");
            col.push((r, x));
        }
        col.sort_by_key(|e| e.0);
        let mut merged: Vec<(usize, Rational)> = Vec::with_capacity(col.len());
        for (r, x) in col {
            match merged.last_mut() {
                Some((lr, lx)) if *lr == r => *lx += x,
                _ => merged.push((r, x)),
            }
        }
        merged.retain(|(_, x)| !x.is_zero());
        self.columns.push(merged);
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.columns.len()
    }

    pub fn get(&self, r: usize, c: usize) -> Rational {
        self.columns[c]
            .iter()
            .find(|e| e.0 == r)
            .map_or_else(Rational::zero, |e| e.1.clone())
    }

    /// Nonzero entries of column `c`, by increasing row.
    pub fn column(&self, c: usize) -> &[(usize, Rational)] {
        &self.columns[c]
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols());
        // integral products are summed without normalizing
        let mut ints = alloc::vec![BigInt::zero(); self.rows];
        let mut out = alloc::vec![Rational::zero(); self.rows];
        for (col, x) in self.columns.iter().zip(v) {
            if x.is_zero() {
                continue;
            }
            for (r, a) in col {
                if a.is_integer() && x.is_integer() {
                    ints[*r] += a.numer() * x.numer();
                } else {
                    out[*r] += a * x;
                }
            }
        }
        for (o, i) in out.iter_mut().zip(ints) {
            if !i.is_zero() {
                *o += Rational::from_integer(i);
            }
        }
        out
    }

    /// Rows of `self` followed by rows of `below`.
    pub fn stack(&self, below: &ExactMatrix) -> ExactMatrix {
        assert_eq!(self.cols(), below.cols());
        let columns = self
            .columns
            .iter()
            .zip(&below.columns)
            .map(|(a, b)| {
                let mut c = a.clone();
                c.extend(b.iter().map(|(r, x)| (r + self.rows, x.clone())));
                c
            })
            .collect();
        ExactMatrix { rows: self.rows + below.rows, columns }
    }

    /// Dense integer rows, each row scaled by the lcm of its denominators.
    /// Row scaling changes neither the rank nor the kernel.
    fn integer_rows(&self) -> Vec<Vec<BigInt>> {
        let mut denoms = alloc::vec![BigInt::one(); self.rows];
        for col in &self.columns {
            for (r, x) in col {
                if !x.denom().is_one() {
                    denoms[*r] = denoms[*r].lcm(x.denom());
                }
            }
        }
        let mut out = alloc::vec![alloc::vec![BigInt::zero(); self.cols()]; self.rows];
        for (c, col) in self.columns.iter().enumerate() {
            for (r, x) in col {
                out[*r][c] = x.numer() * (&denoms[*r] / x.denom());
            }
        }
        out
    }

    /// Dense rows reduced into `field`, or `None` if a denominator vanishes.
    pub(crate) fn rows_in<F: Field>(&self, field: &F) -> Option<Vec<Vec<F::Elem>>> {
        let mut out = alloc::vec![alloc::vec![field.zero(); self.cols()]; self.rows];
        for (c, col) in self.columns.iter().enumerate() {
            for (r, x) in col {
                out[*r][c] = field.reduce(x)?;
            }
        }
        Some(out)
    }

    fn orient_for_rank<F: Field>(&self, field: &F) -> Option<(Vec<Vec<F::Elem>>, usize)> {
        // eliminate along the shorter side
        if self.rows <= self.cols() {
            Some((self.rows_in(field)?, self.cols()))
        } else {
            let mut t = alloc::vec![alloc::vec![field.zero(); self.rows]; self.cols()];
            for (c, col) in self.columns.iter().enumerate() {
                for (r, x) in col {
                    t[c][*r] = field.reduce(x)?;
                }
            }
            Some((t, self.rows))
        }
    }
}

/// A canonical basis of a right kernel.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernelBasis {
    pub dimension: usize,
    /// Integral, content-free vectors whose first nonzero entry is positive.
    pub vectors: Vec<Vec<Rational>>,
}

/// Rank of `m` modulo `p`, or `None` when `p` divides a denominator.
pub fn modular_rank(m: &ExactMatrix, p: u64) -> Option<usize> {
    let field = PrimeField::new(p);
    let (rows, cols) = m.orient_for_rank(&field)?;
    Some(echelon::rank_of_rows(&field, rows, cols))
}

/// Rank over the rationals by fraction-free elimination.
pub fn certified_rank(m: &ExactMatrix) -> usize {
    bareiss::bareiss_rank(m.integer_rows(), m.cols())
}

/// Exact rank of `m` over the rationals.
pub fn rank(m: &ExactMatrix, mode: RankMode) -> usize {
    if m.rows() == 0 || m.cols() == 0 {
        return 0;
    }
    match mode {
        RankMode::Certified => certified_rank(m),
        RankMode::MultiModular => {
            let mut ranks = PRIMES.iter().filter_map(|&p| modular_rank(m, p));
            match (ranks.next(), ranks.next()) {
                (Some(a), Some(b)) if a == b => a,
                _ => certified_rank(m),
            }
        }
    }
}

/// Canonical basis of the right null space of `m`; every vector is checked
/// against `m` before it is returned.
pub fn kernel(m: &ExactMatrix) -> KernelBasis {
    let cols = m.cols();
    let int_rows = m.integer_rows();
    let (pivots, rows) = bareiss::integer_rref(int_rows.clone(), cols);
    let mut is_pivot = alloc::vec![false; cols];
    for &c in &pivots {
        is_pivot[c] = true;
    }
    let mut vectors = Vec::new();
    for free in (0..cols).filter(|&c| !is_pivot[c]) {
        // v[free] = L, v[pivot_i] = -row_i[free] * L / row_i[pivot_i]
        let mut l = BigInt::one();
        for (row, &pc) in rows.iter().zip(&pivots) {
            if !row[free].is_zero() {
                l = l.lcm(&row[pc]);
            }
        }
        let mut v = alloc::vec![BigInt::zero(); cols];
        v[free] = l.clone();
        for (row, &pc) in rows.iter().zip(&pivots) {
            if !row[free].is_zero() {
                v[pc] = -(&row[free] * (&l / &row[pc]));
            }
        }
        bareiss::make_primitive(&mut v);
        if v.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative()) {
            for x in v.iter_mut() {
                *x = -core::mem::take(x);
            }
        }
        // the integer rows are rescaled rows of m, so this is an exact check
        assert!(
            int_rows.iter().all(|r| r.iter().zip(&v).map(|(a, b)| a * b).sum::<BigInt>().is_zero()),
            "kernel vector failed verification"
        );
        vectors.push(v.into_iter().map(Rational::from_integer).collect());
    }
    KernelBasis { dimension: vectors.len(), vectors }
}

/// Whether `target` lies in the column span of `m`.
pub fn member(m: &ExactMatrix, target: &[Rational]) -> Result<bool> {
    if target.len() != m.rows() {
        return Err(Error::DimensionMismatch { expected: m.rows(), found: target.len() });
    }
    if target.iter().all(Zero::is_zero) {
        return Ok(true);
    }
    let mut extended = m.clone();
    extended.push_column(target.iter().cloned().enumerate());
    Ok(certified_rank(&extended) == certified_rank(m))
}
