//! Fraction-free elimination over the integers.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Rank by Bareiss elimination. Every intermediate entry is a minor of the
/// input, so all divisions are exact.
pub(crate) fn bareiss_rank(mut a: Vec<Vec<BigInt>>, cols: usize) -> usize {
    let n = a.len();
    let mut prev = BigInt::one();
    let mut rank = 0;
    for col in 0..cols {
        if rank == n {
            break;
        }
        let Some(r) = (rank..n).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, r);
        let (head, tail) = a.split_at_mut(rank + 1);
        let pivot_row = &head[rank];
        let pivot = &pivot_row[col];
        for row in tail.iter_mut() {
            let lead = core::mem::take(&mut row[col]);
            for j in col + 1..cols {
                let v = pivot * &row[j] - &lead * &pivot_row[j];
                row[j] = if prev.is_one() { v } else { v / &prev };
            }
        }
        prev = pivot_row[col].clone();
        rank += 1;
    }
    rank
}

/// Fraction-free Gauss-Jordan elimination.
///
/// The Bareiss update is applied to the rows above the pivot as well, so
/// entries stay minors of the input and every division is exact. Returns
/// the pivot columns and, for each, its row. All pivot entries end up equal
/// to the same positive minor and every other pivot column of a row is zero.
pub(crate) fn integer_rref(mut a: Vec<Vec<BigInt>>, cols: usize) -> (Vec<usize>, Vec<Vec<BigInt>>) {
    let n = a.len();
    let mut pivots = Vec::new();
    let mut prev = BigInt::one();
    let mut rank = 0;
    for col in 0..cols {
        if rank == n {
            break;
        }
        let Some(r) = (rank..n).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, r);
        let (head, tail) = a.split_at_mut(rank);
        let (pivot_row, tail) = tail.split_first_mut().expect("pivot row exists");
        let pivot = pivot_row[col].clone();
        for row in head.iter_mut().chain(tail.iter_mut()) {
            let lead = core::mem::take(&mut row[col]);
            for j in 0..cols {
                if j == col {
                    continue;
                }
                let v = &pivot * &row[j] - &lead * &pivot_row[j];
                row[j] = if prev.is_one() { v } else { v / &prev };
            }
        }
        prev = pivot;
        pivots.push(col);
        rank += 1;
    }
    a.truncate(rank);
    if prev.is_negative() {
        for x in a.iter_mut().flatten() {
            *x = -core::mem::take(x);
        }
    }
    (pivots, a)
}

/// Divides by the gcd of the entries.
pub(crate) fn make_primitive(v: &mut [BigInt]) {
    let mut g = BigInt::zero();
    for x in v.iter() {
        if !x.is_zero() {
            g = g.gcd(x);
            if g.is_one() {
                return;
            }
        }
    }
    if g.is_zero() || g.is_one() {
        return;
    }
    for x in v.iter_mut() {
        if !x.is_zero() {
            *x = &*x / &g;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn m(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
    }

    #[test]
    fn bareiss_ranks() {
        assert_eq!(bareiss_rank(m(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]), 3), 3);
        assert_eq!(bareiss_rank(m(&[&[0, 0], &[0, 0]]), 2), 0);
        assert_eq!(bareiss_rank(m(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]), 3), 2);
        assert_eq!(bareiss_rank(m(&[&[0, 2, 4], &[0, 1, 2], &[0, 3, 7]]), 3), 2);
    }

    #[test]
    fn rref_has_equal_pivots() {
        let (piv, rows) = integer_rref(m(&[&[2, 4, 6], &[3, 5, 7]]), 3);
        assert_eq!(piv, vec![0, 1]);
        assert_eq!(rows, m(&[&[2, 0, -2], &[0, 2, 4]]));
        let (piv, rows) = integer_rref(m(&[&[0, 3, 1], &[0, 6, 2], &[1, 1, 1]]), 3);
        assert_eq!(piv, vec![0, 1]);
        assert_eq!(rows, m(&[&[6, 0, 4], &[0, 6, 2]]));
    }
}
