use alloc::vec::Vec;

use super::field::Field;

/// Reduced row echelon form of a list of row vectors.
///
/// Every stored row has a 1 in its pivot column and zeros in all other
/// pivot columns.
#[derive(Debug, Clone)]
pub(crate) struct Echelon<E> {
    pub pivots: Vec<usize>,
    pub rows: Vec<Vec<E>>,
    pub cols: usize,
}

impl<E: Clone> Echelon<E> {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Marks each column with the pivot row it belongs to, if any.
    pub fn pivot_of_column(&self) -> Vec<Option<usize>> {
        let mut out = alloc::vec![None; self.cols];
        for (i, &c) in self.pivots.iter().enumerate() {
            out[c] = Some(i);
        }
        out
    }
}

pub(crate) fn reduced_echelon<F: Field>(
    field: &F,
    mut rows: Vec<Vec<F::Elem>>,
    cols: usize,
) -> Echelon<F::Elem> {
    let n = rows.len();
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..cols {
        if rank == n {
            break;
        }
        let Some(r) = (rank..n).find(|&r| !field.is_zero(&rows[r][col])) else {
            continue;
        };
        rows.swap(rank, r);
        let inv = field.inv(&rows[rank][col]);
        field.scale(&mut rows[rank][col..], &inv);
        let (head, tail) = rows.split_at_mut(rank);
        let (pivot_row, tail) = tail.split_first_mut().expect("pivot row exists");
        for row in head.iter_mut().chain(tail.iter_mut()) {
            if field.is_zero(&row[col]) {
                continue;
            }
            let factor = row[col].clone();
            field.sub_scaled(&mut row[col..], &factor, &pivot_row[col..]);
        }
        pivots.push(col);
        rank += 1;
    }
    rows.truncate(rank);
    Echelon { pivots, rows, cols }
}

/// Rank by forward elimination only.
pub(crate) fn rank_of_rows<F: Field>(field: &F, mut rows: Vec<Vec<F::Elem>>, cols: usize) -> usize {
    let n = rows.len();
    let mut rank = 0;
    for col in 0..cols {
        if rank == n {
            break;
        }
        let Some(r) = (rank..n).find(|&r| !field.is_zero(&rows[r][col])) else {
            continue;
        };
        rows.swap(rank, r);
        let inv = field.inv(&rows[rank][col]);
        field.scale(&mut rows[rank][col..], &inv);
        let (head, tail) = rows.split_at_mut(rank + 1);
        let pivot_row = &head[rank];
        for row in tail.iter_mut() {
            if field.is_zero(&row[col]) {
                continue;
            }
            let factor = row[col].clone();
            field.sub_scaled(&mut row[col..], &factor, &pivot_row[col..]);
        }
        rank += 1;
    }
    rank
}
