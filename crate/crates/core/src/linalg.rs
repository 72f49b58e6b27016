//! Dense Gaussian elimination over a [`Field`].

use crate::ring::Field;

/// Brings `rows` to reduced row echelon form in place and returns the pivot
/// columns. Zero rows are removed.
pub fn rref<F: Field>(field: &F, rows: &mut Vec<Vec<F::Elem>>) -> Vec<usize> {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !field.is_zero(&rows[i][c])) else {
            continue;
        };
        rows.swap(r, p);
        let inv = field.inv(&rows[r][c]).unwrap();
        for x in rows[r].iter_mut() {
            *x = field.mul(x, &inv);
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || field.is_zero(&row[c]) {
                continue;
            }
            let f = row[c].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                if !field.is_zero(p) {
                    *x = field.sub(x, &field.mul(&f, p));
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

pub fn rank<F: Field>(field: &F, rows: &[Vec<F::Elem>]) -> usize {
    let mut m = rows.to_vec();
    rref(field, &mut m).len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::PrimeField;

    #[test]
    fn rank_of_small_matrices() {
        let f = PrimeField::new(7).unwrap();
        let m = vec![vec![1, 2, 3], vec![2, 4, 6], vec![0, 1, 1]];
        assert_eq!(rank(&f, &m), 2);
        let mut m2 = m.clone();
        let piv = rref(&f, &mut m2);
        assert_eq!(piv, vec![0, 1]);
        assert_eq!(m2[0], vec![1, 0, 1]);
        assert_eq!(rank::<PrimeField>(&f, &[]), 0);
    }
}
