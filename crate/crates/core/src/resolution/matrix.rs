//! Sparse matrices of homogeneous polynomials between graded free modules.

use std::fmt;

use crate::error::{Error, Result};
use crate::ring::{Field, Polynomial, RingRef};

/// A map `⊕ A(-c_j) -> ⊕ A(-r_i)`; column `j` is the image of the `j`-th
/// basis element, stored sparsely as `(row, entry)` pairs sorted by row.
#[derive(Clone)]
pub struct GradedMatrix<F: Field> {
    ring: RingRef<F>,
    row_degs: Vec<u32>,
    col_degs: Vec<u32>,
    cols: Vec<Vec<(usize, Polynomial<F>)>>,
}

impl<F: Field> GradedMatrix<F> {
    pub fn new(
        ring: &RingRef<F>,
        row_degs: Vec<u32>,
        col_degs: Vec<u32>,
        cols: Vec<Vec<(usize, Polynomial<F>)>>,
    ) -> Result<Self> {
        if cols.len() != col_degs.len() {
            return Err(Error::Arity(
                "column count differs from column degrees".into(),
            ));
        }
        let mut cols = cols;
        for (j, col) in cols.iter_mut().enumerate() {
            col.retain(|(_, p)| !p.is_zero());
            col.sort_by_key(|(r, _)| *r);
            for (r, p) in col.iter() {
                if *r >= row_degs.len() {
                    return Err(Error::Arity(format!("row index {r} out of range")));
                }
                let want = col_degs[j] as i64 - row_degs[*r] as i64;
                if p.homogeneous_degree().map(|d| d as i64) != Some(want) {
                    return Err(Error::NotHomogeneous);
                }
            }
        }
        Ok(GradedMatrix {
            ring: ring.clone(),
            row_degs,
            col_degs,
            cols,
        })
    }

    pub fn ring(&self) -> &RingRef<F> {
        &self.ring
    }

    pub fn nrows(&self) -> usize {
        self.row_degs.len()
    }

    pub fn ncols(&self) -> usize {
        self.col_degs.len()
    }

    pub fn row_degrees(&self) -> &[u32] {
        &self.row_degs
    }

    pub fn col_degrees(&self) -> &[u32] {
        &self.col_degs
    }

    pub fn column(&self, j: usize) -> &[(usize, Polynomial<F>)] {
        &self.cols[j]
    }

    pub fn entry(&self, r: usize, c: usize) -> Polynomial<F> {
        self.cols[c]
            .iter()
            .find(|(i, _)| *i == r)
            .map(|(_, p)| p.clone())
            .unwrap_or_else(|| Polynomial::zero(&self.ring))
    }

    /// Some nonzero constant entry, if any.
    pub fn find_unit(&self) -> Option<(usize, usize)> {
        self.find_unit_live(&vec![false; self.nrows()], &vec![false; self.ncols()])
    }

    pub(crate) fn find_unit_live(
        &self,
        dead_rows: &[bool],
        dead_cols: &[bool],
    ) -> Option<(usize, usize)> {
        for (c, col) in self.cols.iter().enumerate() {
            if dead_cols[c] {
                continue;
            }
            for (r, p) in col {
                if !dead_rows[*r] && p.is_unit() {
                    return Some((*r, c));
                }
            }
        }
        None
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(|c| c.is_empty())
    }

    /// `self * other` (apply `other` first).
    pub fn compose(&self, other: &GradedMatrix<F>) -> Result<GradedMatrix<F>> {
        if other.nrows() != self.ncols() {
            return Err(Error::Arity("matrix shapes do not compose".into()));
        }
        let mut cols = Vec::with_capacity(other.ncols());
        for col in &other.cols {
            let mut acc: Vec<Polynomial<F>> = vec![Polynomial::zero(&self.ring); self.nrows()];
            for (k, b) in col {
                for (r, a) in &self.cols[*k] {
                    acc[*r] = &acc[*r] + &(a * b);
                }
            }
            cols.push(
                acc.into_iter()
                    .enumerate()
                    .filter(|(_, p)| !p.is_zero())
                    .collect(),
            );
        }
        GradedMatrix::new(
            &self.ring,
            self.row_degs.clone(),
            other.col_degs.clone(),
            cols,
        )
    }

    /// `col[c'] -= (a_{r c'} / u) * col[c]` for every `c' != c`, where
    /// `u = a_{rc}` is a nonzero constant; afterwards row `r` is zero
    /// outside column `c`. Columns flagged in `skip` are left alone.
    pub(crate) fn clear_row(&mut self, r: usize, c: usize, skip: &[bool]) {
        let field = self.ring.field().clone();
        let u = self.entry(r, c);
        let uinv = field.inv(&u.terms()[0].0).unwrap();
        let pivot = self.cols[c].clone();
        for cc in 0..self.cols.len() {
            if cc == c || skip[cc] {
                continue;
            }
            let Some(a) = self.cols[cc]
                .iter()
                .find(|(i, _)| *i == r)
                .map(|(_, p)| p.scale(&uinv))
            else {
                continue;
            };
            let mut merged: Vec<(usize, Polynomial<F>)> =
                Vec::with_capacity(self.cols[cc].len() + pivot.len());
            let old = std::mem::take(&mut self.cols[cc]);
            let (mut i, mut j) = (0, 0);
            while i < old.len() || j < pivot.len() {
                let ri = old.get(i).map(|x| x.0).unwrap_or(usize::MAX);
                let rj = pivot.get(j).map(|x| x.0).unwrap_or(usize::MAX);
                if ri < rj {
                    merged.push(old[i].clone());
                    i += 1;
                } else if rj < ri {
                    merged.push((rj, (&a * &pivot[j].1).neg()));
                    j += 1;
                } else {
                    let v = &old[i].1 - &(&a * &pivot[j].1);
                    if !v.is_zero() {
                        merged.push((ri, v));
                    }
                    i += 1;
                    j += 1;
                }
            }
            self.cols[cc] = merged;
        }
    }

    /// Deletes the given rows and columns, renumbering the rest.
    pub(crate) fn drop_rows_cols(&mut self, rows: &[bool], cols: &[bool]) {
        let mut new_index = vec![usize::MAX; self.row_degs.len()];
        let mut k = 0;
        for (i, &gone) in rows.iter().enumerate() {
            if !gone {
                new_index[i] = k;
                k += 1;
            }
        }
        let row_degs = self
            .row_degs
            .iter()
            .zip(rows)
            .filter(|(_, g)| !**g)
            .map(|(d, _)| *d)
            .collect();
        let mut new_cols = Vec::new();
        let mut col_degs = Vec::new();
        for (j, col) in std::mem::take(&mut self.cols).into_iter().enumerate() {
            if cols[j] {
                continue;
            }
            col_degs.push(self.col_degs[j]);
            new_cols.push(
                col.into_iter()
                    .filter(|(r, _)| !rows[*r])
                    .map(|(r, p)| (new_index[r], p))
                    .collect(),
            );
        }
        self.row_degs = row_degs;
        self.col_degs = col_degs;
        self.cols = new_cols;
    }
}

impl<F: Field> fmt::Debug for GradedMatrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "GradedMatrix {}x{} rows {:?} cols {:?}",
            self.nrows(),
            self.ncols(),
            self.row_degs,
            self.col_degs
        )?;
        for r in 0..self.nrows() {
            let row: Vec<String> = (0..self.ncols())
                .map(|c| self.entry(r, c).to_string())
                .collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}
