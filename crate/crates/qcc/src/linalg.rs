//! Dense matrices over F_{q²} in the packed-code representation.

use crate::gf::{FieldTower, Fq2Table, FQ2_ZERO};
use std::sync::Arc;

#[derive(Debug, Clone)]
pub struct Fq2Matrix {
    tower: Arc<FieldTower>,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl Fq2Matrix {
    pub fn zero(tower: Arc<FieldTower>, rows: usize, cols: usize) -> Self {
        Fq2Matrix { tower, rows, cols, data: vec![FQ2_ZERO; rows * cols] }
    }

    pub fn from_rows(tower: Arc<FieldTower>, rows: Vec<Vec<u32>>) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        let n_rows = rows.len();
        let data = rows.into_iter().flatten().collect();
        Fq2Matrix { tower, rows: n_rows, cols, data }
    }

    pub fn tower(&self) -> &Arc<FieldTower> {
        &self.tower
    }

    pub fn field(&self) -> &Fq2Table {
        self.tower.fq2()
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[u32] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn data(&self) -> &[u32] {
        &self.data
    }

    /// Entrywise x ↦ x^q.
    pub fn conjugated(&self) -> Fq2Matrix {
        let f = self.field();
        Fq2Matrix {
            tower: Arc::clone(&self.tower),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&c| f.frob(c)).collect(),
        }
    }

    /// Indices of the rows kept by Gaussian elimination that processes rows
    /// top-down and keeps the earliest independent ones.
    pub fn independent_row_indices(&self) -> Vec<usize> {
        let f = self.field();
        let mut reduced: Vec<Vec<u32>> = Vec::new();
        let mut pivot_cols: Vec<usize> = Vec::new();
        let mut kept = Vec::new();
        for r in 0..self.rows {
            let mut row = self.row(r).to_vec();
            for (pr, &pc) in reduced.iter().zip(&pivot_cols) {
                let factor = row[pc];
                if factor != FQ2_ZERO {
                    for (x, &y) in row.iter_mut().zip(pr) {
                        *x = f.sub(*x, f.mul(factor, y));
                    }
                }
            }
            if let Some(pc) = row.iter().position(|&x| x != FQ2_ZERO) {
                let inv = f.inv(row[pc]);
                for x in row.iter_mut() {
                    *x = f.mul(inv, *x);
                }
                reduced.push(row);
                pivot_cols.push(pc);
                kept.push(r);
            }
        }
        kept
    }

    pub fn rank(&self) -> usize {
        self.independent_row_indices().len()
    }

    /// New matrix consisting of the given original rows, in order.
    pub fn select_rows(&self, indices: &[usize]) -> Fq2Matrix {
        let rows = indices.iter().map(|&r| self.row(r).to_vec()).collect();
        Fq2Matrix::from_rows(Arc::clone(&self.tower), rows)
    }

    /// Vertical concatenation.
    pub fn stacked(&self, below: &Fq2Matrix) -> Fq2Matrix {
        assert_eq!(self.cols, below.cols, "column mismatch in stack");
        let mut data = self.data.clone();
        data.extend_from_slice(&below.data);
        Fq2Matrix { tower: Arc::clone(&self.tower), rows: self.rows + below.rows, cols: self.cols, data }
    }

    /// Rank of the submatrix formed by the selected columns, computed in the
    /// caller's scratch buffer (avoids allocation in enumeration loops).
    pub fn column_subset_rank(&self, subset: &[usize], scratch: &mut Vec<u32>) -> usize {
        column_subset_rank(self.field(), &self.data, self.rows, self.cols, subset, scratch)
    }

    /// Entries as F_p coordinate vectors, row-major.
    pub fn to_coord_rows(&self) -> Vec<Vec<Vec<u64>>> {
        let f = self.field();
        (0..self.rows)
            .map(|r| self.row(r).iter().map(|&c| f.coords_from_code(c)).collect())
            .collect()
    }
}

/// Rank of the `subset` columns of a `rows`×`cols` row-major matrix.
pub fn column_subset_rank(
    f: &Fq2Table,
    data: &[u32],
    rows: usize,
    cols: usize,
    subset: &[usize],
    scratch: &mut Vec<u32>,
) -> usize {
    let w = subset.len();
    scratch.clear();
    scratch.reserve(rows * w);
    for r in 0..rows {
        let base = r * cols;
        for &c in subset {
            scratch.push(data[base + c]);
        }
    }
    let mut rank = 0;
    for col in 0..w {
        // find a pivot row at or below `rank`
        let Some(pivot) = (rank..rows).find(|&r| scratch[r * w + col] != FQ2_ZERO) else {
            continue;
        };
        if pivot != rank {
            for c in 0..w {
                scratch.swap(pivot * w + c, rank * w + c);
            }
        }
        let inv = f.inv(scratch[rank * w + col]);
        for c in col..w {
            scratch[rank * w + c] = f.mul(inv, scratch[rank * w + c]);
        }
        for r in 0..rows {
            if r == rank {
                continue;
            }
            let factor = scratch[r * w + col];
            if factor != FQ2_ZERO {
                for c in col..w {
                    let sub = f.mul(factor, scratch[rank * w + c]);
                    scratch[r * w + c] = f.sub(scratch[r * w + c], sub);
                }
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}
