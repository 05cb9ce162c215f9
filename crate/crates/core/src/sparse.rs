//! Row-sparse rational matrices, used for the block-structured
//! presentations of pushforwards.

use num_traits::Zero;

use crate::matrix::ExactMatrix;
use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    rows: usize,
    cols: usize,
    /// Nonzero entries of each row, sorted by column.
    entries: Vec<Vec<(usize, Rational)>>,
}

impl SparseMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        SparseMatrix {
            rows,
            cols,
            entries: vec![Vec::new(); rows],
        }
    }

    pub fn from_dense(m: &ExactMatrix) -> Self {
        let mut s = SparseMatrix::zeros(m.rows(), m.cols());
        s.paste(0, 0, m);
        s
    }

    pub fn to_dense(&self) -> ExactMatrix {
        let mut out = ExactMatrix::zeros(self.rows, self.cols);
        for (i, row) in self.entries.iter().enumerate() {
            for (j, v) in row {
                out.set(i, *j, v.clone());
            }
        }
        out
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[(usize, Rational)] {
        &self.entries[i]
    }

    /// Writes `block` at `(r0, c0)`; the region must be empty.
    pub fn paste(&mut self, r0: usize, c0: usize, block: &ExactMatrix) {
        assert!(
            r0 + block.rows() <= self.rows && c0 + block.cols() <= self.cols,
            "paste out of bounds"
        );
        for i in 0..block.rows() {
            let row = &mut self.entries[r0 + i];
            let before = row.len();
            for j in 0..block.cols() {
                let v = block.get(i, j);
                if !v.is_zero() {
                    row.push((c0 + j, v.clone()));
                }
            }
            if row.len() > before {
                row.sort_by_key(|e| e.0);
            }
        }
    }

    /// Rows `r0 .. r0 + n` as a dense matrix.
    pub fn row_block(&self, r0: usize, n: usize) -> ExactMatrix {
        let mut out = ExactMatrix::zeros(n, self.cols);
        for i in 0..n {
            for (j, v) in &self.entries[r0 + i] {
                out.set(i, *j, v.clone());
            }
        }
        out
    }

    /// Columns `c0 .. c0 + n` as a dense matrix.
    pub fn col_block(&self, c0: usize, n: usize) -> ExactMatrix {
        let mut out = ExactMatrix::zeros(self.rows, n);
        for (i, row) in self.entries.iter().enumerate() {
            let start = row.partition_point(|e| e.0 < c0);
            for (j, v) in row[start..].iter().take_while(|e| e.0 < c0 + n) {
                out.set(i, j - c0, v.clone());
            }
        }
        out
    }

    /// `self * d`.
    pub fn mul_dense(&self, d: &ExactMatrix) -> ExactMatrix {
        assert_eq!(
            self.cols,
            d.rows(),
            "cannot multiply {}x{} by {}x{}",
            self.rows,
            self.cols,
            d.rows(),
            d.cols()
        );
        let mut out = ExactMatrix::zeros(self.rows, d.cols());
        for (i, row) in self.entries.iter().enumerate() {
            for j in 0..d.cols() {
                let mut acc = Rational::zero();
                for (k, v) in row {
                    let b = d.get(*k, j);
                    if !b.is_zero() {
                        acc += v * b;
                    }
                }
                out.set(i, j, acc);
            }
        }
        out
    }

    /// `d * s`.
    pub fn dense_mul(d: &ExactMatrix, s: &SparseMatrix) -> ExactMatrix {
        assert_eq!(
            d.cols(),
            s.rows,
            "cannot multiply {}x{} by {}x{}",
            d.rows(),
            d.cols(),
            s.rows,
            s.cols
        );
        let mut out = ExactMatrix::zeros(d.rows(), s.cols);
        let mut acc = vec![Rational::zero(); s.cols];
        for i in 0..d.rows() {
            acc.iter_mut().for_each(|v| v.set_zero());
            for (k, row) in s.entries.iter().enumerate() {
                let a = d.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for (j, v) in row {
                    acc[*j] += a * v;
                }
            }
            for (j, v) in acc.iter().enumerate() {
                out.set(i, j, v.clone());
            }
        }
        out
    }

    /// `self * R`, where row `k` of `R` is row `row_of[k]` of `rhs`, or zero
    /// for `None`.
    pub fn mul_gathered(&self, rhs: &SparseMatrix, row_of: &[Option<usize>]) -> ExactMatrix {
        assert_eq!(self.cols, row_of.len(), "gather map has the wrong length");
        let mut out = ExactMatrix::zeros(self.rows, rhs.cols);
        let mut acc = vec![Rational::zero(); rhs.cols];
        for (i, row) in self.entries.iter().enumerate() {
            acc.iter_mut().for_each(|v| v.set_zero());
            for (k, a) in row {
                let Some(src) = row_of[*k] else { continue };
                for (j, b) in &rhs.entries[src] {
                    acc[*j] += a * b;
                }
            }
            for (j, v) in acc.iter().enumerate() {
                out.set(i, j, v.clone());
            }
        }
        out
    }

    /// `self * rhs` as a dense matrix.
    pub fn mul_sparse(&self, rhs: &SparseMatrix) -> ExactMatrix {
        let rows: Vec<Option<usize>> = (0..rhs.rows).map(Some).collect();
        self.mul_gathered(rhs, &rows)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn products_match_dense() {
        let a = ExactMatrix::from_i64(&[&[1, 0, 2], &[0, -3, 0]]);
        let b = ExactMatrix::from_i64(&[&[0, 1], &[4, 0], &[5, 6]]);
        let (sa, sb) = (SparseMatrix::from_dense(&a), SparseMatrix::from_dense(&b));
        assert_eq!(sa.to_dense(), a);
        assert_eq!(sa.mul_dense(&b), a.mul(&b));
        assert_eq!(SparseMatrix::dense_mul(&a, &sb), a.mul(&b));
        assert_eq!(sa.mul_sparse(&sb), a.mul(&b));
        assert_eq!(sa.col_block(1, 2), a.submatrix(0, 1, 2, 2));
        assert_eq!(sb.row_block(1, 2), b.submatrix(1, 0, 2, 2));
        // gathering rows 2, none, 0 of b
        let g = sa.mul_gathered(&sb, &[Some(2), None, Some(0)]);
        let r = ExactMatrix::from_i64(&[&[5, 6], &[0, 0], &[0, 1]]);
        assert_eq!(g, a.mul(&r));
    }
}
