//! Dense exact linear algebra over the rationals.
//!
//! Small helper used by the graded truncation oracle and by brute-force
//! test oracles. Deliberately independent of the Groebner machinery so the
//! two can cross-check each other.

use num_traits::Zero;

use crate::rational::Rational;

#[derive(Debug, Clone)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl QMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        QMatrix { rows, cols, data: vec![Rational::zero(); rows * cols] }
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map(|v| v.len()).unwrap_or(0);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend(row);
        }
        QMatrix { rows: r, cols: c, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.data[i * self.cols + j] = v;
    }

    /// In-place reduced row echelon form; returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let pivot_row = (row..self.rows).find(|&r| !self.get(r, col).is_zero());
            let pr = match pivot_row {
                None => continue,
                Some(pr) => pr,
            };
            if pr != row {
                for j in 0..self.cols {
                    self.data.swap(row * self.cols + j, pr * self.cols + j);
                }
            }
            let inv = {
                let p = self.get(row, col).clone();
                Rational::new(p.denom().clone(), p.numer().clone())
            };
            for j in col..self.cols {
                let v = self.get(row, j) * &inv;
                self.set(row, j, v);
            }
            for r in 0..self.rows {
                if r == row || self.get(r, col).is_zero() {
                    continue;
                }
                let factor = self.get(r, col).clone();
                for j in col..self.cols {
                    let v = self.get(r, j) - &(self.get(row, j) * &factor);
                    self.set(r, j, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rank(mut self) -> usize {
        self.rref().len()
    }

    /// Basis of the right kernel `{x : A x = 0}`, one vector per free column.
    pub fn kernel_basis(mut self) -> Vec<Vec<Rational>> {
        let pivots = self.rref();
        let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_set.contains(&free) {
                continue;
            }
            let mut v = vec![Rational::zero(); self.cols];
            v[free] = Rational::from_integer(1.into());
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = -self.get(r, free).clone();
            }
            basis.push(v);
        }
        basis
    }
}

/// Does `v` lie in the row span of `rows`?
pub fn in_row_span(rows: &[Vec<Rational>], v: &[Rational]) -> bool {
    if v.iter().all(|c| c.is_zero()) {
        return true;
    }
    if rows.is_empty() {
        return false;
    }
    let base = QMatrix::from_rows(rows.to_vec()).rank();
    let mut all = rows.to_vec();
    all.push(v.to_vec());
    QMatrix::from_rows(all).rank() == base
}
