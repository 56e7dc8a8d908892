//! Dense 0/1 matrices.

use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::linalg::IntMatrix;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BinaryMatrix {
    rows: usize,
    cols: usize,
    bits: Vec<bool>,
}

impl BinaryMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        BinaryMatrix {
            rows,
            cols,
            bits: vec![false; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> bool) -> Self {
        let mut bits = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                bits.push(f(i, j));
            }
        }
        BinaryMatrix { rows, cols, bits }
    }

    /// Interprets the low `rows·cols` bits of `mask` in row-major order.
    pub fn from_mask(rows: usize, cols: usize, mask: u64) -> Self {
        Self::from_fn(rows, cols, |i, j| mask >> (i * cols + j) & 1 == 1)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.bits[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        self.bits[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[bool] {
        &self.bits[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<bool> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn row_sums(&self) -> Vec<usize> {
        (0..self.rows)
            .map(|i| self.row(i).iter().filter(|&&b| b).count())
            .collect()
    }

    pub fn col_sums(&self) -> Vec<usize> {
        (0..self.cols)
            .map(|j| (0..self.rows).filter(|&i| self.get(i, j)).count())
            .collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i))
    }

    /// True when every row and column contains exactly one 1.
    pub fn is_permutation(&self) -> bool {
        self.rows == self.cols
            && self.row_sums().iter().all(|&s| s == 1)
            && self.col_sums().iter().all(|&s| s == 1)
    }

    pub fn to_int(&self) -> IntMatrix {
        IntMatrix::from_fn(self.rows, self.cols, |i, j| BigInt::from(self.get(i, j) as u8))
    }

    /// `M Mᵀ`, computed by counting common ones.
    pub fn gram(&self) -> IntMatrix {
        IntMatrix::from_fn(self.rows, self.rows, |i, k| {
            let common = self
                .row(i)
                .iter()
                .zip(self.row(k))
                .filter(|(a, b)| **a && **b)
                .count();
            BigInt::from(common)
        })
    }

    /// Rows as strings over `{0,1}`.
    pub fn to_lines(&self) -> Vec<String> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(|&b| if b { '1' } else { '0' }).collect())
            .collect()
    }
}

impl fmt::Debug for BinaryMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinaryMatrix {}x{} {:?}", self.rows, self.cols, self.to_lines())
    }
}
