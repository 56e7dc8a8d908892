//! Dense matrices with arbitrary-precision integer entries.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::LinalgError;

/// Row-major dense matrix over `BigInt`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar(n, BigInt::one())
    }

    pub fn scalar(n: usize, value: BigInt) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = value.clone();
        }
        m
    }

    /// The all-ones matrix `J`.
    pub fn ones(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::one(); rows * cols],
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        IntMatrix { rows, cols, data }
    }

    /// Builds a matrix from rows of machine integers. Panics on ragged input.
    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.as_ref().len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            let row = row.as_ref();
            assert_eq!(row.len(), c, "ragged matrix rows");
            data.extend(row.iter().map(|&x| BigInt::from(x)));
        }
        IntMatrix {
            rows: r,
            cols: c,
            data,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: BigInt) {
        self.data[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.data
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (i + 1..self.cols).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn trace(&self) -> BigInt {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i)).sum()
    }

    pub fn row_sums(&self) -> Vec<BigInt> {
        (0..self.rows).map(|i| self.row(i).iter().sum()).collect()
    }

    /// Largest absolute row sum; bounds the modulus of every eigenvalue.
    pub fn max_abs_row_sum(&self) -> BigInt {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(|x| x.abs()).sum::<BigInt>())
            .max()
            .unwrap_or_default()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.data.iter().all(|x| !x.is_negative())
    }

    /// Frobenius inner product `sum_ij a_ij b_ij`, which is `Tr(A B)` for symmetric `B`.
    pub fn frobenius_dot(&self, other: &IntMatrix) -> BigInt {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        self.data.iter().zip(&other.data).map(|(a, b)| a * b).sum()
    }

    pub fn scale(&self, factor: &BigInt) -> Self {
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * factor).collect(),
        }
    }

    pub fn add(&self, other: &IntMatrix) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &IntMatrix) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        }
    }

    /// `q·M − p·I` for `alpha = p/q`: an integer matrix with the same kernel as `M − alpha·I`.
    pub fn shifted_by(&self, alpha: &BigRational) -> Self {
        assert!(self.is_square());
        let mut m = self.scale(alpha.denom());
        for i in 0..self.rows {
            let v = m.get(i, i) - alpha.numer();
            m.set(i, i, v);
        }
        m
    }

    fn max_abs_bits(&self) -> u64 {
        self.data.iter().map(|x| x.bits()).max().unwrap_or(0)
    }

    /// Matrix product. Uses `i128` accumulation whenever the entry bounds rule out overflow.
    pub fn mul(&self, other: &IntMatrix) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let (n, m, p) = (self.rows, self.cols, other.cols);
        let width = 64 - (m.max(1) as u64).leading_zeros() as u64;
        if self.max_abs_bits() + other.max_abs_bits() + width < 126 {
            let a: Vec<i128> = self.data.iter().map(|x| x.to_i128().unwrap()).collect();
            let bt: Vec<i128> = other.transpose().data.iter().map(|x| x.to_i128().unwrap()).collect();
            let mut data = Vec::with_capacity(n * p);
            for i in 0..n {
                let ar = &a[i * m..(i + 1) * m];
                for j in 0..p {
                    let br = &bt[j * m..(j + 1) * m];
                    let s: i128 = ar.iter().zip(br).map(|(x, y)| x * y).sum();
                    data.push(BigInt::from(s));
                }
            }
            return IntMatrix { rows: n, cols: p, data };
        }
        let bt = other.transpose();
        Self::from_fn(n, p, |i, j| {
            self.row(i).iter().zip(bt.row(j)).map(|(x, y)| x * y).sum()
        })
    }

    /// Exact rank by fraction-free (Bareiss) elimination.
    pub fn rank(&self) -> usize {
        bareiss_rank(self.rows, self.cols, self.data.clone())
    }

    /// `dim ker(M − alpha·I)`.
    pub fn nullity_at(&self, alpha: &BigRational) -> Result<usize, LinalgError> {
        if !self.is_square() {
            return Err(LinalgError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        Ok(self.rows - self.shifted_by(alpha).rank())
    }

    /// A basis of the right kernel over the rationals, via reduced row echelon form.
    pub fn nullspace(&self) -> Vec<Vec<BigRational>> {
        let (rows, cols) = (self.rows, self.cols);
        let mut a: Vec<Vec<BigRational>> = (0..rows)
            .map(|i| self.row(i).iter().map(|x| BigRational::from_integer(x.clone())).collect())
            .collect();
        let mut pivots = Vec::new();
        let mut r = 0;
        for col in 0..cols {
            let Some(p) = (r..rows).find(|&i| !a[i][col].is_zero()) else {
                continue;
            };
            a.swap(r, p);
            let inv = a[r][col].recip();
            for x in a[r].iter_mut() {
                *x *= &inv;
            }
            for i in 0..rows {
                if i != r && !a[i][col].is_zero() {
                    let f = a[i][col].clone();
                    for j in col..cols {
                        let delta = &f * &a[r][j];
                        a[i][j] -= delta;
                    }
                }
            }
            pivots.push(col);
            r += 1;
            if r == rows {
                break;
            }
        }
        let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![BigRational::zero(); cols];
                v[f] = BigRational::one();
                for (i, &pc) in pivots.iter().enumerate() {
                    v[pc] = -a[i][f].clone();
                }
                v
            })
            .collect()
    }

    /// Multiplies by a rational column vector.
    pub fn apply(&self, x: &[BigRational]) -> Vec<BigRational> {
        assert_eq!(x.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(x)
                    .filter(|(a, _)| !a.is_zero())
                    .map(|(a, b)| b * a)
                    .sum()
            })
            .collect()
    }
}

/// Rank of a row-major matrix by Bareiss elimination. Every division is checked for exactness.
pub(crate) fn bareiss_rank(rows: usize, cols: usize, mut a: Vec<BigInt>) -> usize {
    let mut prev = BigInt::one();
    let mut r = 0;
    for col in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i * cols + col].is_zero()) else {
            continue;
        };
        if p != r {
            for j in 0..cols {
                a.swap(p * cols + j, r * cols + j);
            }
        }
        let pivot = a[r * cols + col].clone();
        for i in r + 1..rows {
            let factor = a[i * cols + col].clone();
            for j in col + 1..cols {
                let num = &pivot * &a[i * cols + j] - &factor * &a[r * cols + j];
                let (q, rem) = num_integer::Integer::div_rem(&num, &prev);
                assert!(rem.is_zero(), "inexact Bareiss division");
                a[i * cols + j] = q;
            }
            a[i * cols + col] = BigInt::zero();
        }
        prev = pivot;
        r += 1;
    }
    r
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  {}", row.join(" "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(p: i64, q: i64) -> BigRational {
        BigRational::new(p.into(), q.into())
    }

    #[test]
    fn rank_of_all_ones_is_one() {
        assert_eq!(IntMatrix::ones(3, 3).rank(), 1);
        assert_eq!(IntMatrix::zeros(2, 5).rank(), 0);
    }

    #[test]
    fn nullity_of_complete_graph_at_minus_one() {
        let k4 = IntMatrix::ones(4, 4).sub(&IntMatrix::identity(4));
        assert_eq!(k4.nullity_at(&rat(-1, 1)).unwrap(), 3);
        assert_eq!(k4.nullity_at(&rat(3, 1)).unwrap(), 1);
        assert_eq!(k4.nullity_at(&rat(1, 2)).unwrap(), 0);
    }

    #[test]
    fn nullity_requires_square() {
        assert!(matches!(
            IntMatrix::zeros(2, 3).nullity_at(&rat(0, 1)),
            Err(LinalgError::NotSquare { rows: 2, cols: 3 })
        ));
    }

    #[test]
    fn wide_product_falls_back_to_bigint() {
        let big: BigInt = BigInt::from(1u8) << 100usize;
        let a = IntMatrix::scalar(2, big.clone());
        let p = a.mul(&a);
        assert_eq!(p.get(0, 0), &(&big * &big));
        assert!(p.get(0, 1).is_zero());
    }

    #[test]
    fn nullspace_vectors_are_in_kernel() {
        let m = IntMatrix::from_rows(&[[1, 2, 3], [2, 4, 6], [1, 0, 1]]);
        let ns = m.nullspace();
        assert_eq!(ns.len(), 1);
        assert!(m.apply(&ns[0]).iter().all(|x| x.is_zero()));
        assert_eq!(m.rank() + ns.len(), 3);
    }
}
