//! Characteristic and minimal polynomials of integer matrices.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::matrix::bareiss_rank;
use super::{IntMatrix, IntPoly, LinalgError};

/// `det(xI − M)` by Berkowitz's division-free algorithm.
pub fn char_poly(m: &IntMatrix) -> Result<IntPoly, LinalgError> {
    if !m.is_square() {
        return Err(LinalgError::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let n = m.rows();
    // Coefficients highest degree first while iterating.
    let mut v: Vec<BigInt> = vec![BigInt::one()];
    for r in 0..n {
        // Leading principal block [[S, C], [R, a]] with S = M[..r][..r].
        let a = m.get(r, r);
        let mut t: Vec<BigInt> = Vec::with_capacity(r + 2);
        t.push(BigInt::one());
        t.push(-a);
        // w = S^j C, starting with C.
        let mut w: Vec<BigInt> = (0..r).map(|i| m.get(i, r).clone()).collect();
        for _ in 0..r {
            let rw: BigInt = (0..r).map(|j| m.get(r, j) * &w[j]).sum();
            t.push(-rw);
            w = (0..r)
                .map(|i| (0..r).map(|j| m.get(i, j) * &w[j]).sum())
                .collect();
        }
        // v' = T v, T lower-triangular Toeplitz with first column t, size (r+2) x (r+1).
        let next: Vec<BigInt> = (0..r + 2)
            .map(|i| {
                (0..=i.min(r))
                    .filter(|&j| i - j < t.len())
                    .map(|j| &t[i - j] * &v[j])
                    .sum()
            })
            .collect();
        v = next;
    }
    v.reverse();
    Ok(IntPoly::new(v))
}

fn require_symmetric(m: &IntMatrix) -> Result<(), LinalgError> {
    if !m.is_square() {
        return Err(LinalgError::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    if !m.is_symmetric() {
        return Err(LinalgError::NotSymmetric);
    }
    Ok(())
}

/// Upper-triangle coordinates of a symmetric matrix, flattened.
fn upper_triangle(m: &IntMatrix) -> Vec<BigInt> {
    let n = m.rows();
    let mut out = Vec::with_capacity(n * (n + 1) / 2);
    for i in 0..n {
        out.extend_from_slice(&m.row(i)[i..]);
    }
    out
}

/// Vector in an integer echelon basis, together with the combination of
/// powers of `M` that produced it.
struct EchelonRow {
    pivot: usize,
    vec: Vec<BigInt>,
    combo: Vec<BigInt>,
}

fn make_primitive(vec: &mut [BigInt], combo: &mut [BigInt]) {
    let g = vec
        .iter()
        .chain(combo.iter())
        .fold(BigInt::zero(), |g, x| g.gcd(x));
    if !g.is_zero() && !g.is_one() {
        for x in vec.iter_mut().chain(combo.iter_mut()) {
            *x /= &g;
        }
    }
}

/// Output of the Krylov search: the minimal polynomial and the powers
/// `M^0 ..= M^deg` it was found from.
pub(crate) struct Krylov {
    pub(crate) poly: IntPoly,
    pub(crate) powers: Vec<IntMatrix>,
}

/// Finds the first linear dependency among `I, M, M², …` by exact integer
/// elimination on the vectorised powers.
pub(crate) fn krylov(m: &IntMatrix) -> Krylov {
    let n = m.rows();
    let mut basis: Vec<EchelonRow> = Vec::new();
    let mut powers = vec![IntMatrix::identity(n)];
    loop {
        let k = powers.len() - 1;
        let mut vec = upper_triangle(&powers[k]);
        let mut combo = vec![BigInt::zero(); k + 1];
        combo[k] = BigInt::one();
        for row in &basis {
            let x = vec[row.pivot].clone();
            if x.is_zero() {
                continue;
            }
            let p = &row.vec[row.pivot];
            for (dst, src) in vec.iter_mut().zip(&row.vec) {
                *dst = &*dst * p - &x * src;
            }
            for (i, dst) in combo.iter_mut().enumerate() {
                let src = row.combo.get(i).cloned().unwrap_or_default();
                *dst = &*dst * p - &x * src;
            }
            make_primitive(&mut vec, &mut combo);
        }
        match vec.iter().position(|x| !x.is_zero()) {
            Some(pivot) => {
                basis.push(EchelonRow { pivot, vec, combo });
                let next = powers[k].mul(m);
                powers.push(next);
            }
            None => {
                let lead = combo[k].clone();
                let coeffs: Vec<BigInt> = combo
                    .iter()
                    .map(|c| {
                        let (q, r) = c.div_rem(&lead);
                        assert!(r.is_zero(), "minimal polynomial of an integer matrix is integral");
                        q
                    })
                    .collect();
                return Krylov {
                    poly: IntPoly::new(coeffs),
                    powers,
                };
            }
        }
    }
}

/// Monic minimal polynomial of a symmetric integer matrix.
pub fn min_poly(m: &IntMatrix) -> Result<IntPoly, LinalgError> {
    require_symmetric(m)?;
    Ok(krylov(m).poly)
}

/// Number of distinct eigenvalues of a symmetric matrix, as the rank of the
/// moment matrix `H[i][j] = Tr(M^(i+j))`.
///
/// `H` is the Gram matrix of `I, M, M², …` under the trace inner product, so
/// its leading `k×k` block has rank `min(k, δ)`; the search stops at the first
/// singular block.
pub fn distinct_root_count(m: &IntMatrix) -> Result<usize, LinalgError> {
    require_symmetric(m)?;
    let n = m.rows();
    let mut powers = vec![IntMatrix::identity(n)];
    let mut traces: Vec<BigInt> = vec![BigInt::from(n)];
    for k in 1..=n + 1 {
        // Need Tr(M^j) for j <= 2k-2, i.e. powers up to k-1 paired.
        while powers.len() < k {
            let next = powers.last().unwrap().mul(m);
            powers.push(next);
        }
        while traces.len() < 2 * k - 1 {
            let j = traces.len();
            let (a, b) = (j / 2, j - j / 2);
            traces.push(powers[a].frobenius_dot(&powers[b]));
        }
        let h: Vec<BigInt> = (0..k)
            .flat_map(|i| (0..k).map(move |j| (i, j)))
            .map(|(i, j)| traces[i + j].clone())
            .collect();
        let r = bareiss_rank(k, k, h);
        if r < k {
            return Ok(r);
        }
    }
    unreachable!("Cayley-Hamilton bounds the degree by n")
}

/// Rank of the full `(n+1)×(n+1)` moment matrix. Quadratic in `n` matrix
/// products; intended for cross-checking on small inputs.
pub fn hankel_rank_full(m: &IntMatrix) -> Result<usize, LinalgError> {
    require_symmetric(m)?;
    let n = m.rows();
    let mut powers = vec![IntMatrix::identity(n)];
    for _ in 0..n {
        let next = powers.last().unwrap().mul(m);
        powers.push(next);
    }
    let traces: Vec<BigInt> = (0..=2 * n)
        .map(|j| powers[j / 2].frobenius_dot(&powers[j - j / 2]))
        .collect();
    let h: Vec<BigInt> = (0..=n)
        .flat_map(|i| (0..=n).map(move |j| (i, j)))
        .map(|(i, j)| traces[i + j].clone())
        .collect();
    Ok(bareiss_rank(n + 1, n + 1, h))
}

/// `Tr(M^k)` for `k = 0..count`, reusing any precomputed powers.
pub(crate) fn power_traces(m: &IntMatrix, powers: &mut Vec<IntMatrix>, count: usize) -> Vec<BigInt> {
    let needed = count.div_ceil(2) + 1;
    while powers.len() < needed {
        let next = powers.last().unwrap().mul(m);
        powers.push(next);
    }
    (0..count)
        .map(|j| powers[j / 2].frobenius_dot(&powers[j - j / 2]))
        .collect()
}

/// Exact check that the nonzero polynomial `p` satisfies `p(M) = 0`.
pub fn annihilates(p: &IntPoly, m: &IntMatrix) -> bool {
    let n = m.rows();
    let mut acc = IntMatrix::zeros(n, n);
    for c in p.coeffs().iter().rev() {
        acc = acc.mul(m).add(&IntMatrix::scalar(n, c.clone()));
    }
    !p.is_zero() && acc.entries().iter().all(|x| x.is_zero())
}
