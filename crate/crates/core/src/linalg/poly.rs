//! Univariate polynomials with arbitrary-precision integer coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

/// Coefficients are stored lowest degree first; the zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// `x`.
    pub fn x() -> Self {
        Self::from_i64(&[0, 1])
    }

    /// The primitive linear polynomial `q·x − p` vanishing at `p/q`.
    pub fn linear_at(root: &BigRational) -> Self {
        Self::new(vec![-root.numer().clone(), root.denom().clone()])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        self.coeffs.iter().rev().fold(BigRational::zero(), |acc, c| {
            acc * x + BigRational::from_integer(c.clone())
        })
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    /// gcd of the coefficients (zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut g = self.content();
        if self.leading().unwrap().is_negative() {
            g = -g;
        }
        Self::new(self.coeffs.iter().map(|c| c / &g).collect())
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    fn shift_mul(&self, shift: usize, k: &BigInt) -> Self {
        let mut coeffs = vec![BigInt::zero(); shift];
        coeffs.extend(self.coeffs.iter().map(|c| c * k));
        Self::new(coeffs)
    }

    /// Exact division in `Z[x]`; `None` when the remainder is nonzero or the
    /// quotient would need fractional coefficients.
    pub fn div_exact(&self, divisor: &IntPoly) -> Option<IntPoly> {
        let dd = divisor.degree().expect("division by the zero polynomial");
        if self.is_zero() {
            return Some(Self::zero());
        }
        let nd = self.degree().unwrap();
        if nd < dd {
            return None;
        }
        let lead = divisor.leading().unwrap();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); nd - dd + 1];
        for i in (0..=nd - dd).rev() {
            let top = &rem[i + dd];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(lead);
            if !r.is_zero() {
                return None;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[i + j] -= &q * d;
            }
            quot[i] = q;
        }
        rem.iter().all(Zero::is_zero).then(|| Self::new(quot))
    }

    /// Pseudo-remainder: the remainder of `lc(divisor)^(deg self − deg divisor + 1) · self`.
    pub fn pseudo_rem(&self, divisor: &IntPoly) -> IntPoly {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lead = divisor.leading().unwrap().clone();
        let mut rem = self.clone();
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let top = rem.leading().unwrap().clone();
            rem = rem.scale(&lead) - divisor.shift_mul(rd - dd, &top);
        }
        rem
    }

    /// Greatest common divisor over the rationals, returned primitive with positive leading coefficient.
    pub fn gcd(&self, other: &IntPoly) -> IntPoly {
        let mut a = self.primitive_part();
        let mut b = other.primitive_part();
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).primitive_part();
            a = b;
            b = r;
        }
        a
    }

    /// `p / gcd(p, p')`, primitive with positive leading coefficient.
    pub fn squarefree_part(&self) -> IntPoly {
        assert!(!self.is_zero(), "squarefree part of the zero polynomial");
        let g = self.gcd(&self.derivative());
        self.primitive_part()
            .div_exact(&g)
            .expect("a primitive gcd divides the primitive part")
            .primitive_part()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gcd(&self.derivative()).degree() == Some(0)
    }

    /// Square-free decomposition `p = c · Π q_m^m`, returned as `[(q_m, m)]` with
    /// trivial factors dropped. `S_j`, the squarefree part of the `j`-th iterated
    /// `gcd(D, D')`, carries exactly the roots of multiplicity `> j`, so
    /// `q_m = S_{m-1} / S_m`.
    pub fn squarefree_decomposition(&self) -> Vec<(IntPoly, usize)> {
        assert!(!self.is_zero());
        let mut layers = Vec::new();
        let mut d = self.primitive_part();
        while d.degree().unwrap_or(0) > 0 {
            layers.push(d.squarefree_part());
            d = d.gcd(&d.derivative());
        }
        layers.push(IntPoly::one());
        layers
            .windows(2)
            .enumerate()
            .filter_map(|(i, w)| {
                let q = w[0].div_exact(&w[1]).expect("nested squarefree parts divide");
                (q.degree().unwrap_or(0) > 0).then(|| (q.primitive_part(), i + 1))
            })
            .collect()
    }

    /// Multiplicity of `factor` in `self`, by repeated exact division.
    pub fn multiplicity_of(&self, factor: &IntPoly) -> usize {
        let mut p = self.clone();
        let mut m = 0;
        while let Some(q) = p.div_exact(factor) {
            if q.is_zero() {
                break;
            }
            p = q;
            m += 1;
        }
        m
    }

    /// `self(inner(x))`.
    pub fn compose(&self, inner: &IntPoly) -> IntPoly {
        self.coeffs
            .iter()
            .rev()
            .fold(IntPoly::zero(), |acc, c| &(&acc * inner) + &IntPoly::constant(c.clone()))
    }

    /// Newton power sums `p_k = Σ θ^k` over the roots (with multiplicity) of a monic polynomial, for `k = 0..count`.
    pub fn power_sums(&self, count: usize) -> Vec<BigInt> {
        assert!(self.is_monic(), "power sums need a monic polynomial");
        let d = self.degree().unwrap();
        // e-coefficients: x^d + a_{d-1} x^{d-1} + ... ; Newton: p_k + a_{d-1} p_{k-1} + ... + k a_{d-k} = 0
        let a = |i: usize| self.coeff(d - i); // a(i) multiplies x^{d-i}
        let mut p: Vec<BigInt> = Vec::with_capacity(count);
        for k in 0..count {
            if k == 0 {
                p.push(BigInt::from(d));
                continue;
            }
            let mut s = BigInt::zero();
            for i in 1..k.min(d + 1) {
                s += a(i) * &p[k - i];
            }
            if k <= d {
                s += a(k) * BigInt::from(k);
            }
            p.push(-s);
        }
        p
    }

    /// Integer roots `r` with `|r| <= bound`, found by exact evaluation.
    pub fn integer_roots_within(&self, bound: u64) -> Vec<BigInt> {
        if self.is_zero() {
            return Vec::new();
        }
        let c0 = self.coeff(0);
        let mut roots = Vec::new();
        if c0.is_zero() {
            roots.push(BigInt::zero());
        }
        for m in 1..=bound {
            for r in [BigInt::from(m), -BigInt::from(m)] {
                if (c0.is_zero() || (&c0 % &r).is_zero()) && self.eval(&r).is_zero() {
                    roots.push(r);
                }
            }
        }
        roots.sort();
        roots
    }

    /// All rational roots (without multiplicity). Candidates are bounded with the
    /// Cauchy bound of the monic transform, so this is only suitable for moderate coefficients.
    pub fn rational_roots(&self) -> Vec<BigRational> {
        let Some(d) = self.degree() else {
            return Vec::new();
        };
        if d == 0 {
            return Vec::new();
        }
        let p = self.squarefree_part();
        let d = p.degree().unwrap();
        let lead = p.leading().unwrap().clone();
        // g(y) = lead^(d-1) p(y / lead) is monic with integer coefficients.
        let g = IntPoly::new(
            (0..=d)
                .map(|i| {
                    if i == d {
                        BigInt::one()
                    } else {
                        p.coeff(i) * num_traits::pow(lead.clone(), d - 1 - i)
                    }
                })
                .collect(),
        );
        let bound = g.coeffs[..d]
            .iter()
            .map(|c| c.abs())
            .max()
            .unwrap_or_default()
            + BigInt::one();
        let bound = bound.to_u64().expect("root bound too large for exhaustive search");
        let mut roots: Vec<BigRational> = g
            .integer_roots_within(bound)
            .into_iter()
            .map(|y| BigRational::new(y, lead.clone()))
            .collect();
        roots.sort();
        roots.dedup();
        roots
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Sub for IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: IntPoly) -> IntPoly {
        &self - &rhs
    }
}

impl Add for IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: IntPoly) -> IntPoly {
        &self + &rhs
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }
}

impl Mul for IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: IntPoly) -> IntPoly {
        &self * &rhs
    }
}

impl Neg for IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly::new(self.coeffs.into_iter().map(|c| -c).collect())
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let show_mag = i == 0 || !mag.is_one();
            if show_mag {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({self})")
    }
}
