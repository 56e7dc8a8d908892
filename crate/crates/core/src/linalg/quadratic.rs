//! Exact eigenvalues of the form `a + b·√d`.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::{IntPoly, LinalgError};

/// `a + sign·b·√d` with `b > 0`, `d > 1` squarefree.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct QuadraticIrrational {
    pub a: BigRational,
    pub b: BigRational,
    pub d: BigInt,
    pub positive: bool,
}

/// An exactly represented real algebraic number of degree at most two.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum EigenvalueExact {
    Rational(BigRational),
    Quadratic(QuadraticIrrational),
}

impl EigenvalueExact {
    pub fn integer(n: i64) -> Self {
        EigenvalueExact::Rational(BigRational::from_integer(n.into()))
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            EigenvalueExact::Rational(q) => Some(q),
            EigenvalueExact::Quadratic(_) => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.as_rational().is_some_and(Zero::is_zero)
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            EigenvalueExact::Rational(q) => q.to_f64().unwrap_or(f64::NAN),
            EigenvalueExact::Quadratic(q) => {
                let s = q.b.to_f64().unwrap_or(f64::NAN) * q.d.to_f64().unwrap_or(f64::NAN).sqrt();
                q.a.to_f64().unwrap_or(f64::NAN) + if q.positive { s } else { -s }
            }
        }
    }

    /// The value as an element of `Q(√d)`; rationals use the supplied `d`.
    pub fn in_field(&self, d: &BigInt) -> Option<QuadNum> {
        match self {
            EigenvalueExact::Rational(q) => Some(QuadNum::rational(q.clone(), d.clone())),
            EigenvalueExact::Quadratic(q) if &q.d == d => Some(QuadNum {
                a: q.a.clone(),
                b: if q.positive { q.b.clone() } else { -q.b.clone() },
                d: d.clone(),
            }),
            EigenvalueExact::Quadratic(_) => None,
        }
    }

    /// The radicand, if irrational.
    pub fn radicand(&self) -> Option<&BigInt> {
        match self {
            EigenvalueExact::Rational(_) => None,
            EigenvalueExact::Quadratic(q) => Some(&q.d),
        }
    }

    /// The primitive integer polynomial of least degree vanishing here.
    pub fn minimal_polynomial(&self) -> IntPoly {
        match self {
            EigenvalueExact::Rational(q) => IntPoly::linear_at(q),
            EigenvalueExact::Quadratic(q) => {
                // (x - a)^2 - b^2 d = x^2 - 2a x + a^2 - b^2 d
                let c1 = -(&q.a * BigRational::from_integer(2.into()));
                let c0 = &q.a * &q.a - &q.b * &q.b * BigRational::from_integer(q.d.clone());
                let l = num_integer::Integer::lcm(c1.denom(), c0.denom());
                let lr = BigRational::from_integer(l.clone());
                IntPoly::new(vec![(c0 * &lr).to_integer(), (c1 * &lr).to_integer(), l])
                    .primitive_part()
            }
        }
    }

    /// Exact equality test for `value² + value = gamma`.
    pub fn satisfies_t2_plus_t(&self, gamma: &BigRational) -> bool {
        let d = self.radicand().cloned().unwrap_or_else(BigInt::one);
        let x = self.in_field(&d).unwrap();
        let v = &x.mul(&x).add(&x);
        v.b.is_zero() && &v.a == gamma
    }
}

fn sign_of(a: &BigRational, b: &BigRational, d: &BigInt) -> Ordering {
    // sign of a + b√d, d > 0
    let sa = a.cmp(&BigRational::zero());
    let sb = b.cmp(&BigRational::zero());
    if sb == Ordering::Equal {
        return sa;
    }
    if sa == Ordering::Equal || sa == sb {
        return sb;
    }
    let lhs = a * a;
    let rhs = b * b * BigRational::from_integer(d.clone());
    match lhs.cmp(&rhs) {
        Ordering::Greater => sa,
        Ordering::Less => sb,
        Ordering::Equal => Ordering::Equal,
    }
}

impl Ord for EigenvalueExact {
    fn cmp(&self, other: &Self) -> Ordering {
        use EigenvalueExact::*;
        match (self, other) {
            (Rational(x), Rational(y)) => x.cmp(y),
            _ => {
                let d = self
                    .radicand()
                    .or_else(|| other.radicand())
                    .cloned()
                    .unwrap();
                if let (Some(x), Some(y)) = (self.in_field(&d), other.in_field(&d)) {
                    let diff = x.sub(&y);
                    return diff.sign();
                }
                // Different radicands: compare u + v√p against w√q.
                let x = self.in_field(self.radicand().unwrap()).unwrap();
                let y = other.in_field(other.radicand().unwrap()).unwrap();
                let lhs = QuadNum {
                    a: &x.a - &y.a,
                    b: x.b.clone(),
                    d: x.d.clone(),
                };
                let rhs = QuadNum::rational(BigRational::zero(), y.d.clone());
                let rhs = QuadNum { b: y.b.clone(), ..rhs };
                // Compare lhs (in Q(√p)) with rhs = y.b·√q.
                let sl = lhs.sign();
                let sr = rhs.sign();
                if sl != sr {
                    return sl.cmp(&sr);
                }
                if sl == Ordering::Equal {
                    return Ordering::Equal;
                }
                let l2 = lhs.mul(&lhs);
                let r2 = &rhs.b * &rhs.b * BigRational::from_integer(rhs.d.clone());
                let mag = l2.sub(&QuadNum::rational(r2, l2.d.clone())).sign();
                if sl == Ordering::Greater {
                    mag
                } else {
                    mag.reverse()
                }
            }
        }
    }
}

impl PartialOrd for EigenvalueExact {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn fmt_rational(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for EigenvalueExact {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EigenvalueExact::Rational(q) => write!(f, "{}", fmt_rational(q)),
            EigenvalueExact::Quadratic(q) => {
                // Write as (p ± s√d)/den with a common denominator.
                let den = num_integer::Integer::lcm(q.a.denom(), q.b.denom());
                let dr = BigRational::from_integer(den.clone());
                let p = (&q.a * &dr).to_integer();
                let s = (&q.b * &dr).to_integer();
                let op = if q.positive { "+" } else { "-" };
                let surd = if s.is_one() {
                    format!("√{}", q.d)
                } else {
                    format!("{}√{}", s, q.d)
                };
                let body = if p.is_zero() {
                    format!("{}{}", if q.positive { "" } else { "-" }, surd)
                } else {
                    format!("{p} {op} {surd}")
                };
                if den.is_one() {
                    write!(f, "{body}")
                } else if p.is_zero() {
                    write!(f, "{body}/{den}")
                } else {
                    write!(f, "({body})/{den}")
                }
            }
        }
    }
}

/// Element `a + b√d` of the quadratic field `Q(√d)` (`b` may be zero or negative).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QuadNum {
    pub a: BigRational,
    pub b: BigRational,
    pub d: BigInt,
}

impl QuadNum {
    pub fn rational(a: BigRational, d: BigInt) -> Self {
        QuadNum {
            a,
            b: BigRational::zero(),
            d,
        }
    }

    pub fn add(&self, o: &QuadNum) -> QuadNum {
        debug_assert_eq!(self.d, o.d);
        QuadNum {
            a: &self.a + &o.a,
            b: &self.b + &o.b,
            d: self.d.clone(),
        }
    }

    pub fn sub(&self, o: &QuadNum) -> QuadNum {
        debug_assert_eq!(self.d, o.d);
        QuadNum {
            a: &self.a - &o.a,
            b: &self.b - &o.b,
            d: self.d.clone(),
        }
    }

    pub fn mul(&self, o: &QuadNum) -> QuadNum {
        debug_assert_eq!(self.d, o.d);
        let dr = BigRational::from_integer(self.d.clone());
        QuadNum {
            a: &self.a * &o.a + &self.b * &o.b * dr,
            b: &self.a * &o.b + &self.b * &o.a,
            d: self.d.clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn sign(&self) -> Ordering {
        sign_of(&self.a, &self.b, &self.d)
    }

    /// Horner evaluation of an integer polynomial.
    pub fn eval(poly: &IntPoly, x: &QuadNum) -> QuadNum {
        poly.coeffs().iter().rev().fold(
            QuadNum::rational(BigRational::zero(), x.d.clone()),
            |acc, c| {
                acc.mul(x)
                    .add(&QuadNum::rational(BigRational::from_integer(c.clone()), x.d.clone()))
            },
        )
    }
}

/// Writes `n = f²·d` with `d` squarefree. Trial division up to 10⁶ followed by
/// a perfect-square test on the cofactor; exact whenever `n < 10^18` or the
/// cofactor has at most two prime factors.
pub fn squarefree_decompose(n: &BigInt) -> (BigInt, BigInt) {
    assert!(n.is_positive(), "squarefree decomposition of a non-positive integer");
    let mut rest = n.clone();
    let mut f = BigInt::one();
    let mut d = BigInt::one();
    let mut p = BigInt::from(2u8);
    let limit = BigInt::from(1_000_000u32);
    while &p * &p <= rest && p <= limit {
        let mut e = 0u32;
        while (&rest % &p).is_zero() {
            rest /= &p;
            e += 1;
        }
        f *= num_traits::pow(p.clone(), (e / 2) as usize);
        if e % 2 == 1 {
            d *= &p;
        }
        p += if p == BigInt::from(2u8) { 1 } else { 2 };
    }
    if rest > BigInt::one() {
        let r = rest.sqrt();
        if &r * &r == rest {
            f *= r;
        } else {
            d *= rest;
        }
    }
    (f, d)
}

/// Exact roots of `a·t² + b·t + c`, larger first.
pub fn solve_quadratic(
    a: &BigRational,
    b: &BigRational,
    c: &BigRational,
) -> Result<(EigenvalueExact, EigenvalueExact), LinalgError> {
    assert!(!a.is_zero(), "leading coefficient must be nonzero");
    let four = BigRational::from_integer(4.into());
    let two = BigRational::from_integer(2.into());
    let disc = b * b - four * a * c;
    if disc.is_negative() {
        return Err(LinalgError::NegativeDiscriminant);
    }
    let center = -b / (&two * a);
    if disc.is_zero() {
        let r = EigenvalueExact::Rational(center);
        return Ok((r.clone(), r));
    }
    // √(N/D) = √(N·D)/D = f√d / D
    let nd = disc.numer() * disc.denom();
    let (f, d) = squarefree_decompose(&nd);
    let coeff = BigRational::new(f, disc.denom().clone()) / (&two * a);
    let coeff = coeff.abs();
    if d.is_one() {
        return Ok((
            EigenvalueExact::Rational(&center + &coeff),
            EigenvalueExact::Rational(&center - &coeff),
        ));
    }
    let make = |positive| {
        EigenvalueExact::Quadratic(QuadraticIrrational {
            a: center.clone(),
            b: coeff.clone(),
            d: d.clone(),
            positive,
        })
    };
    Ok((make(true), make(false)))
}

/// Roots of a quadratic with integer coefficients, larger first.
pub fn roots_of_int_quadratic(p: &IntPoly) -> Result<(EigenvalueExact, EigenvalueExact), LinalgError> {
    assert_eq!(p.degree(), Some(2));
    let q = |i| BigRational::from_integer(p.coeff(i));
    solve_quadratic(&q(2), &q(1), &q(0))
}

impl From<BigInt> for EigenvalueExact {
    fn from(n: BigInt) -> Self {
        EigenvalueExact::Rational(BigRational::from_integer(n))
    }
}

impl EigenvalueExact {
    /// Sign of the value: `Minus`, `NoSign` or `Plus`.
    pub fn sign(&self) -> Sign {
        match self.cmp(&EigenvalueExact::integer(0)) {
            Ordering::Less => Sign::Minus,
            Ordering::Equal => Sign::NoSign,
            Ordering::Greater => Sign::Plus,
        }
    }

    pub fn neg(&self) -> Self {
        match self {
            EigenvalueExact::Rational(q) => EigenvalueExact::Rational(-q.clone()),
            EigenvalueExact::Quadratic(q) => EigenvalueExact::Quadratic(QuadraticIrrational {
                a: -q.a.clone(),
                b: q.b.clone(),
                d: q.d.clone(),
                positive: !q.positive,
            }),
        }
    }

    pub fn abs(&self) -> Self {
        if self.sign() == Sign::Minus {
            self.neg()
        } else {
            self.clone()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn golden_pair() {
        // t^2 + t - 1 -> (-1 ± √5)/2
        let (hi, lo) = solve_quadratic(&r(1), &r(1), &r(-1)).unwrap();
        assert_eq!(hi.to_string(), "(-1 + √5)/2");
        assert_eq!(lo.to_string(), "(-1 - √5)/2");
        assert!(hi > lo);
        assert!((hi.to_f64() - 0.618_033_988_75).abs() < 1e-9);
    }

    #[test]
    fn rational_pairs() {
        let (hi, lo) = solve_quadratic(&r(1), &r(-1), &r(-2)).unwrap();
        assert_eq!((hi, lo), (EigenvalueExact::integer(2), EigenvalueExact::integer(-1)));
        let (hi, lo) = solve_quadratic(&r(1), &r(-6), &r(-27)).unwrap();
        assert_eq!((hi, lo), (EigenvalueExact::integer(9), EigenvalueExact::integer(-3)));
    }

    #[test]
    fn negative_discriminant() {
        assert!(matches!(
            solve_quadratic(&r(1), &r(0), &r(1)),
            Err(LinalgError::NegativeDiscriminant)
        ));
    }

    #[test]
    fn canonical_form_is_syntactic() {
        // 2t^2 - 12t - 18 has the same roots as t^2 - 6t - 9: 3 ± 3√2
        let a = solve_quadratic(&r(2), &r(-12), &r(-18)).unwrap();
        let b = solve_quadratic(&r(1), &r(-6), &r(-9)).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.0.to_string(), "3 + 3√2");
    }

    #[test]
    fn ordering_across_radicands() {
        let (s2, _) = solve_quadratic(&r(1), &r(0), &r(-2)).unwrap(); // √2
        let (s3, _) = solve_quadratic(&r(1), &r(0), &r(-3)).unwrap(); // √3
        assert!(s2 < s3);
        assert!(s3 > EigenvalueExact::integer(1));
        assert!(s3 < EigenvalueExact::integer(2));
        assert_eq!(s2.neg().abs(), s2);
    }

    #[test]
    fn minimal_polynomials_round_trip() {
        let (hi, _) = solve_quadratic(&r(1), &r(-13), &r(-1)).unwrap();
        assert_eq!(hi.minimal_polynomial(), IntPoly::from_i64(&[-1, -13, 1]));
        assert_eq!(
            EigenvalueExact::Rational(BigRational::new(3.into(), 2.into())).minimal_polynomial(),
            IntPoly::from_i64(&[-3, 2])
        );
    }

    #[test]
    fn t2_plus_t_membership() {
        let (hi, lo) = solve_quadratic(&r(1), &r(1), &r(-1)).unwrap();
        assert!(hi.satisfies_t2_plus_t(&r(1)));
        assert!(lo.satisfies_t2_plus_t(&r(1)));
        assert!(!lo.satisfies_t2_plus_t(&r(2)));
        assert!(EigenvalueExact::integer(-3).satisfies_t2_plus_t(&r(6)));
    }

    #[test]
    fn squarefree_split() {
        assert_eq!(squarefree_decompose(&BigInt::from(72)), (BigInt::from(6), BigInt::from(2)));
        assert_eq!(squarefree_decompose(&BigInt::from(5)), (BigInt::from(1), BigInt::from(5)));
        assert_eq!(squarefree_decompose(&BigInt::from(49)), (BigInt::from(7), BigInt::from(1)));
    }
}
