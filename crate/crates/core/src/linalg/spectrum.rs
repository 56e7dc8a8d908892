//! Exact spectra of symmetric integer matrices.
//!
//! The distinct eigenvalues come from the minimal polynomial: integer roots are
//! extracted exactly, quadratic factors are located numerically and confirmed by
//! exact division, and whatever is left stays as an unresolved integer factor.
//! Multiplicities come from the characteristic polynomial on small inputs, and
//! from kernel dimensions plus the power-sum equations `Σ m·θ^k = Tr(M^k)` on
//! large ones.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::charpoly::{char_poly, krylov, power_traces};
use super::quadratic::roots_of_int_quadratic;
use super::{EigenvalueExact, IntMatrix, IntPoly, LinalgError};

/// Matrices up to this order get their multiplicities from the full
/// characteristic polynomial.
pub const CHARPOLY_LIMIT: usize = 60;

/// A distinct eigenvalue.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub enum Eigenvalue {
    Exact(EigenvalueExact),
    /// A root of an integer polynomial with no rational or quadratic factor
    /// extracted; `approx` is for display only.
    Algebraic { factor: IntPoly, approx: f64 },
}

impl Eigenvalue {
    pub fn approx(&self) -> f64 {
        match self {
            Eigenvalue::Exact(e) => e.to_f64(),
            Eigenvalue::Algebraic { approx, .. } => *approx,
        }
    }

    pub fn exact(&self) -> Option<&EigenvalueExact> {
        match self {
            Eigenvalue::Exact(e) => Some(e),
            Eigenvalue::Algebraic { .. } => None,
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        self.exact().and_then(EigenvalueExact::as_rational)
    }
}

impl std::fmt::Display for Eigenvalue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Eigenvalue::Exact(e) => write!(f, "{e}"),
            Eigenvalue::Algebraic { factor, approx } => write!(f, "root of {factor} ≈ {approx:.6}"),
        }
    }
}

/// How multiplicities were obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum MultiplicityMethod {
    CharPoly,
    NullityAndTraces,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpectrumEntry {
    pub value: Eigenvalue,
    pub multiplicity: usize,
}

/// A group of conjugate eigenvalues sharing one integer factor of the minimal polynomial.
#[derive(Clone, Debug, PartialEq)]
pub struct FactorGroup {
    pub factor: IntPoly,
    pub multiplicity: usize,
}

#[derive(Clone, Debug, PartialEq)]
pub struct MatrixSpectrum {
    pub order: usize,
    pub min_poly: IntPoly,
    /// Distinct eigenvalues in decreasing order.
    pub entries: Vec<SpectrumEntry>,
    /// Factorisation of the minimal polynomial into the groups above.
    pub groups: Vec<FactorGroup>,
    pub method: MultiplicityMethod,
    /// `Tr(M^k)` for `k = 0..=2·δ`.
    pub traces: Vec<BigInt>,
}

impl MatrixSpectrum {
    pub fn distinct_count(&self) -> usize {
        self.entries.len()
    }

    pub fn multiplicity_of(&self, value: &EigenvalueExact) -> usize {
        self.entries
            .iter()
            .find(|e| e.value.exact() == Some(value))
            .map_or(0, |e| e.multiplicity)
    }

    pub fn contains(&self, value: &EigenvalueExact) -> bool {
        self.multiplicity_of(value) > 0
    }

    pub fn rational_values(&self) -> Vec<BigRational> {
        self.entries
            .iter()
            .filter_map(|e| e.value.as_rational().cloned())
            .collect()
    }
}

/// Real and complex roots of a polynomial with `f64` coefficients (Aberth iteration).
pub fn numeric_roots(poly: &IntPoly) -> Vec<Complex64> {
    let Some(deg) = poly.degree() else {
        return Vec::new();
    };
    if deg == 0 {
        return Vec::new();
    }
    let lead = poly.leading().unwrap().to_f64().unwrap_or(f64::NAN);
    let c: Vec<f64> = poly
        .coeffs()
        .iter()
        .map(|x| x.to_f64().unwrap_or(f64::NAN) / lead)
        .collect();
    if c.iter().any(|x| !x.is_finite()) {
        return Vec::new();
    }
    let radius = 1.0 + c[..deg].iter().fold(0.0f64, |m, x| m.max(x.abs()));
    let eval = |z: Complex64| -> (Complex64, Complex64) {
        let mut p = Complex64::new(0.0, 0.0);
        let mut dp = Complex64::new(0.0, 0.0);
        for &a in c.iter().rev() {
            dp = dp * z + p;
            p = p * z + a;
        }
        (p, dp)
    };
    let mut z: Vec<Complex64> = (0..deg)
        .map(|k| {
            let angle = 2.0 * std::f64::consts::PI * (k as f64 + 0.25) / deg as f64;
            Complex64::from_polar(radius * 0.5, angle)
        })
        .collect();
    for _ in 0..1000 {
        let mut max_step = 0.0f64;
        for i in 0..deg {
            let (p, dp) = eval(z[i]);
            if p.norm() == 0.0 {
                continue;
            }
            let ratio = p / dp;
            let repulsion: Complex64 = (0..deg)
                .filter(|&j| j != i)
                .map(|j| Complex64::new(1.0, 0.0) / (z[i] - z[j]))
                .sum();
            let step = ratio / (Complex64::new(1.0, 0.0) - ratio * repulsion);
            if step.is_finite() {
                z[i] -= step;
                max_step = max_step.max(step.norm() / (1.0 + z[i].norm()));
            }
        }
        if max_step < 1e-15 {
            break;
        }
    }
    z
}

/// Splits a monic polynomial without rational roots into quadratic factors
/// (located numerically, confirmed exactly) and an unresolved remainder.
fn extract_quadratics(q: &IntPoly) -> (Vec<IntPoly>, IntPoly) {
    let mut rest = q.clone();
    let mut quads = Vec::new();
    loop {
        match rest.degree() {
            None | Some(0) | Some(1) => break,
            Some(2) => {
                quads.push(rest.primitive_part());
                rest = IntPoly::one();
                break;
            }
            Some(_) => {}
        }
        let roots = numeric_roots(&rest);
        let mut found = None;
        'search: for i in 0..roots.len() {
            for j in i + 1..roots.len() {
                let s = (roots[i] + roots[j]).re;
                let p = (roots[i] * roots[j]).re;
                if !s.is_finite() || !p.is_finite() || s.abs() > 1e15 || p.abs() > 1e15 {
                    continue;
                }
                let cand = IntPoly::new(vec![
                    BigInt::from(p.round() as i64),
                    BigInt::from(-(s.round() as i64)),
                    BigInt::one(),
                ]);
                if let Some(quot) = rest.div_exact(&cand) {
                    found = Some((cand, quot));
                    break 'search;
                }
            }
        }
        match found {
            Some((cand, quot)) => {
                quads.push(cand);
                rest = quot;
            }
            None => break,
        }
    }
    (quads, rest)
}

/// All factor groups are monic: they divide a monic minimal polynomial in `Z[x]`.
fn power_sums_of(factor: &IntPoly, count: usize) -> Vec<BigInt> {
    factor.power_sums(count)
}

/// Solves `A u = rhs` exactly for a tall rational system, returning `None`
/// unless the solution is unique and consistent.
fn solve_tall(a: &[Vec<BigRational>], rhs: &[BigRational]) -> Option<Vec<BigRational>> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut m: Vec<Vec<BigRational>> = a
        .iter()
        .zip(rhs)
        .map(|(row, r)| {
            let mut v = row.clone();
            v.push(r.clone());
            v
        })
        .collect();
    let mut r = 0;
    for col in 0..cols {
        let p = (r..rows).find(|&i| !m[i][col].is_zero())?;
        m.swap(r, p);
        let inv = m[r][col].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][col].is_zero() {
                let f = m[i][col].clone();
                for j in col..=cols {
                    let delta = &f * &m[r][j];
                    m[i][j] -= delta;
                }
            }
        }
        r += 1;
    }
    if m[r..].iter().any(|row| !row[cols].is_zero()) {
        return None;
    }
    Some((0..cols).map(|i| m[i][cols].clone()).collect())
}

/// Exact spectrum of a symmetric integer matrix.
pub fn exact_spectrum(m: &IntMatrix) -> Result<MatrixSpectrum, LinalgError> {
    if !m.is_square() {
        return Err(LinalgError::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    if !m.is_symmetric() {
        return Err(LinalgError::NotSymmetric);
    }
    let n = m.rows();
    let kr = krylov(m);
    let min_poly = kr.poly;
    let mut powers = kr.powers;
    let delta = min_poly.degree().unwrap();
    let traces = power_traces(m, &mut powers, 2 * delta + 1);

    // Rational (hence integer) roots, bounded by the spectral radius.
    let bound = m.max_abs_row_sum().to_u64().unwrap_or(u64::MAX);
    let int_roots = min_poly.integer_roots_within(bound);
    let mut rest = min_poly.clone();
    for r in &int_roots {
        rest = rest
            .div_exact(&IntPoly::new(vec![-r.clone(), BigInt::one()]))
            .expect("root divides");
    }
    let (quads, residual) = extract_quadratics(&rest);

    let charpoly = if n <= CHARPOLY_LIMIT {
        Some(char_poly(m)?)
    } else {
        None
    };

    // Groups: (factor, multiplicity once known).
    let mut groups: Vec<(IntPoly, Option<usize>)> = Vec::new();
    for r in &int_roots {
        let lin = IntPoly::new(vec![-r.clone(), BigInt::one()]);
        let nullity = m.nullity_at(&BigRational::from_integer(r.clone()))?;
        if let Some(cp) = &charpoly {
            let mult = cp.multiplicity_of(&lin);
            assert_eq!(mult, nullity, "kernel dimension disagrees with algebraic multiplicity");
        }
        groups.push((lin, Some(nullity)));
    }
    match &charpoly {
        Some(cp) => {
            for qf in &quads {
                groups.push((qf.clone(), Some(cp.multiplicity_of(qf))));
            }
            if residual.degree().unwrap_or(0) > 0 {
                for (layer, mult) in cp.squarefree_decomposition() {
                    let g = residual.gcd(&layer);
                    if g.degree().unwrap_or(0) > 0 {
                        groups.push((g, Some(mult)));
                    }
                }
            }
        }
        None => {
            for qf in &quads {
                groups.push((qf.clone(), None));
            }
            if residual.degree().unwrap_or(0) > 0 {
                groups.push((residual.clone(), None));
            }
            let unknown: Vec<usize> = (0..groups.len()).filter(|&i| groups[i].1.is_none()).collect();
            if !unknown.is_empty() {
                let count = traces.len();
                let sums: Vec<Vec<BigInt>> = groups.iter().map(|(f, _)| power_sums_of(f, count)).collect();
                let rhs: Vec<BigRational> = (0..count)
                    .map(|k| {
                        let known: BigInt = groups
                            .iter()
                            .zip(&sums)
                            .filter_map(|((_, m), s)| m.map(|m| BigInt::from(m) * &s[k]))
                            .sum();
                        BigRational::from_integer(&traces[k] - known)
                    })
                    .collect();
                let a: Vec<Vec<BigRational>> = (0..count)
                    .map(|k| {
                        unknown
                            .iter()
                            .map(|&g| BigRational::from_integer(sums[g][k].clone()))
                            .collect()
                    })
                    .collect();
                let sol = solve_tall(&a, &rhs).ok_or(LinalgError::UnresolvedMultiplicities)?;
                for (&g, u) in unknown.iter().zip(sol) {
                    if !u.is_integer() || !u.is_positive() {
                        return Err(LinalgError::UnresolvedMultiplicities);
                    }
                    groups[g].1 = Some(u.to_integer().to_usize().unwrap());
                }
            }
        }
    }
    let groups: Vec<FactorGroup> = groups
        .into_iter()
        .map(|(factor, m)| FactorGroup {
            factor,
            multiplicity: m.unwrap(),
        })
        .collect();

    // Consistency: degrees, and power sums against traces.
    let total: usize = groups
        .iter()
        .map(|g| g.multiplicity * g.factor.degree().unwrap())
        .sum();
    if total != n {
        return Err(LinalgError::UnresolvedMultiplicities);
    }
    let deg_total: usize = groups.iter().map(|g| g.factor.degree().unwrap()).sum();
    assert_eq!(deg_total, delta, "factor groups must partition the minimal polynomial");
    for (k, t) in traces.iter().enumerate() {
        let s: BigInt = groups
            .iter()
            .map(|g| BigInt::from(g.multiplicity) * &power_sums_of(&g.factor, k + 1)[k])
            .sum();
        if &s != t {
            return Err(LinalgError::UnresolvedMultiplicities);
        }
    }

    let mut entries = Vec::with_capacity(delta);
    for g in &groups {
        match g.factor.degree().unwrap() {
            1 => {
                let root = BigRational::new(-g.factor.coeff(0), g.factor.coeff(1));
                entries.push(SpectrumEntry {
                    value: Eigenvalue::Exact(EigenvalueExact::Rational(root)),
                    multiplicity: g.multiplicity,
                });
            }
            2 => {
                let (hi, lo) = roots_of_int_quadratic(&g.factor)?;
                for v in [hi, lo] {
                    entries.push(SpectrumEntry {
                        value: Eigenvalue::Exact(v),
                        multiplicity: g.multiplicity,
                    });
                }
            }
            _ => {
                let mut approx: Vec<f64> = numeric_roots(&g.factor).iter().map(|z| z.re).collect();
                if approx.len() != g.factor.degree().unwrap() {
                    approx = vec![f64::NAN; g.factor.degree().unwrap()];
                }
                for a in approx {
                    entries.push(SpectrumEntry {
                        value: Eigenvalue::Algebraic {
                            factor: g.factor.clone(),
                            approx: a,
                        },
                        multiplicity: g.multiplicity,
                    });
                }
            }
        }
    }
    entries.sort_by(|a, b| match (a.value.exact(), b.value.exact()) {
        (Some(x), Some(y)) => y.cmp(x),
        _ => b.value.approx().total_cmp(&a.value.approx()),
    });

    Ok(MatrixSpectrum {
        order: n,
        min_poly,
        entries,
        groups,
        method: if charpoly.is_some() {
            MultiplicityMethod::CharPoly
        } else {
            MultiplicityMethod::NullityAndTraces
        },
        traces,
    })
}

/// Checks `|p(x)| <= tol · Σ|c_i||x|^i`; used to guard displayed approximations.
pub fn approx_is_root(poly: &IntPoly, x: f64, tol: f64) -> bool {
    let scale: f64 = poly
        .coeffs()
        .iter()
        .enumerate()
        .map(|(i, c)| c.abs().to_f64().unwrap_or(f64::INFINITY) * x.abs().powi(i as i32))
        .sum();
    poly.eval_f64(x).abs() <= tol * scale.max(1.0)
}
