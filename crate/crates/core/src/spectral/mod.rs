//! Spectral analysis of split graphs: the quotient of the clique/stable
//! partition, the Gram matrix `BBᵀ`, restricted eigenvalues, and checks of the
//! spectrum description for bidegreed graphs.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Bidegree, SplitGraph};
use crate::linalg::{
    exact_spectrum, roots_of_int_quadratic, solve_quadratic, Eigenvalue, EigenvalueExact, IntMatrix,
    IntPoly, LinalgError, MatrixSpectrum, MultiplicityMethod, QuadNum, SpectrumEntry,
};

/// The spectral identities checked by [`verify_spectrum_description`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Clause {
    SpectrumUnion,
    QuotientRoots,
    PerronIsRho,
    RhoOutsideP,
    PsiOutsidePOmega,
    ZeroOutsideP,
    DisjointP,
    DeltaBound,
    RankIdentity,
    LiftedEigenvector,
    TraceIdentities,
    TwoValuedGram,
}

impl fmt::Display for Clause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Clause::SpectrumUnion => "Spec(A) = {ρ,ψ} ∪ P_γ (γ ∈ R), containing 0 iff A is singular",
            Clause::QuotientRoots => "ρ and ψ are eigenvalues of A",
            Clause::PerronIsRho => "ρ is the Perron value",
            Clause::RhoOutsideP => "ρ ∉ P_γ",
            Clause::PsiOutsidePOmega => "ψ ∉ P_kk′",
            Clause::ZeroOutsideP => "0 ∉ P_γ for γ ≠ 0",
            Clause::DisjointP => "P_γ are pairwise disjoint",
            Clause::DeltaBound => "δ(A) ≥ 2|R| + 1",
            Clause::RankIdentity => "r(A) = c + r(B) ≤ 2c",
            Clause::LiftedEigenvector => "lifted eigenvectors of BBᵀ",
            Clause::TraceIdentities => "trace identities",
            Clause::TwoValuedGram => "two-valued Gram matrix is (ω−γ)/n·J + γI",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SpectralError {
    #[error("graph is not bidegreed")]
    NotBidegreed,
    #[error("graph has two degrees but they are not constant on the clique and on the stable set")]
    NonUniformPartition,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("matrix must be symmetric and nonnegative")]
    NotSymmetricNonnegative,
    #[error("row {row} sums to {sum}, expected {omega}")]
    NotStochastic { row: usize, sum: BigInt, omega: BigInt },
    #[error("γ = {0} is negative")]
    NegativeGamma(BigRational),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error("spectral identity failed [{clause}]: {detail}")]
    AssertionFailure { clause: Clause, detail: String },
}

fn fail(clause: Clause, detail: impl Into<String>) -> SpectralError {
    SpectralError::AssertionFailure {
        clause,
        detail: detail.into(),
    }
}

fn ensure(ok: bool, clause: Clause, detail: impl FnOnce() -> String) -> Result<(), SpectralError> {
    if ok {
        Ok(())
    } else {
        Err(fail(clause, detail()))
    }
}

/// `[[c−1, k′],[k, 0]]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuotientMatrix {
    pub c: usize,
    pub k: usize,
    pub k_prime: usize,
}

impl QuotientMatrix {
    pub fn entries(&self) -> [[usize; 2]; 2] {
        [[self.c - 1, self.k_prime], [self.k, 0]]
    }

    pub fn to_matrix(&self) -> IntMatrix {
        let e = self.entries();
        IntMatrix::from_fn(2, 2, |i, j| BigInt::from(e[i][j]))
    }

    /// `kk′`, the row sum of `BBᵀ`.
    pub fn omega(&self) -> BigInt {
        BigInt::from(self.k) * self.k_prime
    }

    /// `t² − (c−1)t − kk′`.
    pub fn char_poly(&self) -> IntPoly {
        IntPoly::new(vec![-self.omega(), -BigInt::from(self.c - 1), BigInt::one()])
    }
}

/// The bidegree of a connected bidegreed split graph.
pub fn bidegree(g: &SplitGraph) -> Result<Bidegree, SpectralError> {
    if !g.is_connected() {
        return Err(SpectralError::Disconnected);
    }
    let ds = g.degree_summary();
    if !ds.bidegreed {
        return Err(SpectralError::NotBidegreed);
    }
    ds.bidegree.ok_or(SpectralError::NonUniformPartition)
}

pub fn quotient_matrix(g: &SplitGraph) -> Result<QuotientMatrix, SpectralError> {
    let bd = bidegree(g)?;
    let q = QuotientMatrix {
        c: g.c(),
        k: bd.k,
        k_prime: bd.k_prime,
    };
    assert_eq!(q.k_prime * g.c(), g.s() * q.k, "k′c = sk");
    Ok(q)
}

/// The roots `ρ > ψ` of `t² − (c−1)t − kk′`.
pub fn rho_psi(g: &SplitGraph) -> Result<(EigenvalueExact, EigenvalueExact), SpectralError> {
    let q = quotient_matrix(g)?;
    Ok(roots_of_int_quadratic(&q.char_poly())?)
}

/// `BBᵀ`. For bidegreed graphs, asserts it is `kk′`-stochastic with trace `ck′`.
pub fn gram(g: &SplitGraph) -> IntMatrix {
    let m = g.biadjacency().gram();
    if let Some(bd) = g.degree_summary().bidegree {
        let omega = BigInt::from(bd.k * bd.k_prime);
        assert!(m.row_sums().iter().all(|s| s == &omega), "BBᵀ is kk′-stochastic");
        assert_eq!(m.trace(), BigInt::from(g.c() * bd.k_prime), "Tr(BBᵀ) = ck′");
    }
    m
}

/// `R(M)` for a symmetric nonnegative `ω`-stochastic `M`.
#[derive(Clone, Debug, PartialEq)]
pub struct RestrictedSpectrum {
    pub omega: BigInt,
    /// Restricted eigenvalues in decreasing order.
    pub restricted: Vec<Eigenvalue>,
    /// Squarefree polynomial whose roots are exactly the restricted eigenvalues.
    pub restricted_poly: IntPoly,
    pub reducible: bool,
    pub spectrum: MatrixSpectrum,
}

impl RestrictedSpectrum {
    pub fn len(&self) -> usize {
        self.restricted.len()
    }

    pub fn is_empty(&self) -> bool {
        self.restricted.is_empty()
    }

    pub fn exact_values(&self) -> Vec<EigenvalueExact> {
        self.restricted.iter().filter_map(|e| e.exact().cloned()).collect()
    }
}

/// Connectivity of the graph on row indices with an edge wherever `M` is nonzero.
fn support_connected(m: &IntMatrix) -> bool {
    let n = m.rows();
    if n == 0 {
        return true;
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(u) = stack.pop() {
        for w in 0..n {
            if !seen[w] && !m.get(u, w).is_zero() {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

pub fn restricted_eigenvalues(m: &IntMatrix, omega: &BigInt) -> Result<RestrictedSpectrum, SpectralError> {
    if !m.is_square() || !m.is_symmetric() || !m.is_nonnegative() {
        return Err(SpectralError::NotSymmetricNonnegative);
    }
    if let Some((row, sum)) = m.row_sums().into_iter().enumerate().find(|(_, s)| s != omega) {
        return Err(SpectralError::NotStochastic {
            row,
            sum,
            omega: omega.clone(),
        });
    }
    let spectrum = exact_spectrum(m)?;
    let reducible = !support_connected(m);
    let omega_value = EigenvalueExact::from(omega.clone());
    let restricted: Vec<Eigenvalue> = spectrum
        .entries
        .iter()
        .filter(|e| reducible || e.value.exact() != Some(&omega_value))
        .map(|e| e.value.clone())
        .collect();
    let restricted_poly = if reducible || m.rows() == 0 {
        spectrum.min_poly.clone()
    } else {
        let linear = IntPoly::linear_at(&BigRational::from_integer(omega.clone()));
        spectrum
            .min_poly
            .div_exact(&linear)
            .expect("ω is an eigenvalue of an ω-stochastic matrix")
    };
    if !reducible && spectrum.distinct_count() == 2 {
        check_two_valued(m, omega, &spectrum)?;
    }
    Ok(RestrictedSpectrum {
        omega: omega.clone(),
        restricted,
        restricted_poly,
        reducible,
        spectrum,
    })
}

/// An irreducible `ω`-stochastic symmetric matrix with two eigenvalues `ω, γ`
/// equals `((ω−γ)/n)J + γI`.
fn check_two_valued(m: &IntMatrix, omega: &BigInt, spectrum: &MatrixSpectrum) -> Result<(), SpectralError> {
    let omega_q = BigRational::from_integer(omega.clone());
    let gamma = spectrum
        .rational_values()
        .into_iter()
        .find(|v| v != &omega_q)
        .ok_or_else(|| fail(Clause::TwoValuedGram, "second eigenvalue is not rational"))?;
    let n = BigRational::from_integer(m.rows().into());
    let off = (&omega_q - &gamma) / &n;
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            let expect = if i == j { &off + &gamma } else { off.clone() };
            let got = BigRational::from_integer(m.get(i, j).clone());
            ensure(got == expect, Clause::TwoValuedGram, || {
                format!("entry ({i},{j}) is {got}, expected {expect}")
            })?;
        }
    }
    Ok(())
}

/// The two roots of `t² + t − γ`, larger first.
pub fn p_gamma(gamma: &BigRational) -> Result<(EigenvalueExact, EigenvalueExact), SpectralError> {
    if gamma.is_negative() {
        return Err(SpectralError::NegativeGamma(gamma.clone()));
    }
    let one = BigRational::one();
    Ok(solve_quadratic(&one, &one, &-gamma)?)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceChecks {
    pub multiplicities_sum_to_order: bool,
    pub trace_is_zero: bool,
    pub sum_of_squares_is_twice_edges: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SpectrumSummary {
    pub order: usize,
    pub delta: usize,
    /// Distinct eigenvalues in decreasing order.
    pub entries: Vec<SpectrumEntry>,
    pub perron: Eigenvalue,
    pub rank: usize,
    pub min_poly: IntPoly,
    pub method: MultiplicityMethod,
    pub trace_checks: TraceChecks,
}

impl SpectrumSummary {
    pub fn multiplicity_of(&self, value: &EigenvalueExact) -> usize {
        self.entries
            .iter()
            .find(|e| e.value.exact() == Some(value))
            .map_or(0, |e| e.multiplicity)
    }

    /// Eigenvalues in exponent notation, e.g. `5^1, 1^3, 0^3, -2^4`.
    pub fn describe(&self) -> String {
        let parts: Vec<String> = self
            .entries
            .iter()
            .map(|e| match e.value.as_rational() {
                Some(_) => format!("{}^{}", e.value, e.multiplicity),
                None => format!("[{}]^{}", e.value, e.multiplicity),
            })
            .collect();
        parts.join(", ")
    }
}

/// Exact spectrum of the adjacency matrix of a connected split graph.
pub fn spectrum_summary(g: &SplitGraph) -> Result<SpectrumSummary, SpectralError> {
    if !g.is_connected() {
        return Err(SpectralError::Disconnected);
    }
    let a = g.adjacency();
    let n = g.order();
    let spec = exact_spectrum(&a)?;
    let rank = a.rank();
    let zero = EigenvalueExact::integer(0);
    ensure(spec.multiplicity_of(&zero) == n - rank, Clause::RankIdentity, || {
        format!("nullity {} but multiplicity of 0 is {}", n - rank, spec.multiplicity_of(&zero))
    })?;

    let implied = spec
        .groups
        .iter()
        .fold(IntPoly::one(), |acc, grp| (0..grp.multiplicity).fold(acc, |p, _| &p * &grp.factor));
    let sums = implied.power_sums(3);
    let trace_checks = TraceChecks {
        multiplicities_sum_to_order: spec.entries.iter().map(|e| e.multiplicity).sum::<usize>() == n,
        trace_is_zero: sums[1].is_zero(),
        sum_of_squares_is_twice_edges: sums[2] == BigInt::from(2 * g.edge_count()),
    };
    ensure(
        trace_checks.multiplicities_sum_to_order
            && trace_checks.trace_is_zero
            && trace_checks.sum_of_squares_is_twice_edges,
        Clause::TraceIdentities,
        || format!("{trace_checks:?}"),
    )?;

    let perron = spec.entries[0].value.clone();
    for e in &spec.entries {
        let ok = match (perron.exact(), e.value.exact()) {
            (Some(p), Some(v)) => p >= &v.abs(),
            _ => perron.approx() + 1e-9 >= e.value.approx().abs(),
        };
        ensure(ok, Clause::PerronIsRho, || format!("{} exceeds the Perron value {perron}", e.value))?;
    }

    Ok(SpectrumSummary {
        order: n,
        delta: spec.distinct_count(),
        entries: spec.entries,
        perron,
        rank,
        min_poly: spec.min_poly,
        method: spec.method,
        trace_checks,
    })
}

/// Outcome of [`verify_spectrum_description`]; every clause has passed.
#[derive(Clone, Debug, PartialEq)]
pub struct DescriptionReport {
    pub quotient: QuotientMatrix,
    pub rho: EigenvalueExact,
    pub psi: EigenvalueExact,
    pub gram: RestrictedSpectrum,
    /// Squarefree polynomial predicted to have exactly the eigenvalues of `A` as roots.
    pub predicted: IntPoly,
    pub rank_a: usize,
    pub rank_b: usize,
    pub singular: bool,
    /// `0 ∈ R` put the root `0` of `P_0` into the union although `A` is nonsingular;
    /// only `−1` lifts from the kernel of `BBᵀ`.
    pub p0_zero_dropped: bool,
    pub lifted_checks: usize,
    pub summary: SpectrumSummary,
}

fn in_own_field(x: &EigenvalueExact) -> QuadNum {
    let d = x.radicand().cloned().unwrap_or_else(BigInt::one);
    x.in_field(&d).expect("value lies in its own field")
}

/// Checks the description of `Spec(A)` for a connected bidegreed split graph
/// and the disjointness, counting and rank statements attached to it.
pub fn verify_spectrum_description(g: &SplitGraph) -> Result<DescriptionReport, SpectralError> {
    let quotient = quotient_matrix(g)?;
    let (rho, psi) = roots_of_int_quadratic(&quotient.char_poly())?;
    let omega = quotient.omega();
    let gram_m = gram(g);
    let gram = restricted_eigenvalues(&gram_m, &omega)?;
    let summary = spectrum_summary(g)?;
    let c = g.c();

    let rank_a = summary.rank;
    let rank_b = g.biadjacency().to_int().rank();
    ensure(rank_a == c + rank_b && rank_a <= 2 * c, Clause::RankIdentity, || {
        format!("r(A) = {rank_a}, c = {c}, r(B) = {rank_b}")
    })?;
    let singular = rank_a < g.order();

    let t2t = IntPoly::from_i64(&[0, 1, 1]);
    let lifted = gram.restricted_poly.compose(&t2t);
    let mut predicted = (&lifted * &quotient.char_poly()).squarefree_part();
    let zero_in_p = predicted.coeff(0).is_zero();
    if singular && !zero_in_p {
        predicted = &predicted * &IntPoly::x();
    }
    let p0_zero_dropped = zero_in_p && !singular;
    if p0_zero_dropped {
        predicted = predicted.div_exact(&IntPoly::x()).expect("0 is a root");
    }
    ensure(predicted == summary.min_poly, Clause::SpectrumUnion, || {
        format!("predicted {predicted}, minimal polynomial {}", summary.min_poly)
    })?;
    ensure(
        summary.min_poly.div_exact(&quotient.char_poly()).is_some(),
        Clause::QuotientRoots,
        || format!("{} does not divide {}", quotient.char_poly(), summary.min_poly),
    )?;
    ensure(summary.perron.exact() == Some(&rho), Clause::PerronIsRho, || {
        format!("Perron value {} but ρ = {rho}", summary.perron)
    })?;

    let rho_q = in_own_field(&rho);
    let rho_image = rho_q.mul(&rho_q).add(&rho_q);
    ensure(
        !QuadNum::eval(&gram.restricted_poly, &rho_image).is_zero(),
        Clause::RhoOutsideP,
        || format!("ρ = {rho} lies in some P_γ"),
    )?;
    ensure(
        !psi.satisfies_t2_plus_t(&BigRational::from_integer(omega.clone())),
        Clause::PsiOutsidePOmega,
        || format!("ψ = {psi} lies in P_{omega}"),
    )?;

    let gammas: Vec<BigRational> = gram
        .exact_values()
        .iter()
        .filter_map(|v| v.as_rational().cloned())
        .collect();
    let zero = EigenvalueExact::integer(0);
    for gamma in &gammas {
        ensure(
            gamma.is_zero() || !zero.satisfies_t2_plus_t(gamma),
            Clause::ZeroOutsideP,
            || format!("0 ∈ P_{gamma}"),
        )?;
    }
    ensure(lifted.is_squarefree(), Clause::DisjointP, || {
        format!("{lifted} has a repeated root")
    })?;
    let pairs: Vec<(EigenvalueExact, EigenvalueExact)> =
        gammas.iter().map(p_gamma).collect::<Result<_, _>>()?;
    for (i, a) in pairs.iter().enumerate() {
        for b in &pairs[i + 1..] {
            let meets = [&a.0, &a.1].iter().any(|x| *x == &b.0 || *x == &b.1);
            ensure(!meets, Clause::DisjointP, || format!("{a:?} meets {b:?}"))?;
        }
    }

    let r_count = gram.restricted_poly.degree().unwrap_or(0);
    ensure(summary.delta > 2 * r_count, Clause::DeltaBound, || {
        format!("δ = {}, |R| = {r_count}", summary.delta)
    })?;

    let lifted_checks = lifted_eigenvector_check(g, &gram_m, &gammas)?;

    Ok(DescriptionReport {
        quotient,
        rho,
        psi,
        gram,
        predicted,
        rank_a,
        rank_b,
        singular,
        p0_zero_dropped,
        lifted_checks,
        summary,
    })
}

/// For each rational restricted `γ` and each nonzero rational `μ ∈ P_γ`, lifts an
/// eigenvector `x ⊥ j` of `BBᵀ` to `(x, μ⁻¹Bᵀx)` and checks it is a `μ`-eigenvector
/// of `A`. Returns the number of vectors checked.
pub fn lifted_eigenvector_check(
    g: &SplitGraph,
    gram_m: &IntMatrix,
    gammas: &[BigRational],
) -> Result<usize, SpectralError> {
    let a = g.adjacency();
    let bt = g.biadjacency().transpose().to_int();
    let mut checked = 0;
    for gamma in gammas {
        let basis = gram_m.shifted_by(gamma).nullspace();
        let Some(x) = orthogonal_to_ones(&basis) else {
            return Err(fail(Clause::LiftedEigenvector, format!("no eigenvector ⊥ j for γ = {gamma}")));
        };
        let (m1, m2) = p_gamma(gamma)?;
        for mu in [m1, m2] {
            let Some(mu) = mu.as_rational().filter(|m| !m.is_zero()).cloned() else {
                continue;
            };
            let mut y = x.clone();
            y.extend(bt.apply(&x).into_iter().map(|v| v / &mu));
            let ay = a.apply(&y);
            let ok = ay.iter().zip(&y).all(|(l, r)| l == &(r * &mu));
            ensure(ok, Clause::LiftedEigenvector, || format!("γ = {gamma}, μ = {mu}"))?;
            checked += 1;
        }
    }
    Ok(checked)
}

/// A nonzero vector in the span of `basis` orthogonal to the all-ones vector.
fn orthogonal_to_ones(basis: &[Vec<BigRational>]) -> Option<Vec<BigRational>> {
    let sum = |v: &Vec<BigRational>| v.iter().fold(BigRational::zero(), |acc, x| acc + x);
    if let Some(v) = basis.iter().find(|v| sum(v).is_zero()) {
        return Some(v.clone());
    }
    let (first, rest) = basis.split_first()?;
    let v = rest.first()?;
    let (s0, s1) = (sum(first), sum(v));
    Some(v.iter().zip(first).map(|(a, b)| a * &s0 - b * &s1).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::design::Design;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    fn fano() -> Design {
        Design::new(
            7,
            vec![
                vec![1, 2, 3],
                vec![1, 4, 5],
                vec![1, 6, 7],
                vec![2, 4, 6],
                vec![2, 5, 7],
                vec![3, 4, 7],
                vec![3, 5, 6],
            ],
        )
        .unwrap()
    }

    #[test]
    fn quotient_of_corona() {
        let g = SplitGraph::corona_clique(14);
        assert_eq!(quotient_matrix(&g).unwrap().entries(), [[13, 1], [1, 0]]);
        let (rho, psi) = rho_psi(&SplitGraph::corona_clique(2)).unwrap();
        assert_eq!(rho.to_string(), "(1 + √5)/2");
        assert_eq!(psi.to_string(), "(1 - √5)/2");
    }

    #[test]
    fn p_gamma_roots() {
        let (a, b) = p_gamma(&q(0)).unwrap();
        assert_eq!((a, b), (EigenvalueExact::integer(0), EigenvalueExact::integer(-1)));
        let (a, b) = p_gamma(&q(6)).unwrap();
        assert_eq!((a, b), (EigenvalueExact::integer(2), EigenvalueExact::integer(-3)));
        let (a, _) = p_gamma(&q(1)).unwrap();
        assert_eq!(a.to_string(), "(-1 + √5)/2");
        assert!(matches!(p_gamma(&q(-1)), Err(SpectralError::NegativeGamma(_))));
    }

    #[test]
    fn restricted_of_identity_and_fano_gram() {
        let r = restricted_eigenvalues(&IntMatrix::identity(4), &1.into()).unwrap();
        assert!(r.reducible);
        assert_eq!(r.exact_values(), vec![EigenvalueExact::integer(1)]);
        let m = IntMatrix::ones(7, 7).add(&IntMatrix::scalar(7, 2.into()));
        let r = restricted_eigenvalues(&m, &9.into()).unwrap();
        assert!(!r.reducible);
        assert_eq!(r.exact_values(), vec![EigenvalueExact::integer(2)]);
        assert_eq!(r.restricted_poly, IntPoly::from_i64(&[-2, 1]));
        assert!(matches!(
            restricted_eigenvalues(&m, &8.into()),
            Err(SpectralError::NotStochastic { row: 0, .. })
        ));
    }

    #[test]
    fn two_valued_structure_is_enforced() {
        // Irreducible 2-stochastic with two eigenvalues: J + I on 2 points
        let m = IntMatrix::from_rows(&[[1, 1], [1, 1]]);
        let r = restricted_eigenvalues(&m, &2.into()).unwrap();
        assert_eq!(r.exact_values(), vec![EigenvalueExact::integer(0)]);
    }

    #[test]
    fn fano_graph_description() {
        let g = SplitGraph::from_design(&fano());
        assert_eq!(g.diameter(), Some(2));
        let rep = verify_spectrum_description(&g).unwrap();
        assert_eq!(rep.rho.to_string(), "3 + 3√2");
        assert!(!rep.singular);
        assert_eq!(rep.summary.delta, 4);
        assert_eq!(rep.summary.describe(), "[3 + 3√2]^1, 1^6, [3 - 3√2]^1, -2^6");
        assert_eq!(rep.lifted_checks, 2);
    }

    #[test]
    fn corona_description() {
        let rep = verify_spectrum_description(&SplitGraph::corona_clique(14)).unwrap();
        assert!(rep.gram.reducible);
        assert_eq!(rep.summary.delta, 4);
        assert_eq!(rep.rank_a, 28);
    }

    #[test]
    fn non_bidegreed_is_rejected() {
        let d = Design::new(
            4,
            vec![vec![1, 2, 3, 4], vec![1, 2], vec![1, 3], vec![1, 4], vec![2, 3], vec![2, 4], vec![3, 4]],
        )
        .unwrap();
        let g = SplitGraph::from_design(&d);
        assert_eq!(quotient_matrix(&g), Err(SpectralError::NotBidegreed));
        let s = spectrum_summary(&g).unwrap();
        assert_eq!(s.describe(), "5^1, 1^3, 0^3, -2^4");
        assert_eq!(s.rank, 8);
    }

    #[test]
    fn path_on_three_vertices_has_a_non_uniform_partition() {
        let g = SplitGraph::new(crate::binary::BinaryMatrix::from_fn(2, 1, |i, _| i == 0));
        assert_eq!(quotient_matrix(&g), Err(SpectralError::NonUniformPartition));
    }

    #[test]
    fn kernel_of_the_gram_lifts_only_to_minus_one() {
        let rows = ["10", "01", "01", "10"];
        let b = crate::binary::BinaryMatrix::from_fn(4, 2, |i, j| rows[i].as_bytes()[j] == b'1');
        let rep = verify_spectrum_description(&SplitGraph::new(b)).unwrap();
        assert!(!rep.singular);
        assert!(rep.p0_zero_dropped);
        assert_eq!(rep.summary.delta, 5);
        assert_eq!(rep.predicted, rep.summary.min_poly);
    }
}
