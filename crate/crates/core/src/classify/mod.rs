//! Classification of connected bidegreed split graphs of diameter three with
//! four distinct eigenvalues, the design constructions that produce them, and a
//! brute-force census of small split graphs.

mod catalog;
mod census;

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::design::{rl_check_square_condition, sts, Design, DesignError, DesignParams, RlParams};
use crate::graph::SplitGraph;
use crate::linalg::{min_poly, EigenvalueExact, LinalgError};
use crate::spectral::{restricted_eigenvalues, rho_psi, SpectralError};

pub use catalog::{bundled_catalog, check_paper_catalog, verify_catalog, verify_catalog_texts, CatalogEntry, CatalogReport};
pub use census::{canonical_form, enumerate_small, Census, CensusEntry, ENUMERATION_CELL_LIMIT};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ClassifyError {
    #[error("theorem violation: {0}")]
    TheoremViolation(String),
    #[error("prediction mismatch: {0}")]
    PredictionMismatch(String),
    #[error("enumeration bound exceeded: c_max·s_max = {0} > 16")]
    TooLarge(usize),
    #[error(transparent)]
    Design(#[from] DesignError),
    #[error(transparent)]
    Spectral(#[from] SpectralError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error("{file}: {msg}")]
    Parse { file: String, msg: String },
    #[error("catalog check failed for {name}: {msg}")]
    CatalogMismatch { name: String, msg: String },
}

fn violation(msg: impl Into<String>) -> ClassifyError {
    ClassifyError::TheoremViolation(msg.into())
}

/// Why a graph falls outside the theorem's hypotheses.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Hypothesis {
    Disconnected,
    NotBidegreed { degrees: usize },
    NonUniformPartition,
    Diameter { diameter: usize },
}

impl fmt::Display for Hypothesis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Hypothesis::Disconnected => write!(f, "disconnected"),
            Hypothesis::NotBidegreed { degrees } => write!(f, "{degrees} distinct degrees"),
            Hypothesis::NonUniformPartition => write!(f, "degrees not constant on clique and stable set"),
            Hypothesis::Diameter { diameter } => write!(f, "diameter {diameter}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Verdict {
    CoronaBranch { c: usize },
    DesignBranch { params: DesignParams, disjoint_pair: (usize, usize) },
    NotThreeExtremal { delta: usize },
    OutOfHypothesis { reason: Hypothesis },
}

impl Verdict {
    pub fn is_branch(&self) -> bool {
        matches!(self, Verdict::CoronaBranch { .. } | Verdict::DesignBranch { .. })
    }

    pub fn label(&self) -> &'static str {
        match self {
            Verdict::CoronaBranch { .. } => "corona",
            Verdict::DesignBranch { .. } => "design",
            Verdict::NotThreeExtremal { .. } => "not-3-extremal",
            Verdict::OutOfHypothesis { .. } => "out-of-hypothesis",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::CoronaBranch { c } => write!(f, "corona K_{c}∘K_1"),
            Verdict::DesignBranch { params, disjoint_pair: (i, j) } => write!(
                f,
                "design {params}, r = λ² = {}, disjoint blocks {i} and {j}",
                params.r
            ),
            Verdict::NotThreeExtremal { delta } => write!(f, "not 3-extremal (δ = {delta})"),
            Verdict::OutOfHypothesis { reason } => write!(f, "outside hypotheses ({reason})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub verdict: Verdict,
    pub delta: usize,
    pub diameter: Option<usize>,
}

/// Number of distinct adjacency eigenvalues.
pub fn distinct_eigenvalues(g: &SplitGraph) -> Result<usize, LinalgError> {
    Ok(min_poly(&g.adjacency())?.degree().unwrap_or(0))
}

/// The structural form from the theorem, if the graph has one.
fn theorem_form(g: &SplitGraph, k: usize) -> Option<Verdict> {
    if k == 1 && g.biadjacency().is_permutation() {
        return Some(Verdict::CoronaBranch { c: g.c() });
    }
    let design = g.to_design().ok()?;
    let params = design.validate_uniform().ok()?;
    let pair = design.disjoint_pair()?;
    rl_check_square_condition(&params).then_some(Verdict::DesignBranch {
        params,
        disjoint_pair: pair,
    })
}

/// Classifies a split graph against the main theorem, checking both directions.
/// Disagreement between the computed spectrum and the structural form is a
/// [`ClassifyError::TheoremViolation`].
pub fn classify_bidegreed(g: &SplitGraph) -> Result<Classification, ClassifyError> {
    let delta = distinct_eigenvalues(g)?;
    let out = |reason, diameter| Classification {
        verdict: Verdict::OutOfHypothesis { reason },
        delta,
        diameter,
    };
    let Some(diameter) = g.diameter() else {
        return Ok(out(Hypothesis::Disconnected, None));
    };
    if delta < diameter + 1 {
        return Err(violation(format!("δ = {delta} < diameter + 1 = {}", diameter + 1)));
    }
    let ds = g.degree_summary();
    if !ds.bidegreed {
        return Ok(out(Hypothesis::NotBidegreed { degrees: ds.t() }, Some(diameter)));
    }
    let Some(bd) = ds.bidegree else {
        return Ok(out(Hypothesis::NonUniformPartition, Some(diameter)));
    };
    if diameter != 3 {
        return Ok(out(Hypothesis::Diameter { diameter }, Some(diameter)));
    }

    let permutation = g.biadjacency().is_permutation();
    if (bd.k == 1 && g.s() == g.c()) != permutation {
        return Err(violation(format!(
            "k = {}, s = {}, c = {} but B permutation = {permutation}",
            bd.k,
            g.s(),
            g.c()
        )));
    }

    let form = theorem_form(g, bd.k);
    let verdict = match (delta == 4, form) {
        (true, Some(v)) => v,
        (false, None) => Verdict::NotThreeExtremal { delta },
        (true, None) => return Err(violation("δ = 4 but the graph is neither a corona nor a design graph")),
        (false, Some(v)) => return Err(violation(format!("{v} but δ = {delta}"))),
    };
    if let Verdict::DesignBranch { params, .. } = &verdict {
        check_design_branch(g, params, bd.k, bd.k_prime)?;
    }
    Ok(Classification {
        verdict,
        delta,
        diameter: Some(diameter),
    })
}

/// Consequences of the design branch: `s > c`, `0 ∈ Spec(A)`, and
/// `R(BBᵀ) = {γ}` with `γ = k′(c−k)/(c−1) = r − λ = ψ² + ψ`.
fn check_design_branch(g: &SplitGraph, p: &DesignParams, k: usize, k_prime: usize) -> Result<(), ClassifyError> {
    let (c, s) = (g.c(), g.s());
    if (p.v, p.b, p.r, p.k) != (c as u64, s as u64, k_prime as u64, k as u64) {
        return Err(violation(format!("design {p} does not match c = {c}, s = {s}, k = {k}, k′ = {k_prime}")));
    }
    if s <= c {
        return Err(violation(format!("design branch with s = {s} ≤ c = {c}")));
    }
    if g.adjacency().rank() == g.order() {
        return Err(violation("design branch with 0 ∉ Spec(A)"));
    }
    let gamma = BigRational::new(BigInt::from(k_prime * (c - k)), BigInt::from(c - 1));
    let r_minus_l = BigRational::from_integer(BigInt::from(p.r - p.lambda));
    if gamma != r_minus_l {
        return Err(violation(format!("γ = {gamma} but r − λ = {r_minus_l}")));
    }
    let omega = BigInt::from(k * k_prime);
    let restricted = restricted_eigenvalues(&g.biadjacency().gram(), &omega)?;
    let gamma_value = EigenvalueExact::Rational(gamma.clone());
    if restricted.reducible || restricted.exact_values() != vec![gamma_value] || restricted.len() != 1 {
        return Err(violation(format!("R(BBᵀ) = {:?}, expected {{{gamma}}}", restricted.restricted)));
    }
    let (_, psi) = rho_psi(g)?;
    if !psi.satisfies_t2_plus_t(&gamma) {
        return Err(violation(format!("ψ² + ψ ≠ γ for ψ = {psi}")));
    }
    Ok(())
}

/// What the `r = λ²` theorem predicts for a design, and what computation confirms.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Prediction {
    pub rl: RlParams,
    pub uniform: Option<DesignParams>,
    pub square_condition: bool,
    pub disjoint_pair: Option<(usize, usize)>,
    /// True when `r = λ²` and some pair of blocks is disjoint.
    pub predicted: bool,
    pub diameter: Option<usize>,
    pub delta: usize,
    pub bidegreed: bool,
    pub classification: Classification,
}

impl Prediction {
    pub fn three_extremal(&self) -> bool {
        self.diameter == Some(3) && self.delta == 4
    }
}

/// Validates an `(r,λ)`-design, predicts from `r = λ²` and disjoint blocks, and
/// confirms on `G_D`.
pub fn predict_from_design(design: &Design) -> Result<Prediction, ClassifyError> {
    let rl = design.validate_rl()?;
    let uniform = design.validate_uniform().ok();
    let square_condition = rl_check_square_condition(&rl);
    let disjoint_pair = design.disjoint_pair();
    let predicted = square_condition && disjoint_pair.is_some();

    let g = SplitGraph::from_design(design);
    let classification = classify_bidegreed(&g)?;
    let diameter = classification.diameter;
    let delta = classification.delta;
    let bidegreed = g.degree_summary().bidegreed;

    if predicted && (diameter != Some(3) || delta != 4) {
        return Err(ClassifyError::PredictionMismatch(format!(
            "r = λ² = {} with disjoint blocks, but diameter {:?} and δ = {delta}",
            rl.r, diameter
        )));
    }
    if diameter == Some(3) && disjoint_pair.is_none() {
        return Err(violation("diameter 3 without a pair of disjoint blocks"));
    }
    if let Some(p) = uniform {
        if p.b == p.v && diameter.is_some_and(|d| d > 2) {
            return Err(violation("symmetric design with diameter above 2"));
        }
    }
    Ok(Prediction {
        rl,
        uniform,
        square_condition,
        disjoint_pair,
        predicted,
        diameter,
        delta,
        bidegreed,
        classification,
    })
}

/// `(v−1)/2` copies of an STS(v): a `(v, 3, (v−1)/2)` design with `r = λ²`.
pub fn fujiwara_design(v: usize) -> Result<Design, DesignError> {
    let base = sts(v)?;
    if v < 9 {
        return Err(DesignError::TooSmall(v));
    }
    Ok(base.replicate((v - 1) / 2))
}

/// `r₀` copies of an `(r₀, 1)`-design: an `(r₀², r₀)`-design.
pub fn rl_replicate(d0: &Design) -> Result<Design, DesignError> {
    let p = d0.validate_rl()?;
    if p.lambda != 1 {
        return Err(DesignError::NotLambdaOne(p.lambda));
    }
    Ok(d0.replicate(p.r as usize))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::design::parse_block_list;

    fn rl42() -> Design {
        parse_block_list(include_str!("../../data/rl42.blocks")).unwrap()
    }

    #[test]
    fn corona_is_corona_branch() {
        let c = classify_bidegreed(&SplitGraph::corona_clique(14)).unwrap();
        assert_eq!(c.verdict, Verdict::CoronaBranch { c: 14 });
        assert_eq!((c.delta, c.diameter), (4, Some(3)));
        let c = classify_bidegreed(&SplitGraph::corona_clique(1)).unwrap();
        assert!(matches!(c.verdict, Verdict::OutOfHypothesis { .. }));
    }

    #[test]
    fn fujiwara_parameters() {
        let p = fujiwara_design(9).unwrap().validate_uniform().unwrap();
        assert_eq!(p, DesignParams { v: 9, b: 48, r: 16, k: 3, lambda: 4 });
        let p = fujiwara_design(13).unwrap().validate_uniform().unwrap();
        assert_eq!(p, DesignParams { v: 13, b: 156, r: 36, k: 3, lambda: 6 });
        assert_eq!(fujiwara_design(7), Err(DesignError::TooSmall(7)));
        assert_eq!(fujiwara_design(8), Err(DesignError::NoStsExists(8)));
    }

    #[test]
    fn fujiwara_nine_is_confirmed() {
        let pred = predict_from_design(&fujiwara_design(9).unwrap()).unwrap();
        assert!(pred.predicted && pred.three_extremal());
        assert!(matches!(pred.classification.verdict, Verdict::DesignBranch { .. }));
    }

    #[test]
    fn replication_of_lambda_one_designs() {
        let single = Design::new(2, vec![vec![1, 2]]).unwrap();
        assert_eq!(rl_replicate(&single).unwrap(), single);
        assert_eq!(rl_replicate(&rl42()), Err(DesignError::NotLambdaOne(2)));
    }

    #[test]
    fn rl_design_prediction() {
        let pred = predict_from_design(&rl42()).unwrap();
        assert!(pred.predicted);
        assert!(pred.three_extremal());
        assert!(!pred.bidegreed);
        assert_eq!(
            pred.classification.verdict,
            Verdict::OutOfHypothesis { reason: Hypothesis::NotBidegreed { degrees: 3 } }
        );
    }

    #[test]
    fn fano_replicated_has_no_disjoint_blocks() {
        let d = parse_block_list(include_str!("../../data/fano.blocks")).unwrap().replicate(3);
        let pred = predict_from_design(&d).unwrap();
        assert!(pred.square_condition);
        assert!(!pred.predicted);
        assert_eq!(pred.diameter, Some(2));
    }
}
