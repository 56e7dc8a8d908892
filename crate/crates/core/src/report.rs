//! Serializable reports and their plain-text rendering.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::classify::{
    classify_bidegreed, predict_from_design, CatalogReport, Census, Classification, ClassifyError, Prediction,
};
use crate::design::{Design, DesignParams, RlParams};
use crate::graph::{Bidegree, SplitGraph};
use crate::input::{Format, Input};
use crate::spectral::{spectrum_summary, SpectralError, SpectrumSummary, TraceChecks};

#[derive(Debug, Error)]
pub enum ReportError {
    #[error("graph has {order} vertices, above the limit of {limit}")]
    TooLarge { order: usize, limit: usize },
    #[error(transparent)]
    Spectral(#[from] SpectralError),
    #[error(transparent)]
    Classify(#[from] ClassifyError),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EigenvalueReport {
    pub value: String,
    pub approx: f64,
    pub multiplicity: usize,
    pub exact: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpectrumReport {
    pub delta: usize,
    pub eigenvalues: Vec<EigenvalueReport>,
    pub perron: String,
    pub rank: usize,
    pub min_poly: String,
    pub trace_checks: TraceChecks,
}

impl From<&SpectrumSummary> for SpectrumReport {
    fn from(s: &SpectrumSummary) -> Self {
        SpectrumReport {
            delta: s.delta,
            eigenvalues: s
                .entries
                .iter()
                .map(|e| EigenvalueReport {
                    value: e.value.to_string(),
                    approx: e.value.approx(),
                    multiplicity: e.multiplicity,
                    exact: e.value.exact().is_some(),
                })
                .collect(),
            perron: s.perron.to_string(),
            rank: s.rank,
            min_poly: s.min_poly.to_string(),
            trace_checks: s.trace_checks,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphReport {
    pub c: usize,
    pub s: usize,
    pub vertices: usize,
    pub edges: usize,
    pub connected: bool,
    pub diameter: Option<usize>,
    pub degree_sequence: String,
    pub distinct_degrees: usize,
    pub bidegreed: bool,
    pub bidegree: Option<Bidegree>,
}

impl GraphReport {
    pub fn new(g: &SplitGraph) -> Self {
        let ds = g.degree_summary();
        let diameter = g.diameter();
        GraphReport {
            c: g.c(),
            s: g.s(),
            vertices: g.order(),
            edges: g.edge_count(),
            connected: diameter.is_some(),
            diameter,
            degree_sequence: ds.sequence(),
            distinct_degrees: ds.t(),
            bidegreed: ds.bidegreed,
            bidegree: ds.bidegree,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DesignReport {
    pub v: usize,
    pub b: usize,
    pub block_sizes: Vec<usize>,
    pub params: Option<DesignParams>,
    pub rl: Option<RlParams>,
    pub rl_error: Option<String>,
    pub square_condition: Option<bool>,
    pub disjoint_pair: Option<(usize, usize)>,
    pub repeated_blocks: bool,
    pub intersection_sizes: Vec<usize>,
}

impl DesignReport {
    pub fn new(d: &Design) -> Self {
        let mut sizes: Vec<usize> = d.blocks().iter().map(|b| b.len()).collect();
        sizes.sort_unstable();
        sizes.dedup();
        let rl = d.validate_rl();
        DesignReport {
            v: d.v(),
            b: d.b(),
            block_sizes: sizes,
            params: d.validate_uniform().ok(),
            rl: rl.as_ref().ok().copied(),
            rl_error: rl.as_ref().err().map(ToString::to_string),
            square_condition: rl.as_ref().ok().map(crate::design::rl_check_square_condition),
            disjoint_pair: d.disjoint_pair(),
            repeated_blocks: d.has_repeated_blocks(),
            intersection_sizes: d.block_intersection_profile().into_iter().collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub input: String,
    pub format: Format,
    pub design: Option<DesignReport>,
    pub graph: GraphReport,
    pub spectrum: Option<SpectrumReport>,
    pub warnings: Vec<String>,
}

/// Design parameters, graph metrics and the exact spectrum of an input.
pub fn analyze(input: &Input, label: &str, format: Format, max_order: usize) -> Result<AnalysisReport, ReportError> {
    let g = input.graph();
    if g.order() > max_order {
        return Err(ReportError::TooLarge {
            order: g.order(),
            limit: max_order,
        });
    }
    let graph = GraphReport::new(&g);
    let mut warnings = Vec::new();
    let design = input.design().map(DesignReport::new);
    if let Some(e) = design.as_ref().and_then(|d| d.rl_error.as_ref()) {
        warnings.push(format!("not an (r,λ)-design: {e}"));
    }
    let spectrum = if graph.connected {
        Some(SpectrumReport::from(&spectrum_summary(&g)?))
    } else {
        warnings.push("graph is disconnected; spectrum omitted".to_string());
        None
    };
    Ok(AnalysisReport {
        input: label.to_string(),
        format,
        design,
        graph,
        spectrum,
        warnings,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifyReport {
    pub input: String,
    pub format: Format,
    pub c: usize,
    pub s: usize,
    pub classification: Classification,
    pub prediction: Option<Prediction>,
}

/// Classification of an input; designs additionally get the `r = λ²` prediction.
pub fn classify_input(input: &Input, label: &str, format: Format, max_order: usize) -> Result<ClassifyReport, ReportError> {
    let g = input.graph();
    if g.order() > max_order {
        return Err(ReportError::TooLarge {
            order: g.order(),
            limit: max_order,
        });
    }
    let prediction = match input {
        Input::Design(d) if d.validate_rl().is_ok() => Some(predict_from_design(d)?),
        _ => None,
    };
    let classification = match &prediction {
        Some(p) => p.classification.clone(),
        None => classify_bidegreed(&g)?,
    };
    Ok(ClassifyReport {
        input: label.to_string(),
        format,
        c: g.c(),
        s: g.s(),
        classification,
        prediction,
    })
}

fn opt<T: ToString>(x: Option<T>) -> String {
    x.map_or_else(|| "-".to_string(), |v| v.to_string())
}

impl AnalysisReport {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "input: {} ({})", self.input, self.format);
        if let Some(d) = &self.design {
            let _ = writeln!(out, "design: v={} b={} block sizes {:?}", d.v, d.b, d.block_sizes);
            if let Some(p) = d.params {
                let _ = writeln!(out, "  (v,b,r,k,λ) = {p}");
            }
            if let Some(rl) = d.rl {
                let _ = writeln!(out, "  (r,λ) = {rl}, r = λ²: {}", d.square_condition == Some(true));
            }
            let _ = writeln!(
                out,
                "  disjoint blocks: {}, repeated blocks: {}, intersections {:?}",
                d.disjoint_pair.map_or("none".to_string(), |(i, j)| format!("{i} and {j}")),
                d.repeated_blocks,
                d.intersection_sizes
            );
        }
        let g = &self.graph;
        let _ = writeln!(out, "graph: c={} s={} vertices={} edges={}", g.c, g.s, g.vertices, g.edges);
        let _ = writeln!(out, "  connected: {}, diameter: {}", g.connected, opt(g.diameter));
        let _ = writeln!(out, "  degrees: {} (t = {})", g.degree_sequence, g.distinct_degrees);
        if let Some(bd) = g.bidegree {
            let _ = writeln!(out, "  bidegreed: d={} k={} k′={}", bd.d, bd.k, bd.k_prime);
        }
        if let Some(s) = &self.spectrum {
            let _ = writeln!(out, "spectrum: δ = {}, rank {}, Perron value {}", s.delta, s.rank, s.perron);
            for e in &s.eigenvalues {
                let _ = writeln!(out, "  {:>24}  ×{:<5} ≈ {:.6}", e.value, e.multiplicity, e.approx);
            }
            let _ = writeln!(out, "  minimal polynomial: {}", s.min_poly);
        }
        for w in &self.warnings {
            let _ = writeln!(out, "warning: {w}");
        }
        out
    }
}

impl ClassifyReport {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let c = &self.classification;
        let _ = writeln!(out, "input: {} ({}), c={} s={}", self.input, self.format, self.c, self.s);
        let _ = writeln!(out, "diameter: {}, δ = {}", opt(c.diameter), c.delta);
        let _ = writeln!(out, "verdict: {}", c.verdict);
        if let Some(p) = &self.prediction {
            let _ = writeln!(
                out,
                "prediction: (r,λ) = {}, r = λ²: {}, disjoint blocks: {}, predicts 3-extremal: {}, confirmed",
                p.rl,
                p.square_condition,
                p.disjoint_pair.is_some(),
                p.predicted
            );
        }
        out
    }
}

/// Aligned table with columns `c, s, diameter, delta, bidegreed, verdict, parameters`.
fn table(rows: &[[String; 7]]) -> String {
    let header = ["c", "s", "diameter", "delta", "bidegreed", "verdict", "parameters"];
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for r in rows {
        for (w, cell) in widths.iter_mut().zip(r) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: &[&str]| {
        let parts: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c}{}", " ".repeat(w - c.chars().count())))
            .collect();
        parts.join("  ").trim_end().to_string() + "\n"
    };
    let mut out = line(&header);
    for r in rows {
        let cells: Vec<&str> = r.iter().map(String::as_str).collect();
        out.push_str(&line(&cells));
    }
    out
}

fn verdict_params(c: &Classification) -> String {
    use crate::classify::Verdict;
    match &c.verdict {
        Verdict::DesignBranch { params, .. } => params.to_string(),
        Verdict::CoronaBranch { c } => format!("K_{c}∘K_1"),
        Verdict::OutOfHypothesis { reason } => reason.to_string(),
        Verdict::NotThreeExtremal { .. } => "-".to_string(),
    }
}

pub fn census_table(census: &Census, only_extremal: bool) -> String {
    let rows: Vec<[String; 7]> = census
        .entries
        .iter()
        .filter(|e| !only_extremal || e.three_extremal())
        .map(|e| {
            [
                e.c.to_string(),
                e.s.to_string(),
                opt(e.classification.diameter),
                e.classification.delta.to_string(),
                e.bidegreed.to_string(),
                e.classification.verdict.label().to_string(),
                format!("B={} {}", e.rows.join("/"), verdict_params(&e.classification)),
            ]
        })
        .collect();
    let mut out = table(&rows);
    let _ = writeln!(
        out,
        "{} matrices, {} classes, {} connected, {} with diameter 3 and δ = 4, max t among them: {}",
        census.matrices_scanned,
        census.classes,
        census.entries.len(),
        census.extremal().count(),
        opt(census.max_extremal_t())
    );
    out
}

pub fn catalog_table(report: &CatalogReport) -> String {
    let rows: Vec<[String; 7]> = report
        .entries
        .iter()
        .map(|e| {
            let params = match (e.params, e.rl) {
                (Some(p), _) => p.to_string(),
                (None, Some(rl)) => format!("(r,λ)={rl}"),
                _ => verdict_params(&e.classification),
            };
            [
                e.c.to_string(),
                e.s.to_string(),
                opt(e.classification.diameter),
                e.classification.delta.to_string(),
                e.bidegreed.to_string(),
                e.classification.verdict.label().to_string(),
                format!("{}: {params}", e.name),
            ]
        })
        .collect();
    let mut out = table(&rows);
    let _ = writeln!(
        out,
        "{} files, {} with diameter 3 and δ = 4 ({} corona, {} design)",
        report.entries.len(),
        report.three_extremal,
        report.corona_branch,
        report.design_branch
    );
    out
}
