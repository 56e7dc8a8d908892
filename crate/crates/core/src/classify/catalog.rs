use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::{classify_bidegreed, predict_from_design, Classification, ClassifyError, Verdict};
use crate::design::{DesignParams, RlParams};
use crate::input::{parse_input, Format, Input};

const BUNDLED: [(&str, &str); 7] = [
    ("d1.cols", include_str!("../../data/d1.cols")),
    ("d5.cols", include_str!("../../data/d5.cols")),
    ("d10.cols", include_str!("../../data/d10.cols")),
    ("corona14.split", include_str!("../../data/corona14.split")),
    ("fano.blocks", include_str!("../../data/fano.blocks")),
    ("rl42.blocks", include_str!("../../data/rl42.blocks")),
    ("curd96.blocks", include_str!("../../data/curd96.blocks")),
];

/// The example files shipped with the crate, as `(file name, contents)`.
pub fn bundled_catalog() -> Vec<(&'static str, &'static str)> {
    BUNDLED.to_vec()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub name: String,
    pub format: Format,
    pub c: usize,
    pub s: usize,
    pub params: Option<DesignParams>,
    pub rl: Option<RlParams>,
    /// Whether `r = λ²` with disjoint blocks predicts diameter 3 and δ = 4.
    pub predicted: Option<bool>,
    /// Blocks occurring more than once, with their multiplicity.
    pub repeated_blocks: Vec<(String, usize)>,
    pub bidegreed: bool,
    pub classification: Classification,
}

impl CatalogEntry {
    pub fn three_extremal(&self) -> bool {
        self.classification.diameter == Some(3) && self.classification.delta == 4
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogReport {
    pub entries: Vec<CatalogEntry>,
    pub three_extremal: usize,
    pub corona_branch: usize,
    pub design_branch: usize,
}

fn entry(name: &str, text: &str) -> Result<CatalogEntry, ClassifyError> {
    let (input, format) = parse_input(text, None).map_err(|e| ClassifyError::Parse {
        file: name.to_string(),
        msg: e.to_string(),
    })?;
    let g = input.graph();
    let bidegreed = g.degree_summary().bidegreed;
    let mut out = CatalogEntry {
        name: name.to_string(),
        format,
        c: g.c(),
        s: g.s(),
        params: None,
        rl: None,
        predicted: None,
        repeated_blocks: Vec::new(),
        bidegreed,
        classification: classify_bidegreed(&g)?,
    };
    if let Input::Design(d) = &input {
        let pred = predict_from_design(d)?;
        debug_assert_eq!(pred.classification, out.classification);
        out.params = pred.uniform;
        out.rl = Some(pred.rl);
        out.predicted = Some(pred.predicted);
        let mut counts = BTreeMap::new();
        for b in d.blocks() {
            *counts.entry(b).or_insert(0usize) += 1;
        }
        out.repeated_blocks = counts
            .into_iter()
            .filter(|(_, m)| *m > 1)
            .map(|(b, m)| (b.to_string(), m))
            .collect();
    }
    Ok(out)
}

/// Runs prediction and classification on each `(name, contents)` pair.
pub fn verify_catalog_texts(files: &[(&str, &str)]) -> Result<CatalogReport, ClassifyError> {
    let entries = files
        .iter()
        .map(|(name, text)| entry(name, text))
        .collect::<Result<Vec<_>, _>>()?;
    let count = |f: fn(&Verdict) -> bool| entries.iter().filter(|e| f(&e.classification.verdict)).count();
    Ok(CatalogReport {
        three_extremal: entries.iter().filter(|e| e.three_extremal()).count(),
        corona_branch: count(|v| matches!(v, Verdict::CoronaBranch { .. })),
        design_branch: count(|v| matches!(v, Verdict::DesignBranch { .. })),
        entries,
    })
}

/// Runs [`verify_catalog_texts`] on every regular file of a directory, in name order.
pub fn verify_catalog(dir: &Path) -> Result<CatalogReport, ClassifyError> {
    let io_err = |e: std::io::Error| ClassifyError::Parse {
        file: dir.display().to_string(),
        msg: e.to_string(),
    };
    let mut paths: Vec<_> = std::fs::read_dir(dir)
        .map_err(io_err)?
        .filter_map(Result::ok)
        .map(|e| e.path())
        .filter(|p| p.is_file())
        .collect();
    paths.sort();
    let mut files = Vec::new();
    for p in &paths {
        let text = std::fs::read_to_string(p).map_err(io_err)?;
        let name = p.file_name().map(|n| n.to_string_lossy().into_owned()).unwrap_or_default();
        files.push((name, text));
    }
    let refs: Vec<(&str, &str)> = files.iter().map(|(n, t)| (n.as_str(), t.as_str())).collect();
    verify_catalog_texts(&refs)
}

/// Checks the properties stated for the printed examples `D_1`, `D_5`, `D_10`
/// and `K_14∘K_1` on whichever of them appear in the report.
pub fn check_paper_catalog(report: &CatalogReport) -> Result<usize, ClassifyError> {
    let d7 = DesignParams { v: 7, b: 21, r: 9, k: 3, lambda: 3 };
    let mut checked = 0;
    for e in &report.entries {
        let stem = e.name.split('.').next().unwrap_or("");
        let fail = |msg: &str| ClassifyError::CatalogMismatch {
            name: e.name.clone(),
            msg: msg.to_string(),
        };
        let design_branch = matches!(
            &e.classification.verdict,
            Verdict::DesignBranch { params, .. } if *params == d7 && params.r == params.lambda * params.lambda
        );
        match stem {
            "d1" => {
                if e.classification.diameter != Some(2) || e.params != Some(d7) {
                    return Err(fail("expected a (7,21,9,3,3) design with diameter 2"));
                }
            }
            "d5" | "d10" => {
                if !e.three_extremal() || !design_branch {
                    return Err(fail("expected diameter 3, δ = 4 and the design branch"));
                }
                let triple = e.repeated_blocks.iter().find(|(b, _)| b == "{1,2,3}").map(|(_, m)| *m);
                if stem == "d5" && triple != Some(3) {
                    return Err(fail("expected block {1,2,3} three times"));
                }
                if stem == "d10" && !e.repeated_blocks.is_empty() {
                    return Err(fail("expected no repeated blocks"));
                }
            }
            "corona14" => {
                if e.classification.verdict != (Verdict::CoronaBranch { c: 14 }) || !e.three_extremal() {
                    return Err(fail("expected the corona branch with δ = 4"));
                }
            }
            _ => continue,
        }
        checked += 1;
    }
    Ok(checked)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_catalog_matches_the_printed_examples() {
        let files = bundled_catalog();
        let small: Vec<_> = files.iter().copied().filter(|(n, _)| *n != "curd96.blocks").collect();
        let report = verify_catalog_texts(&small).unwrap();
        assert_eq!(check_paper_catalog(&report).unwrap(), 4);
        assert_eq!(report.corona_branch, 1);
        assert_eq!(report.design_branch, 2);
    }

    #[test]
    fn parse_errors_name_the_file() {
        let err = verify_catalog_texts(&[("bad.blocks", "v=2\n1 x\n")]).unwrap_err();
        assert!(matches!(err, ClassifyError::Parse { file, .. } if file == "bad.blocks"));
    }
}
