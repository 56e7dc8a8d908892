//! WebAssembly bindings for the browser demo. Every export returns a JSON string.

use serde::Serialize;
use wasm_bindgen::prelude::*;

use extremal_split::classify::{classify_bidegreed, enumerate_small, fujiwara_design, Classification};
use extremal_split::design::sts;
use extremal_split::graph::SplitGraph;
use extremal_split::input::{parse_input, Format, Input};
use extremal_split::report::{analyze, AnalysisReport};

/// Largest graph the page will analyze.
pub const MAX_ORDER: usize = 300;

#[derive(Serialize)]
pub struct Analysis {
    pub report: AnalysisReport,
    pub classification: Classification,
    /// The analyzed object in its file format.
    pub text: String,
}

fn to_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("reports serialize")
}

fn analysis(input: Input, format: Format, label: &str) -> Result<Analysis, String> {
    let report = analyze(&input, label, format, MAX_ORDER).map_err(|e| e.to_string())?;
    let classification = classify_bidegreed(&input.graph()).map_err(|e| e.to_string())?;
    let text = match &input {
        Input::Design(d) => d.to_block_list(),
        Input::Graph(g) => g.to_split_format(),
    };
    Ok(Analysis {
        report,
        classification,
        text,
    })
}

/// Analyzes pasted text; `format` is empty for auto-detection.
pub fn analyze_text_native(text: &str, format: &str) -> Result<String, String> {
    let format = if format.is_empty() { None } else { Some(format.parse::<Format>()?) };
    let (input, format) = parse_input(text, format).map_err(|e| e.to_string())?;
    analysis(input, format, "pasted input").map(|a| to_json(&a))
}

/// Builds `corona`, `sts` or `fujiwara` with parameter `n` and analyzes it.
pub fn generate_native(kind: &str, n: usize) -> Result<String, String> {
    let (input, format) = match kind {
        "corona" if n >= 1 => (Input::Graph(SplitGraph::corona_clique(n)), Format::Split),
        "corona" => return Err("corona needs c ≥ 1".to_string()),
        "sts" => (Input::Design(sts(n).map_err(|e| e.to_string())?), Format::Blocks),
        "fujiwara" => (Input::Design(fujiwara_design(n).map_err(|e| e.to_string())?), Format::Blocks),
        other => return Err(format!("unknown construction `{other}`")),
    };
    analysis(input, format, &format!("{kind} {n}")).map(|a| to_json(&a))
}

/// Census of connected split graphs with `c ≤ c_max`, `s ≤ s_max`.
pub fn enumerate_native(c_max: usize, s_max: usize, only_extremal: bool) -> Result<String, String> {
    let mut census = enumerate_small(c_max, s_max, None).map_err(|e| e.to_string())?;
    if only_extremal {
        census.entries.retain(|e| e.three_extremal());
    }
    Ok(to_json(&census))
}

#[wasm_bindgen]
pub fn analyze_text(text: &str, format: &str) -> Result<String, JsValue> {
    analyze_text_native(text, format).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn generate(kind: &str, n: usize) -> Result<String, JsValue> {
    generate_native(kind, n).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn enumerate(c_max: usize, s_max: usize, only_extremal: bool) -> Result<String, JsValue> {
    enumerate_native(c_max, s_max, only_extremal).map_err(|e| JsValue::from_str(&e))
}
