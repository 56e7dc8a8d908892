use std::path::PathBuf;
use std::process::{Command, Output};

use extremal_split::classify::Census;
use extremal_split::report::{AnalysisReport, ClassifyReport};
use serde_json::Value;

fn data(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "core", "data", name].iter().collect();
    p.to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_extremal-split"))
        .args(args)
        .env_remove("EXTREMAL_SPLIT_MAX_N")
        .output()
        .expect("binary runs")
}

fn ok(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> Value {
    serde_json::from_str(&ok(args)).unwrap()
}

fn spectrum_pairs(v: &Value) -> Vec<(String, u64)> {
    v["spectrum"]["eigenvalues"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| (e["value"].as_str().unwrap().to_string(), e["multiplicity"].as_u64().unwrap()))
        .collect()
}

#[test]
fn analyze_rl_design_reports_the_printed_spectrum() {
    let v = json(&["analyze", &data("rl42.blocks"), "--json"]);
    assert_eq!(v["graph"]["vertices"], 11);
    assert_eq!(v["graph"]["degree_sequence"], "7^4,4^1,2^6");
    assert_eq!(v["spectrum"]["delta"], 4);
    let want: Vec<(String, u64)> = [("5", 1), ("1", 3), ("0", 3), ("-2", 4)]
        .iter()
        .map(|(a, b)| (a.to_string(), *b))
        .collect();
    assert_eq!(spectrum_pairs(&v), want);
}

#[test]
fn analyze_d5_has_diameter_three_and_four_eigenvalues() {
    let v = json(&["analyze", &data("d5.cols"), "--json"]);
    assert_eq!(v["graph"]["diameter"], 3);
    assert_eq!(v["spectrum"]["delta"], 4);
    assert_eq!(v["design"]["params"]["r"], 9);
}

#[test]
fn analyze_text_is_derived_from_the_report() {
    let text = ok(&["analyze", &data("d10.cols")]);
    let v: AnalysisReport = serde_json::from_str(&ok(&["analyze", &data("d10.cols"), "--json"])).unwrap();
    assert_eq!(text, v.to_text());
}

#[test]
fn json_round_trips() {
    let raw = ok(&["analyze", &data("corona14.split"), "--json"]);
    let parsed: AnalysisReport = serde_json::from_str(&raw).unwrap();
    assert_eq!(serde_json::to_string_pretty(&parsed).unwrap() + "\n", raw);
    let raw = ok(&["classify", &data("d5.cols"), "--json"]);
    let parsed: ClassifyReport = serde_json::from_str(&raw).unwrap();
    assert_eq!(serde_json::to_string_pretty(&parsed).unwrap() + "\n", raw);
}

#[test]
fn empty_and_malformed_inputs_exit_with_two() {
    let dir = tempfile::tempdir().unwrap();
    let empty = dir.path().join("empty.blocks");
    std::fs::write(&empty, "").unwrap();
    assert_eq!(run(&["analyze", empty.to_str().unwrap()]).status.code(), Some(2));
    let bad = dir.path().join("bad.blocks");
    std::fs::write(&bad, "v=3\n1 9\n").unwrap();
    assert_eq!(run(&["analyze", bad.to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(run(&["analyze", "/nonexistent/file"]).status.code(), Some(2));
    assert_eq!(run(&["analyze", &data("d5.cols"), "--format", "xml"]).status.code(), Some(2));
}

#[test]
fn classify_printed_examples() {
    let v = json(&["classify", &data("d1.cols"), "--json"]);
    assert_eq!(v["classification"]["verdict"]["kind"], "out_of_hypothesis");
    assert_eq!(v["classification"]["verdict"]["reason"]["kind"], "diameter");
    assert_eq!(v["classification"]["verdict"]["reason"]["diameter"], 2);
    let v = json(&["classify", &data("corona14.split"), "--json"]);
    assert_eq!(v["classification"]["verdict"]["kind"], "corona_branch");
    assert_eq!(v["classification"]["verdict"]["c"], 14);
    let v = json(&["classify", &data("d10.cols"), "--json"]);
    assert_eq!(v["classification"]["verdict"]["kind"], "design_branch");
    assert_eq!(v["prediction"]["predicted"], true);
}

#[test]
fn generate_fujiwara_nine() {
    let text = ok(&["generate", "fujiwara", "--v", "9"]);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "v=9");
    assert_eq!(lines.len(), 49);
}

#[test]
fn generate_sts_eight_fails() {
    let out = run(&["generate", "sts", "--v", "8"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("no Steiner triple system"));
}

#[test]
fn analyze_after_generate_reproduces_parameters() {
    let dir = tempfile::tempdir().unwrap();
    let cases: [(&[&str], &str, u64, u64); 3] = [
        (&["sts", "--v", "13"], "sts.blocks", 26, 1),
        (&["fujiwara", "--v", "9"], "fuji.blocks", 48, 4),
        (&["rl-replicate"], "curd.blocks", 144, 6),
    ];
    for (args, file, b, lambda) in cases {
        let path = dir.path().join(file);
        let path_s = path.to_str().unwrap().to_string();
        let mut full: Vec<String> = vec!["generate".into()];
        full.extend(args.iter().map(|s| s.to_string()));
        if args[0] == "rl-replicate" {
            full.push(data("curd96.blocks"));
        }
        full.extend(["-o".to_string(), path_s.clone()]);
        let refs: Vec<&str> = full.iter().map(String::as_str).collect();
        ok(&refs);
        let v = json(&["analyze", &path_s, "--json"]);
        assert_eq!(v["design"]["b"], b, "{file}");
        assert_eq!(v["design"]["rl"]["lambda"], lambda, "{file}");
    }
    let path = dir.path().join("corona.split");
    ok(&["generate", "corona", "--c", "14", "-o", path.to_str().unwrap()]);
    let v = json(&["classify", path.to_str().unwrap(), "--json"]);
    assert_eq!(v["classification"]["verdict"]["kind"], "corona_branch");
}

#[test]
fn generate_with_analyze_chains() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c.split");
    let v: Value = serde_json::from_str(&ok(&[
        "generate",
        "corona",
        "--c",
        "5",
        "-o",
        path.to_str().unwrap(),
        "--analyze",
        "--json",
    ]))
    .unwrap();
    assert_eq!(v["spectrum"]["delta"], 4);
    assert!(std::fs::read_to_string(&path).unwrap().starts_with("split c=5 s=5"));
}

#[test]
fn enumerate_small_censuses() {
    let census: Census = serde_json::from_str(&ok(&["enumerate", "--c", "2", "--s", "2", "--only-extremal", "--json"])).unwrap();
    assert_eq!(census.entries.len(), 1);
    assert_eq!(census.entries[0].c, 2);
    assert_eq!(census.entries[0].s, 2);
    let census: Census = serde_json::from_str(&ok(&["enumerate", "--c", "1", "--s", "4", "--json"])).unwrap();
    assert!(census.entries.iter().all(|e| e.classification.diameter != Some(3)));
    assert_eq!(run(&["enumerate", "--c", "5", "--s", "5"]).status.code(), Some(2));
}

#[test]
fn output_is_deterministic() {
    let a = ok(&["enumerate", "--c", "3", "--s", "4", "--json", "--jobs", "1"]);
    let b = ok(&["enumerate", "--c", "3", "--s", "4", "--json", "--jobs", "4"]);
    assert_eq!(a, b);
    let a = ok(&["analyze", &data("d5.cols"), "--json"]);
    let b = ok(&["analyze", &data("d5.cols"), "--json"]);
    assert_eq!(a, b);
}

#[test]
fn order_limit_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_extremal-split"))
        .args(["analyze", &data("rl42.blocks")])
        .env("EXTREMAL_SPLIT_MAX_N", "10")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("limit of 10"));
}

#[test]
fn format_override() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("m.txt");
    std::fs::write(&p, "11\n10\n01\n").unwrap();
    let auto = json(&["analyze", p.to_str().unwrap(), "--json"]);
    assert_eq!(auto["format"], "incidence");
    assert_eq!(auto["design"]["v"], 3);
    let forced = json(&["analyze", p.to_str().unwrap(), "--format", "blocks", "--json"]);
    assert_eq!(forced["design"]["v"], 11);
}

#[test]
fn bundled_catalog_passes() {
    let v = json(&["catalog", "--json"]);
    assert_eq!(v["corona_branch"], 1);
    assert_eq!(v["design_branch"], 2);
}

#[test]
fn catalog_directory() {
    let dir = tempfile::tempdir().unwrap();
    for f in ["d5.cols", "fano.blocks"] {
        std::fs::copy(data(f), dir.path().join(f)).unwrap();
    }
    let v = json(&["catalog", dir.path().to_str().unwrap(), "--json"]);
    let names: Vec<&str> = v["entries"].as_array().unwrap().iter().map(|e| e["name"].as_str().unwrap()).collect();
    assert_eq!(names, ["d5.cols", "fano.blocks"]);
}
