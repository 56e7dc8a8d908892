use extremal_split_web::{analyze_text_native, enumerate_native, generate_native};
use serde_json::Value;

fn parse(s: &str) -> Value {
    serde_json::from_str(s).unwrap()
}

#[test]
fn pasted_design_is_analyzed() {
    let v = parse(&analyze_text_native("1 2 3 4\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n", "").unwrap());
    assert_eq!(v["report"]["spectrum"]["delta"], 4);
    assert_eq!(v["report"]["graph"]["diameter"], 3);
    assert_eq!(v["classification"]["verdict"]["kind"], "out_of_hypothesis");
}

#[test]
fn explicit_format_and_errors() {
    let v = parse(&analyze_text_native("split c=2 s=2\n10\n01\n", "split").unwrap());
    assert_eq!(v["classification"]["verdict"]["kind"], "corona_branch");
    assert!(analyze_text_native("", "").is_err());
    assert!(analyze_text_native("1 2", "yaml").is_err());
}

#[test]
fn constructions() {
    let v = parse(&generate_native("fujiwara", 9).unwrap());
    assert_eq!(v["classification"]["verdict"]["kind"], "design_branch");
    assert!(v["text"].as_str().unwrap().starts_with("v=9\n"));
    let v = parse(&generate_native("corona", 6).unwrap());
    assert_eq!(v["report"]["spectrum"]["delta"], 4);
    assert!(generate_native("sts", 8).is_err());
    assert!(generate_native("corona", 0).is_err());
    assert!(generate_native("fujiwara", 19).is_err(), "above the page's order limit");
    assert!(generate_native("petersen", 3).is_err());
}

#[test]
fn census() {
    let v = parse(&enumerate_native(3, 3, true).unwrap());
    assert_eq!(v["entries"].as_array().unwrap().len(), 2);
    assert!(enumerate_native(5, 4, false).is_err());
}
