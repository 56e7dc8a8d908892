use thiserror::Error;

use super::SplitGraph;
use crate::binary::BinaryMatrix;
use crate::design::io::{content_lines, header_fields};
use crate::design::DesignError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("line {line}: {msg}")]
pub struct GraphParseError {
    pub line: usize,
    pub msg: String,
}

fn err(line: usize, msg: impl Into<String>) -> GraphParseError {
    GraphParseError {
        line,
        msg: msg.into(),
    }
}

/// Split format: header `split c=<c> s=<s>`, then `c` rows of `B` over `{0,1}`.
pub fn parse_split(text: &str) -> Result<SplitGraph, GraphParseError> {
    let mut lines = content_lines(text);
    let (no, header) = lines.next().ok_or_else(|| err(1, "empty input"))?;
    let fields = header_fields(no, header, "split", &["c", "s"]).map_err(|e| match e {
        DesignError::Parse { line, msg } => err(line, msg),
        other => err(no, other.to_string()),
    })?;
    let (c, s) = (fields[0], fields[1]);
    if c == 0 {
        return Err(err(no, "clique size must be at least 1"));
    }
    let mut b = BinaryMatrix::zeros(c, s);
    let mut seen = 0;
    for (i, (no, line)) in lines.enumerate() {
        if i >= c {
            return Err(err(no, format!("more than {c} rows")));
        }
        if line.chars().count() != s {
            return Err(err(no, format!("expected {s} characters")));
        }
        for (j, ch) in line.chars().enumerate() {
            match ch {
                '1' => b.set(i, j, true),
                '0' => {}
                _ => return Err(err(no, format!("unexpected character `{ch}`"))),
            }
        }
        seen += 1;
    }
    if seen != c && s > 0 {
        return Err(err(no, format!("expected {c} rows, found {seen}")));
    }
    Ok(SplitGraph::new(b))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let g = SplitGraph::corona_clique(3);
        let text = g.to_split_format();
        assert_eq!(text, "split c=3 s=3\n100\n010\n001\n");
        assert_eq!(parse_split(&text).unwrap(), g);
    }

    #[test]
    fn empty_stable_set() {
        let g = parse_split("split c=3 s=0\n").unwrap();
        assert_eq!(g.order(), 3);
        assert_eq!(g.diameter(), Some(1));
    }

    #[test]
    fn rejects_bad_shapes() {
        assert!(parse_split("split c=2 s=2\n10\n").is_err());
        assert!(parse_split("split c=2 s=2\n10\n011\n").is_err());
        assert!(parse_split("split c=1 s=2\n1x\n").is_err());
        assert!(parse_split("split c=0 s=0\n").is_err());
        assert!(parse_split("columns k=1 b=1\n1\n").is_err());
    }
}
