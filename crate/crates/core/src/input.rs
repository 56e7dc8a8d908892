//! Reading designs and split graphs from text, with format detection.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::design::{parse_block_list, parse_columns, parse_incidence, Design, DesignError};
use crate::graph::{parse_split, GraphParseError, SplitGraph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Blocks,
    Columns,
    Incidence,
    Split,
}

impl Format {
    pub const ALL: [Format; 4] = [Format::Blocks, Format::Columns, Format::Incidence, Format::Split];

    pub fn name(self) -> &'static str {
        match self {
            Format::Blocks => "blocks",
            Format::Columns => "columns",
            Format::Incidence => "incidence",
            Format::Split => "split",
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Format::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| format!("unknown format `{s}` (expected blocks, columns, incidence or split)"))
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum InputError {
    #[error("input is empty")]
    Empty,
    #[error(transparent)]
    Design(#[from] DesignError),
    #[error(transparent)]
    Graph(#[from] GraphParseError),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Input {
    Design(Design),
    Graph(SplitGraph),
}

impl Input {
    pub fn design(&self) -> Option<&Design> {
        match self {
            Input::Design(d) => Some(d),
            Input::Graph(_) => None,
        }
    }

    pub fn graph(&self) -> SplitGraph {
        match self {
            Input::Design(d) => SplitGraph::from_design(d),
            Input::Graph(g) => g.clone(),
        }
    }
}

fn first_content_line(text: &str) -> Option<&str> {
    text.lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .find(|l| !l.is_empty())
}

/// Picks a format from the first non-comment line: a `columns` or `split`
/// header, otherwise incidence when every line is a 0/1 string of one common
/// length of at least two, otherwise a block list.
pub fn detect_format(text: &str) -> Option<Format> {
    let first = first_content_line(text)?;
    if first.starts_with("columns") {
        return Some(Format::Columns);
    }
    if first.starts_with("split") {
        return Some(Format::Split);
    }
    let lines: Vec<&str> = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty())
        .collect();
    let width = lines[0].len();
    let incidence = width >= 2
        && lines
            .iter()
            .all(|l| l.len() == width && l.bytes().all(|b| b == b'0' || b == b'1'));
    Some(if incidence { Format::Incidence } else { Format::Blocks })
}

pub fn parse_input(text: &str, format: Option<Format>) -> Result<(Input, Format), InputError> {
    let format = match format {
        Some(f) => f,
        None => detect_format(text).ok_or(InputError::Empty)?,
    };
    if first_content_line(text).is_none() {
        return Err(InputError::Empty);
    }
    let input = match format {
        Format::Blocks => Input::Design(parse_block_list(text)?),
        Format::Columns => Input::Design(parse_columns(text)?),
        Format::Incidence => Input::Design(parse_incidence(text)?),
        Format::Split => Input::Graph(parse_split(text)?),
    };
    Ok((input, format))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn detection() {
        assert_eq!(detect_format("# x\ncolumns k=1 b=1\n1\n"), Some(Format::Columns));
        assert_eq!(detect_format("split c=1 s=0\n"), Some(Format::Split));
        assert_eq!(detect_format("110\n011\n"), Some(Format::Incidence));
        assert_eq!(detect_format("v=3\n1 2\n"), Some(Format::Blocks));
        assert_eq!(detect_format("10\n11\n"), Some(Format::Incidence));
        assert_eq!(detect_format("1\n10\n"), Some(Format::Blocks));
        assert_eq!(detect_format("# only a comment\n\n"), None);
    }

    #[test]
    fn empty_input_is_an_error() {
        assert_eq!(parse_input("", None), Err(InputError::Empty));
        assert_eq!(parse_input("  \n# c\n", Some(Format::Blocks)), Err(InputError::Empty));
    }

    #[test]
    fn explicit_format_overrides_detection() {
        let (input, f) = parse_input("10\n11\n", Some(Format::Blocks)).unwrap();
        assert_eq!(f, Format::Blocks);
        assert_eq!(input.design().unwrap().v(), 11);
        assert_eq!("split".parse::<Format>(), Ok(Format::Split));
        assert!("dot".parse::<Format>().is_err());
    }
}
