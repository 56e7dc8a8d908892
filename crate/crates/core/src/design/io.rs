use super::{Design, DesignError};

fn parse_err(line: usize, msg: impl Into<String>) -> DesignError {
    DesignError::Parse {
        line,
        msg: msg.into(),
    }
}

/// Non-empty lines with `#` comments stripped, paired with 1-based line numbers.
pub(crate) fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let l = l.split('#').next().unwrap_or("").trim();
        (!l.is_empty()).then_some((i + 1, l))
    })
}

/// Parses `key=value` pairs following a leading keyword, e.g. `columns k=3 b=21`.
pub(crate) fn header_fields(
    line_no: usize,
    line: &str,
    keyword: &str,
    keys: &[&str],
) -> Result<Vec<usize>, DesignError> {
    let mut words = line.split_whitespace();
    if words.next() != Some(keyword) {
        return Err(parse_err(line_no, format!("expected `{keyword}` header")));
    }
    let mut values = vec![None; keys.len()];
    for w in words {
        let (k, v) = w
            .split_once('=')
            .ok_or_else(|| parse_err(line_no, format!("malformed header field `{w}`")))?;
        let idx = keys
            .iter()
            .position(|&key| key == k)
            .ok_or_else(|| parse_err(line_no, format!("unknown header field `{k}`")))?;
        let n = v
            .parse()
            .map_err(|_| parse_err(line_no, format!("bad value `{v}` for `{k}`")))?;
        values[idx] = Some(n);
    }
    keys.iter()
        .zip(values)
        .map(|(k, v)| v.ok_or_else(|| parse_err(line_no, format!("missing header field `{k}`"))))
        .collect()
}

fn parse_points(line_no: usize, line: &str) -> Result<Vec<u32>, DesignError> {
    line.split(|c: char| c.is_whitespace() || c == ',')
        .filter(|w| !w.is_empty())
        .map(|w| {
            w.parse::<u32>()
                .map_err(|_| parse_err(line_no, format!("`{w}` is not a point index")))
        })
        .collect()
}

/// Block-list format: optional `v=<n>` header, then one block per line.
/// Without a header, `v` is the largest point mentioned.
pub fn parse_block_list(text: &str) -> Result<Design, DesignError> {
    let mut lines = content_lines(text).peekable();
    let mut v = None;
    if let Some(&(no, first)) = lines.peek() {
        if let Some(rest) = first.strip_prefix("v=") {
            let n = rest
                .trim()
                .parse::<usize>()
                .map_err(|_| parse_err(no, format!("bad point count `{rest}`")))?;
            v = Some(n);
            lines.next();
        }
    }
    let blocks = lines
        .map(|(no, l)| parse_points(no, l))
        .collect::<Result<Vec<_>, _>>()?;
    let v = v.unwrap_or_else(|| {
        blocks
            .iter()
            .flatten()
            .copied()
            .max()
            .unwrap_or(0) as usize
    });
    Design::new(v, blocks)
}

/// Column format: `columns k=<k> b=<b>` header, then `k` rows of `b` points; block
/// `j` is column `j`. `v` is the largest point mentioned.
pub fn parse_columns(text: &str) -> Result<Design, DesignError> {
    let mut lines = content_lines(text);
    let (no, header) = lines
        .next()
        .ok_or_else(|| parse_err(1, "empty input"))?;
    let fields = header_fields(no, header, "columns", &["k", "b"])?;
    let (k, b) = (fields[0], fields[1]);
    let rows = lines
        .map(|(no, l)| {
            let row = parse_points(no, l)?;
            if row.len() != b {
                return Err(parse_err(no, format!("expected {b} entries, found {}", row.len())));
            }
            Ok(row)
        })
        .collect::<Result<Vec<_>, _>>()?;
    if rows.len() != k {
        return Err(parse_err(no, format!("expected {k} rows, found {}", rows.len())));
    }
    let blocks: Vec<Vec<u32>> = (0..b).map(|j| rows.iter().map(|r| r[j]).collect()).collect();
    let v = blocks.iter().flatten().copied().max().unwrap_or(0) as usize;
    Design::new(v, blocks)
}

/// Incidence format: `v` lines of `b` characters over `{0,1}`.
pub fn parse_incidence(text: &str) -> Result<Design, DesignError> {
    let rows: Vec<(usize, &str)> = content_lines(text).collect();
    let b = rows.first().map_or(0, |(_, l)| l.len());
    let mut blocks = vec![Vec::new(); b];
    for (i, (no, line)) in rows.iter().enumerate() {
        if line.len() != b {
            return Err(parse_err(*no, format!("expected {b} characters, found {}", line.len())));
        }
        for (j, ch) in line.chars().enumerate() {
            match ch {
                '1' => blocks[j].push(i as u32 + 1),
                '0' => {}
                _ => return Err(parse_err(*no, format!("unexpected character `{ch}`"))),
            }
        }
    }
    Design::new(rows.len(), blocks)
}
