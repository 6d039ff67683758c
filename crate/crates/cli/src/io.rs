//! Digraph files: JSON `{"n": .., "adjacency": [[0/1]]}` or plain text (the
//! vertex count on the first line, then one row of space-separated 0/1 per
//! line). The format is picked by the first non-blank character.

use serde::Deserialize;
use std::fmt::Write as _;
use std::path::Path;
use unigraph_core::{Digraph, Error, Result};

/// Inputs above this many vertices are rejected before parsing rows.
pub const MAX_INPUT_VERTICES: usize = 4096;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FileFormat {
    Json,
    Text,
}

impl FileFormat {
    /// Text for a `.txt` path, JSON otherwise.
    pub fn for_path(path: &Path) -> Self {
        match path.extension().and_then(|e| e.to_str()) {
            Some("txt") => FileFormat::Text,
            _ => FileFormat::Json,
        }
    }
}

fn parse_error(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

fn check_size(n: usize, line: usize) -> Result<()> {
    if n == 0 {
        return Err(parse_error(line, "vertex count must be at least 1"));
    }
    if n > MAX_INPUT_VERTICES {
        return Err(Error::Capacity {
            what: "input vertex count",
            got: n,
            limit: MAX_INPUT_VERTICES,
        });
    }
    Ok(())
}

pub fn parse_digraph(text: &str) -> Result<Digraph> {
    match text.trim_start().chars().next() {
        Some('{') => parse_json(text),
        Some(_) => parse_text(text),
        None => Err(parse_error(1, "empty input")),
    }
}

fn parse_text(text: &str) -> Result<Digraph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(k, l)| (k + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let (first, header) = lines.next().ok_or_else(|| parse_error(1, "empty input"))?;
    let n: usize = header
        .parse()
        .map_err(|_| parse_error(first, format!("expected the vertex count, got {header:?}")))?;
    check_size(n, first)?;
    let mut rows = Vec::with_capacity(n);
    for (line, row) in lines {
        if rows.len() == n {
            return Err(parse_error(line, format!("more than {n} rows")));
        }
        let entries = row
            .split_whitespace()
            .map(|t| match t {
                "0" => Ok(0u8),
                "1" => Ok(1u8),
                _ => Err(parse_error(line, format!("entry {t:?} is not 0 or 1"))),
            })
            .collect::<Result<Vec<u8>>>()?;
        if entries.len() != n {
            return Err(parse_error(line, format!("row has {} entries, expected {n}", entries.len())));
        }
        rows.push(entries);
    }
    if rows.len() != n {
        let last = text.lines().count().max(1);
        return Err(parse_error(last, format!("expected {n} rows, found {}", rows.len())));
    }
    Digraph::from_matrix(&rows)
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct DigraphFile {
    n: usize,
    adjacency: Vec<Vec<i64>>,
}

/// The line on which each row of the `adjacency` array opens.
fn json_row_lines(text: &str) -> Vec<usize> {
    let Some(start) = text.find("\"adjacency\"") else {
        return Vec::new();
    };
    let mut line = text[..start].matches('\n').count() + 1;
    let mut depth = 0;
    let mut out = Vec::new();
    for c in text[start..].chars() {
        match c {
            '\n' => line += 1,
            '[' => {
                depth += 1;
                if depth == 2 {
                    out.push(line);
                }
            }
            ']' => {
                depth -= 1;
                if depth == 0 {
                    break;
                }
            }
            _ => {}
        }
    }
    out
}

fn parse_json(text: &str) -> Result<Digraph> {
    let file: DigraphFile =
        serde_json::from_str(text).map_err(|e| parse_error(e.line(), e.to_string()))?;
    let rows_at = json_row_lines(text);
    let header = text.find("\"n\"").map_or(1, |i| text[..i].matches('\n').count() + 1);
    let line_of = |k: usize| rows_at.get(k).copied().unwrap_or(header);
    let n = file.n;
    check_size(n, header)?;
    let mut rows = Vec::with_capacity(n);
    for (k, row) in file.adjacency.iter().enumerate() {
        if k == n {
            return Err(parse_error(line_of(k), format!("more than {n} rows")));
        }
        if row.len() != n {
            return Err(parse_error(line_of(k), format!("row {k} has {} entries, expected {n}", row.len())));
        }
        let entries = row
            .iter()
            .map(|&x| match x {
                0 | 1 => Ok(x as u8),
                _ => Err(parse_error(line_of(k), format!("entry {x} in row {k} is not 0 or 1"))),
            })
            .collect::<Result<Vec<u8>>>()?;
        rows.push(entries);
    }
    if rows.len() != n {
        let last = rows.len().checked_sub(1).map_or(header, line_of);
        return Err(parse_error(last, format!("expected {n} rows, found {}", rows.len())));
    }
    Digraph::from_matrix(&rows)
}

fn join_row(row: &[u8], sep: &str) -> String {
    row.iter().map(u8::to_string).collect::<Vec<_>>().join(sep)
}

pub fn write_digraph(d: &Digraph, format: FileFormat) -> String {
    let rows = d.to_matrix();
    let mut out = String::new();
    match format {
        FileFormat::Text => {
            writeln!(out, "{}", d.n()).unwrap();
            for r in &rows {
                writeln!(out, "{}", join_row(r, " ")).unwrap();
            }
        }
        FileFormat::Json => {
            writeln!(out, "{{\n  \"n\": {},\n  \"adjacency\": [", d.n()).unwrap();
            for (k, r) in rows.iter().enumerate() {
                let comma = if k + 1 < rows.len() { "," } else { "" };
                writeln!(out, "    [{}]{comma}", join_row(r, ", ")).unwrap();
            }
            out.push_str("  ]\n}\n");
        }
    }
    out
}
