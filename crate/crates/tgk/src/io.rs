//! Text formats: operation tables, graphs, and tree dumps.
//!
//! Operation table: line 1 holds n, then n lines of n whitespace-separated
//! 0-based entries; row u, column v holds u*v. Lines starting with '#' and
//! blank lines are ignored.
//!
//! Graph: line 1 holds "n m", then m lines "u v". Same comment rules.
//!
//! Tree dump: "root v", then one line "u parent(u)" per non-root vertex.

use thiserror::Error;

use crate::graph::Graph;
use crate::groupoid::Groupoid;
use crate::trees::RootedSpanningTree;

#[derive(Debug, Error, PartialEq, Eq)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl ParseError {
    fn new(line: usize, column: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            column,
            message: message.into(),
        }
    }
}

/// Content lines with their 1-based line numbers, comments and blanks dropped.
fn content_lines(text: &str) -> Vec<(usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
        .collect()
}

fn parse_fields(line_no: usize, line: &str) -> Result<Vec<usize>, ParseError> {
    line.split_whitespace()
        .enumerate()
        .map(|(col, tok)| {
            tok.parse::<usize>()
                .map_err(|_| ParseError::new(line_no, col + 1, format!("expected integer, got '{tok}'")))
        })
        .collect()
}

pub fn parse_table(text: &str) -> Result<Groupoid, ParseError> {
    let lines = content_lines(text);
    let Some(&(first_no, first)) = lines.first() else {
        return Err(ParseError::new(1, 1, "empty input"));
    };
    let header = parse_fields(first_no, first)?;
    if header.len() != 1 {
        return Err(ParseError::new(first_no, 1, "first line must hold a single order n"));
    }
    let n = header[0];
    if lines.len() != n + 1 {
        return Err(ParseError::new(
            first_no,
            1,
            format!("expected {n} table rows, found {}", lines.len() - 1),
        ));
    }
    let mut rows = Vec::with_capacity(n);
    for &(line_no, line) in &lines[1..] {
        let row = parse_fields(line_no, line)?;
        if row.len() != n {
            return Err(ParseError::new(
                line_no,
                1,
                format!("expected {n} entries, found {}", row.len()),
            ));
        }
        if let Some((col, &bad)) = row.iter().enumerate().find(|&(_, &w)| w >= n) {
            return Err(ParseError::new(
                line_no,
                col + 1,
                format!("entry {bad} out of range for order {n}"),
            ));
        }
        rows.push(row);
    }
    Groupoid::from_rows(&rows).map_err(|e| ParseError::new(first_no, 1, e.to_string()))
}

pub fn format_table(g: &Groupoid) -> String {
    let mut out = format!("{}\n", g.order());
    for row in g.rows() {
        let line: Vec<String> = row.iter().map(|w| w.to_string()).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    let lines = content_lines(text);
    let Some(&(first_no, first)) = lines.first() else {
        return Err(ParseError::new(1, 1, "empty input"));
    };
    let header = parse_fields(first_no, first)?;
    if header.len() != 2 {
        return Err(ParseError::new(first_no, 1, "first line must hold 'n m'"));
    }
    let (n, m) = (header[0], header[1]);
    if lines.len() != m + 1 {
        return Err(ParseError::new(
            first_no,
            1,
            format!("expected {m} edge lines, found {}", lines.len() - 1),
        ));
    }
    let mut g = Graph::new(n).map_err(|e| ParseError::new(first_no, 1, e.to_string()))?;
    for &(line_no, line) in &lines[1..] {
        let pair = parse_fields(line_no, line)?;
        if pair.len() != 2 {
            return Err(ParseError::new(line_no, 1, "edge line must hold 'u v'"));
        }
        g.add_edge(pair[0], pair[1])
            .map_err(|e| ParseError::new(line_no, 1, e.to_string()))?;
    }
    Ok(g)
}

pub fn format_graph(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("{} {}\n", g.order(), edges.len());
    for (u, v) in edges {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn format_tree(t: &RootedSpanningTree) -> String {
    let mut out = format!("root {}\n", t.root());
    for u in 0..t.order() {
        if u != t.root() {
            out.push_str(&format!("{} {}\n", u, t.parent_map()[u]));
        }
    }
    out
}
