//! The plain edge-list text format and DOT export.
//!
//! Edge lists look like
//!
//! ```text
//! # optional comments
//! 4 3
//! 0 1
//! 1 2
//! 2 3
//! ```
//!
//! The first data line is `n m`, followed by exactly `m` lines `u v` with
//! 0-based ids.

use std::fmt::Write;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut data = text
        .lines()
        .enumerate()
        .map(|(i, line)| (i + 1, line.trim()))
        .filter(|(_, line)| !line.is_empty() && !line.starts_with('#'));

    let (header_line, header) = data.next().ok_or(Error::Parse {
        line: 0,
        message: "missing `n m` header".into(),
    })?;
    let [n, m] = parse_pair(header_line, header)?;

    let mut edges = Vec::with_capacity(m);
    for (line, content) in data.by_ref().take(m) {
        let [u, v] = parse_pair(line, content)?;
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(Error::Parse {
            line: 0,
            message: format!("header promises {m} edges, found {}", edges.len()),
        });
    }
    if let Some((line, _)) = data.next() {
        return Err(Error::Parse {
            line,
            message: format!("trailing data after {m} edges"),
        });
    }
    Graph::from_edge_list(n, &edges)
}

fn parse_pair(line: usize, content: &str) -> Result<[usize; 2]> {
    let bad = |message: String| Error::Parse { line, message };
    let mut fields = content.split_whitespace();
    let mut next = || -> Result<usize> {
        let tok = fields
            .next()
            .ok_or_else(|| bad("expected two integers".into()))?;
        tok.parse()
            .map_err(|_| bad(format!("not a non-negative integer: `{tok}`")))
    };
    let pair = [next()?, next()?];
    if fields.next().is_some() {
        return Err(bad("expected exactly two integers".into()));
    }
    Ok(pair)
}

/// Renders `g` in the edge-list format, edges in lexicographic order.
pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.size());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

/// Graphviz DOT with vertex ids as labels. Members of `highlight` are drawn
/// filled.
pub fn to_dot(g: &Graph, highlight: Option<&VertexSet>) -> String {
    let mut out = String::from("graph G {\n  node [shape=circle];\n");
    for v in 0..g.order() {
        if highlight.is_some_and(|h| h.contains(v)) {
            let _ = writeln!(
                out,
                "  {v} [style=filled, fillcolor=black, fontcolor=white];"
            );
        } else {
            let _ = writeln!(out, "  {v};");
        }
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "  {u} -- {v};");
    }
    out.push_str("}\n");
    out
}
