//! Text formats: graph6 (short form only), edge lists and facet lists.

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order expressible with the one-byte graph6 header.
pub const GRAPH6_MAX_ORDER: usize = 62;

const HEADER: &str = ">>graph6<<";

fn g6_err(msg: impl Into<String>) -> Error {
    Error::Graph6(msg.into())
}

/// Parse one graph6 line. Vertices are labelled `"0".."n-1"`.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let line = text.trim_end_matches(['\n', '\r']);
    let line = line.strip_prefix(HEADER).unwrap_or(line);
    let bytes = line.as_bytes();
    let (&first, body) = bytes.split_first().ok_or_else(|| g6_err("empty input"))?;
    if first == b'~' {
        return Err(g6_err("long-form header (more than 62 vertices) is not supported"));
    }
    if !(63..=126).contains(&first) {
        return Err(g6_err(format!("invalid order byte {first:#04x}")));
    }
    let n = (first - 63) as usize;
    let nbits = n * n.saturating_sub(1) / 2;
    let expected = nbits.div_ceil(6);
    if body.len() != expected {
        return Err(g6_err(format!("expected {expected} data bytes for {n} vertices, found {}", body.len())));
    }
    if let Some(&b) = body.iter().find(|b| !(63..=126).contains(*b)) {
        return Err(g6_err(format!("invalid data byte {b:#04x}")));
    }
    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    if (nbits..expected * 6).any(bit) {
        return Err(g6_err("nonzero padding bits"));
    }
    let mut g = Graph::with_order(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                g.add_edge(i, j)?;
            }
            k += 1;
        }
    }
    Ok(g)
}

/// graph6 encoding in the graph's own vertex order, without a newline.
pub fn emit_graph6(g: &Graph) -> Result<String> {
    let n = g.order();
    if n > GRAPH6_MAX_ORDER {
        return Err(g6_err(format!("{n} vertices exceed the short-form limit of {GRAPH6_MAX_ORDER}")));
    }
    let mut out = String::with_capacity(1 + (n * n).div_ceil(12));
    out.push((n as u8 + 63) as char);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((acc << (6 - filled)) + 63) as char);
    }
    Ok(out)
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let line = line.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = line.split_whitespace().collect();
        (!tokens.is_empty()).then_some((i + 1, tokens))
    })
}

/// One `u v` pair per line; a single token declares an isolated vertex.
/// `#` starts a comment. Vertices are ordered by first appearance and
/// repeated edges collapse.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut labels: Vec<String> = Vec::new();
    let mut index = std::collections::HashMap::new();
    let mut edges = Vec::new();
    let mut intern = |l: &str, labels: &mut Vec<String>| {
        *index.entry(l.to_string()).or_insert_with(|| {
            labels.push(l.to_string());
            labels.len() - 1
        })
    };
    for (line, tokens) in content_lines(text) {
        match tokens[..] {
            [v] => {
                intern(v, &mut labels);
            }
            [u, v] => {
                if u == v {
                    return Err(Error::Parse { line, message: format!("self-loop at `{u}`") });
                }
                let (a, b) = (intern(u, &mut labels), intern(v, &mut labels));
                edges.push((a, b));
            }
            _ => return Err(Error::Parse { line, message: format!("expected `u v`, found {} tokens", tokens.len()) }),
        }
    }
    let mut g = Graph::new(labels)?;
    for (u, v) in edges {
        g.add_edge(u, v)?;
    }
    Ok(g)
}

pub fn emit_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    let mut touched = vec![false; g.order()];
    for (u, v) in g.edges() {
        touched[u] = true;
        touched[v] = true;
        out.push_str(&format!("{} {}\n", g.label(u), g.label(v)));
    }
    for (v, _) in touched.iter().enumerate().filter(|(_, &t)| !t) {
        out.push_str(&format!("{}\n", g.label(v)));
    }
    out
}

/// One simplex per line, as whitespace-separated vertex labels. The result is
/// the downward closure; it need not be flag.
pub fn parse_complex(text: &str) -> Result<SimplicialComplex> {
    let facets: Vec<Vec<&str>> = content_lines(text).map(|(_, tokens)| tokens).collect();
    SimplicialComplex::from_labeled_facets(&facets)
}
