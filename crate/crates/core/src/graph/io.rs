//! Edge-list text format.
//!
//! ```text
//! # comment
//! p q
//! a b [weight]
//! ```
//!
//! Vertex indices are 0-based, `a a` is a loop, and the optional weight is an
//! integer or `num/den`. Either every edge line carries a weight or none does.

use std::fmt::Write;

use num_rational::BigRational;

use super::{Digraph, Pseudograph, WeightedGraph};
use crate::error::{Error, Result};

/// A parsed edge-list file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeList {
    pub order: usize,
    pub edges: Vec<(usize, usize)>,
    pub weights: Option<Vec<BigRational>>,
}

impl EdgeList {
    pub fn graph(&self) -> Result<Pseudograph> {
        Pseudograph::new(self.order, self.edges.clone())
    }

    /// Requires weights on every edge.
    pub fn weighted(&self) -> Result<WeightedGraph> {
        let weights = self.weights.clone().ok_or_else(|| Error::Parse {
            line: 1,
            col: 1,
            msg: "edge list carries no weights".into(),
        })?;
        WeightedGraph::new(self.graph()?, weights)
    }

    /// Reads each edge line `a b` as the arc `a -> b`.
    pub fn digraph(&self) -> Result<Digraph> {
        Digraph::new(self.order, self.edges.clone())
    }
}

fn parse_err(line: usize, col: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        col,
        msg: msg.into(),
    }
}

/// Splits a line into `(1-based column, token)` pairs.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in line.char_indices() {
        if ch.is_whitespace() {
            if let Some(s) = start.take() {
                out.push((s + 1, &line[s..i]));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push((s + 1, &line[s..]));
    }
    out
}

fn parse_usize(line: usize, (col, tok): (usize, &str), what: &str) -> Result<usize> {
    tok.parse()
        .map_err(|_| parse_err(line, col, format!("expected {what}, found `{tok}`")))
}

pub fn parse_edge_list(text: &str) -> Result<EdgeList> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    let mut weights: Vec<BigRational> = Vec::new();
    let mut weighted: Option<bool> = None;
    let mut last_line = 0;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let trimmed = raw.trim_start();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let toks = tokens(raw);
        match header {
            None => {
                if toks.len() != 2 {
                    return Err(parse_err(line, toks[0].0, "header must be `p q`"));
                }
                let p = parse_usize(line, toks[0], "vertex count")?;
                let q = parse_usize(line, toks[1], "edge count")?;
                if p == 0 {
                    return Err(parse_err(line, toks[0].0, "vertex count must be positive"));
                }
                header = Some((p, q));
            }
            Some((p, q)) => {
                if edges.len() == q {
                    return Err(parse_err(line, toks[0].0, format!("more than {q} edge lines")));
                }
                if toks.len() < 2 || toks.len() > 3 {
                    return Err(parse_err(line, toks[0].0, "edge line must be `a b [weight]`"));
                }
                let a = parse_usize(line, toks[0], "vertex index")?;
                let b = parse_usize(line, toks[1], "vertex index")?;
                for (v, col) in [(a, toks[0].0), (b, toks[1].0)] {
                    if v >= p {
                        return Err(parse_err(line, col, format!("vertex {v} out of range 0..{p}")));
                    }
                }
                let has_weight = toks.len() == 3;
                match weighted {
                    None => weighted = Some(has_weight),
                    Some(w) if w != has_weight => {
                        return Err(parse_err(
                            line,
                            toks.last().map_or(1, |t| t.0),
                            "weights must be given on all edges or none",
                        ))
                    }
                    _ => {}
                }
                if has_weight {
                    let (col, tok) = toks[2];
                    let w: BigRational = tok
                        .parse()
                        .map_err(|_| parse_err(line, col, format!("bad weight `{tok}`")))?;
                    weights.push(w);
                }
                edges.push((a, b));
            }
        }
    }

    let (order, q) = header.ok_or_else(|| parse_err(last_line.max(1), 1, "missing `p q` header"))?;
    if edges.len() != q {
        return Err(parse_err(
            last_line.max(1),
            1,
            format!("expected {q} edge lines, found {}", edges.len()),
        ));
    }
    Ok(EdgeList {
        order,
        edges,
        weights: weighted.unwrap_or(false).then_some(weights),
    })
}

/// Writes a graph (and optional weights) back into the text format.
pub fn format_edge_list(g: &Pseudograph, weights: Option<&[BigRational]>) -> String {
    let mut out = format!("{} {}\n", g.order(), g.size());
    for (i, &(a, b)) in g.edges().iter().enumerate() {
        match weights {
            Some(w) => writeln!(out, "{a} {b} {}", w[i]).unwrap(),
            None => writeln!(out, "{a} {b}").unwrap(),
        }
    }
    out
}
