//! DIMACS-style edge lists:
//!
//! ```text
//! c optional comment
//! p edge <n> <m>
//! e <u> <v>        (1 <= u, v <= n, u != v; exactly m lines)
//! ```

use std::fmt::Write;

use super::Graph;
use crate::error::{Error, Result};

impl Graph {
    pub fn parse_edge_list(text: &str) -> Result<Graph> {
        let mut graph: Option<(Graph, usize)> = None;
        let mut seen_edges = 0usize;

        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let mut tokens = raw.split_whitespace();
            let Some(tag) = tokens.next() else { continue };
            match tag {
                "c" => continue,
                "p" => {
                    if graph.is_some() {
                        return Err(Error::parse(line_no, "second `p` line"));
                    }
                    if tokens.next() != Some("edge") {
                        return Err(Error::parse(line_no, "expected `p edge <n> <m>`"));
                    }
                    let n = number(tokens.next(), line_no, "vertex count")?;
                    let m = number(tokens.next(), line_no, "edge count")?;
                    no_trailing(tokens, line_no)?;
                    if n == 0 {
                        return Err(Error::parse(line_no, "vertex count must be at least 1"));
                    }
                    graph = Some((Graph::empty(n)?, m));
                }
                "e" => {
                    let Some((g, _)) = graph.as_mut() else {
                        return Err(Error::parse(line_no, "`e` line before the `p` line"));
                    };
                    let n = g.order();
                    let u = number(tokens.next(), line_no, "edge endpoint")?;
                    let v = number(tokens.next(), line_no, "edge endpoint")?;
                    no_trailing(tokens, line_no)?;
                    for w in [u, v] {
                        if w == 0 || w > n {
                            return Err(Error::parse(line_no, format!("vertex {w} outside [1, {n}]")));
                        }
                    }
                    if u == v {
                        return Err(Error::parse(line_no, format!("self-loop at vertex {u}")));
                    }
                    if g.has_edge(u - 1, v - 1) {
                        return Err(Error::parse(line_no, format!("duplicate edge {u} {v}")));
                    }
                    g.add_edge(u - 1, v - 1)?;
                    seen_edges += 1;
                }
                other => {
                    return Err(Error::parse(line_no, format!("unknown line type `{other}`")));
                }
            }
        }

        let (g, m) = graph.ok_or_else(|| Error::parse(0, "missing `p edge <n> <m>` line"))?;
        if seen_edges != m {
            return Err(Error::parse(0, format!("`p` line declares {m} edges, found {seen_edges}")));
        }
        Ok(g)
    }

    /// Serializes as an edge list with sorted, 1-indexed edges.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("p edge {} {}\n", self.order(), self.edge_count());
        for (u, v) in self.edges() {
            writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
        }
        out
    }
}

fn number(token: Option<&str>, line: usize, what: &str) -> Result<usize> {
    let token = token.ok_or_else(|| Error::parse(line, format!("missing {what}")))?;
    token
        .parse()
        .map_err(|_| Error::parse(line, format!("bad {what} `{token}`")))
}

fn no_trailing<'a>(mut tokens: impl Iterator<Item = &'a str>, line: usize) -> Result<()> {
    match tokens.next() {
        Some(t) => Err(Error::parse(line, format!("unexpected token `{t}`"))),
        None => Ok(()),
    }
}
