//! Canonical edge-list text format.
//!
//! ```text
//! n m
//! u v        (m lines, 0-based, u < v)
//! ```
//!
//! Blank lines are ignored. Edges written with `u > v` are accepted on input;
//! output is always sorted with `u < v`.

use std::fmt::Write as _;
use std::str::FromStr;

use super::Graph;
use crate::error::{Error, Result};

fn parse_usize(tok: &str, line: usize, what: &str) -> Result<usize> {
    tok.parse().map_err(|_| Error::Parse { line, msg: format!("expected {what}, found `{tok}`") })
}

impl Graph {
    pub fn parse_edge_list(text: &str) -> Result<Graph> {
        let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty());

        let (hl, header) = lines.next().ok_or(Error::Parse { line: 1, msg: "missing `n m` header".into() })?;
        let toks: Vec<&str> = header.split_whitespace().collect();
        if toks.len() != 2 {
            return Err(Error::Parse { line: hl, msg: "header must be `n m`".into() });
        }
        let n = parse_usize(toks[0], hl, "vertex count")?;
        let m = parse_usize(toks[1], hl, "edge count")?;

        let mut adj = vec![super::VertexSet::empty(n); n];
        let mut edges = Vec::with_capacity(m);
        let mut last_line = hl;
        for (ln, l) in lines {
            last_line = ln;
            let toks: Vec<&str> = l.split_whitespace().collect();
            if toks.len() != 2 {
                return Err(Error::Parse { line: ln, msg: "edge line must be `u v`".into() });
            }
            let u = parse_usize(toks[0], ln, "vertex index")?;
            let v = parse_usize(toks[1], ln, "vertex index")?;
            if u >= n || v >= n {
                return Err(Error::Parse { line: ln, msg: format!("vertex {} out of range 0..{n}", u.max(v)) });
            }
            if u == v {
                return Err(Error::Parse { line: ln, msg: format!("self-loop at vertex {u}") });
            }
            if adj[u].contains(v) {
                return Err(Error::Parse { line: ln, msg: format!("duplicate edge {u}-{v}") });
            }
            adj[u].insert(v);
            adj[v].insert(u);
            edges.push((u, v));
        }
        if edges.len() != m {
            return Err(Error::Parse { line: last_line, msg: format!("header declares {m} edges, found {}", edges.len()) });
        }
        Graph::from_edges(n, edges)
    }

    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.n(), self.m());
        for (u, v) in self.edges() {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }
}

impl FromStr for Graph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Graph::parse_edge_list(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn rejects_malformed_input() {
        let cases = [
            ("3 1\n0 0\n", 2, "self-loop"),
            ("3 2\n0 1\n1 0\n", 3, "duplicate"),
            ("3 1\n0 5\n", 2, "out of range"),
            ("3 2\n0 1\n", 2, "declares 2"),
            ("3\n", 1, "header"),
            ("3 1\n0 x\n", 2, "vertex index"),
        ];
        for (text, line, needle) in cases {
            match Graph::parse_edge_list(text) {
                Err(Error::Parse { line: l, msg }) => {
                    assert_eq!(l, line, "{text:?}");
                    assert!(msg.contains(needle), "{msg}");
                }
                other => panic!("{text:?} parsed as {other:?}"),
            }
        }
    }

    #[test]
    fn empty_graph_text() {
        let g: Graph = "0 0\n".parse().unwrap();
        assert_eq!(g.n(), 0);
        assert_eq!(g.to_edge_list(), "0 0\n");
    }

    proptest! {
        #[test]
        fn edge_list_round_trip(n in 1usize..20, p in 0.1f64..1.0, seed in 0u64..500) {
            let g = crate::generators::random_connected(n, p, seed).unwrap();
            let back = Graph::parse_edge_list(&g.to_edge_list()).unwrap();
            prop_assert_eq!(back, g);
        }
    }
}
