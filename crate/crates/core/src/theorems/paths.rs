//! Degree-constrained induced paths and the four-vertex reduction.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Ordered triples `(x1, x2, x3)` inducing the path `x1 x2 x3` with
/// `deg x1 ≥ 2`, `deg x2 = 2`, `deg x3 = 1`.
pub fn find_p3_sets(g: &Graph) -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for x3 in (0..g.n()).filter(|&v| g.degree(v) == 1) {
        let x2 = g.neighbors(x3).first().expect("degree one");
        if g.degree(x2) != 2 {
            continue;
        }
        for x1 in g.neighbors(x2) {
            if x1 != x3 && g.degree(x1) >= 2 && !g.has_edge(x1, x3) {
                out.push([x1, x2, x3]);
            }
        }
    }
    out.sort_unstable();
    out
}

fn is_p4_set(g: &Graph, s: &[usize; 4]) -> bool {
    let [a, b, c, d] = *s;
    let distinct = BTreeSet::from(*s).len() == 4 && s.iter().all(|&x| x < g.n());
    distinct
        && g.has_edge(a, b)
        && g.has_edge(b, c)
        && g.has_edge(c, d)
        && !g.has_edge(a, c)
        && !g.has_edge(a, d)
        && !g.has_edge(b, d)
        && g.degree(a) >= 2
        && g.degree(b) == 2
        && g.degree(c) == 2
        && g.degree(d) >= 2
}

/// Ordered quadruples `(x1, x2, x3, x4)` inducing a path, with `deg x2 =
/// deg x3 = 2` and `deg x1, deg x4 ≥ 2`. Each one appears in both orientations.
pub fn find_p4_sets(g: &Graph) -> Vec<[usize; 4]> {
    let mut out = Vec::new();
    for b in (0..g.n()).filter(|&v| g.degree(v) == 2) {
        for c in g.neighbors(b) {
            if g.degree(c) != 2 {
                continue;
            }
            for a in g.neighbors(b) {
                for d in g.neighbors(c) {
                    let s = [a, b, c, d];
                    if is_p4_set(g, &s) {
                        out.push(s);
                    }
                }
            }
        }
    }
    out.sort_unstable();
    out
}

/// Why a reduction is not a plain simple-graph construction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Degeneracy {
    /// `a = b` was proposed as an edge and dropped.
    Loop { vertex: usize },
    /// The proposed edge already survives from `G`, or was proposed twice.
    Duplicate { a: usize, b: usize },
}

#[derive(Debug, Clone)]
pub struct Reduction {
    pub graph: Graph,
    /// `kept[i]` is the original index of vertex `i` of the reduced graph.
    pub kept: Vec<usize>,
    /// Dropped proposals, in original indices; empty for a clean reduction.
    pub degenerate: Vec<Degeneracy>,
}

impl Reduction {
    pub fn is_degenerate(&self) -> bool {
        !self.degenerate.is_empty()
    }
}

/// Deletes `S = {x1..x4}` and joins every `a ∈ N(x1) ∖ {x2}` to every
/// `b ∈ N(x4) ∖ {x3}`. Loops and repeated edges are dropped and recorded.
pub fn reduce_p4(g: &Graph, s: [usize; 4]) -> Result<Reduction> {
    if !is_p4_set(g, &s) {
        return Err(Error::NotP4Set(s.to_vec()));
    }
    let [x1, x2, x3, x4] = s;
    let removed = VertexSet::from_iter(g.n(), s);
    let kept: Vec<usize> = (0..g.n()).filter(|v| !removed.contains(*v)).collect();
    let mut index = vec![usize::MAX; g.n()];
    for (i, &v) in kept.iter().enumerate() {
        index[v] = i;
    }
    let mut edges: BTreeSet<(usize, usize)> =
        g.edges().filter(|&(u, v)| !removed.contains(u) && !removed.contains(v)).collect();
    let mut degenerate = Vec::new();
    for a in g.neighbors(x1).iter().filter(|&a| a != x2) {
        for b in g.neighbors(x4).iter().filter(|&b| b != x3) {
            if a == b {
                degenerate.push(Degeneracy::Loop { vertex: a });
            } else if !edges.insert((a.min(b), a.max(b))) {
                degenerate.push(Degeneracy::Duplicate { a: a.min(b), b: a.max(b) });
            }
        }
    }
    // N(x1) and N(x4) avoid S apart from x2, x3, since S induces a path
    let graph = Graph::from_edges(kept.len(), edges.iter().map(|&(u, v)| (index[u], index[v])))?;
    Ok(Reduction { graph, kept, degenerate })
}
