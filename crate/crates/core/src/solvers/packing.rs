//! Maximum 2-packing by include-first branch and bound.
//!
//! Vertices are decided in ascending order with inclusion tried first, so
//! sets are visited in lexicographic order and the first maximum found is
//! the lexicographically smallest one.

use super::engine::Budget;
use crate::graph::{Graph, VertexSet};

struct Search<'a> {
    /// Vertices at distance one or two.
    conflict: Vec<VertexSet>,
    budget: &'a Budget,
    best: Vec<usize>,
    chosen: Vec<usize>,
}

impl Search<'_> {
    fn run(&mut self, free: VertexSet) {
        if !self.budget_ok() {
            return;
        }
        if self.chosen.len() > self.best.len() {
            self.best = self.chosen.clone();
        }
        if self.chosen.len() + self.bound(&free) <= self.best.len() {
            return;
        }
        let Some(v) = free.first() else { return };
        let mut rest = free;
        rest.remove(v);
        self.chosen.push(v);
        self.run(rest.difference(&self.conflict[v]));
        self.chosen.pop();
        self.run(rest);
    }

    /// Greedy clique cover of the conflict graph restricted to `free`: each
    /// clique holds at most one packed vertex.
    fn bound(&self, free: &VertexSet) -> usize {
        let mut left = free.clone();
        let mut cliques = 0;
        while let Some(v) = left.first() {
            left.remove(v);
            let mut common = self.conflict[v].intersection(&left);
            while let Some(w) = common.first() {
                left.remove(w);
                common.remove(w);
                common.intersect_with(&self.conflict[w]);
            }
            cliques += 1;
        }
        cliques
    }

    fn budget_ok(&self) -> bool {
        self.budget.tick()
    }
}

/// Returns the canonical maximum 2-packing, or `None` if the budget ran out.
pub(crate) fn max_packing(g: &Graph, budget: &Budget) -> Option<VertexSet> {
    let conflict = (0..g.n())
        .map(|v| {
            let mut b = VertexSet::empty(g.n());
            for u in g.closed(v) {
                b.union_with(g.closed(u));
            }
            b.remove(v);
            b
        })
        .collect();
    let mut s = Search { conflict, budget, best: Vec::new(), chosen: Vec::new() };
    s.run(VertexSet::full(g.n()));
    if budget.exceeded() {
        None
    } else {
        Some(VertexSet::from_iter(g.n(), s.best))
    }
}
