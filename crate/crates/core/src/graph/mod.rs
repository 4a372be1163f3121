//! Immutable simple undirected graphs over dense vertex indices `0..n`.

mod io;
mod predicates;
mod vertex_set;

use std::collections::VecDeque;

pub use vertex_set::VertexSet;

use crate::error::{Error, Result};

/// Simple undirected graph. Adjacency is symmetric and loop-free.
///
/// Every mutator returns a new graph, so a `Graph` can be shared across
/// solver threads without synchronization.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<VertexSet>,
    closed: Vec<VertexSet>,
    edge_count: usize,
}

impl Graph {
    /// Builds a graph from an edge list, rejecting loops, duplicates and
    /// out-of-range endpoints.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![VertexSet::empty(n); n];
        let mut m = 0;
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { v: x, n });
                }
            }
            if u == v {
                return Err(Error::Loop(u));
            }
            if adj[u].contains(v) {
                return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
            }
            adj[u].insert(v);
            adj[v].insert(u);
            m += 1;
        }
        Ok(Self::from_adjacency(adj, m))
    }

    fn from_adjacency(adj: Vec<VertexSet>, edge_count: usize) -> Self {
        let closed = adj
            .iter()
            .enumerate()
            .map(|(v, s)| {
                let mut c = s.clone();
                c.insert(v);
                c
            })
            .collect();
        Self { adj, closed, edge_count }
    }

    pub fn empty(n: usize) -> Self {
        Self::from_adjacency(vec![VertexSet::empty(n); n], 0)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.edge_count
    }

    /// Open neighbourhood `N(v)`. Panics on an out-of-range vertex.
    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    /// Closed neighbourhood `N[v]`. Panics on an out-of-range vertex.
    #[inline]
    pub fn closed(&self, v: usize) -> &VertexSet {
        &self.closed[v]
    }

    /// Checked closed neighbourhood.
    pub fn neighbors_closed(&self, v: usize) -> Result<VertexSet> {
        self.check_vertex(v)?;
        Ok(self.closed[v].clone())
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { v, n: self.n() })
        }
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n()).map(|v| self.degree(v)).collect()
    }

    pub fn min_degree(&self) -> Option<usize> {
        (0..self.n()).map(|v| self.degree(v)).min()
    }

    pub fn max_degree(&self) -> Option<usize> {
        (0..self.n()).map(|v| self.degree(v)).max()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].contains(v)
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n()).flat_map(move |u| self.adj[u].iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    pub fn has_isolated_vertex(&self) -> bool {
        (0..self.n()).any(|v| self.adj[v].is_empty())
    }

    pub fn is_complete(&self) -> bool {
        let n = self.n();
        self.edge_count == n * n.saturating_sub(1) / 2
    }

    /// Connected components ordered by their smallest vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        let n = self.n();
        let mut seen = VertexSet::empty(n);
        let mut out = Vec::new();
        for s in 0..n {
            if seen.contains(s) {
                continue;
            }
            let comp = self.reach(s);
            seen.union_with(&comp);
            out.push(comp);
        }
        out
    }

    fn reach(&self, s: usize) -> VertexSet {
        let mut comp = VertexSet::singleton(self.n(), s);
        let mut frontier = comp.clone();
        while !frontier.is_empty() {
            let mut next = VertexSet::empty(self.n());
            for v in &frontier {
                next.union_with(&self.adj[v]);
            }
            next.difference_with(&comp);
            comp.union_with(&next);
            frontier = next;
        }
        comp
    }

    /// The empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.n() == 0 || self.reach(0).len() == self.n()
    }

    pub fn is_tree(&self) -> bool {
        self.n() > 0 && self.edge_count + 1 == self.n() && self.is_connected()
    }

    /// BFS distances from `s`; `None` marks unreachable vertices.
    pub fn distances_from(&self, s: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n()];
        let mut queue = VecDeque::from([s]);
        dist[s] = Some(0);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap_or(0);
            for v in &self.adj[u] {
                if dist[v].is_none() {
                    dist[v] = Some(d + 1);
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    /// `None` for disconnected or empty graphs.
    pub fn diameter(&self) -> Option<usize> {
        if self.n() == 0 || !self.is_connected() {
            return None;
        }
        (0..self.n()).map(|s| self.distances_from(s).into_iter().flatten().max().unwrap_or(0)).max()
    }

    /// Subgraph induced by `s`, relabelled so that the `i`-th smallest member
    /// of `s` becomes vertex `i`. Returns the graph and the relabelling map.
    pub fn induced(&self, s: &VertexSet) -> (Graph, Vec<usize>) {
        let map: Vec<usize> = s.iter().filter(|&v| v < self.n()).collect();
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in map.iter().enumerate() {
            index[v] = i;
        }
        let edges: Vec<(usize, usize)> = self
            .edges()
            .filter(|&(u, v)| index[u] != usize::MAX && index[v] != usize::MAX)
            .map(|(u, v)| (index[u], index[v]))
            .collect();
        let g = Graph::from_edges(map.len(), edges).expect("induced subgraph of a simple graph is simple");
        (g, map)
    }

    pub fn remove_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if !self.has_edge(u, v) {
            return Err(Error::EdgeAbsent(u, v));
        }
        let mut adj = self.adj.clone();
        adj[u].remove(v);
        adj[v].remove(u);
        Ok(Self::from_adjacency(adj, self.edge_count - 1))
    }

    pub fn add_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::Loop(u));
        }
        if self.has_edge(u, v) {
            return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
        }
        let mut adj = self.adj.clone();
        adj[u].insert(v);
        adj[v].insert(u);
        Ok(Self::from_adjacency(adj, self.edge_count + 1))
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let k = self.n();
        let edges = self.edges().chain(other.edges().map(|(u, v)| (u + k, v + k)));
        Graph::from_edges(k + other.n(), edges).expect("disjoint union of simple graphs is simple")
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n(), self.edges().collect::<Vec<_>>())
    }
}
