//! Lexicographic and corona products with stable index maps.
//!
//! Lexicographic `G∘H`: pair `(u, v)` lives at index `u·n_H + v`, so the copy
//! `H_u` is the contiguous block `u·n_H .. (u+1)·n_H`.
//!
//! Corona `G₁⊙G₂`: vertex `u` of `G₁` keeps index `u`; the copy of `G₂`
//! attached to `u` is the block `n₁ + u·n₂ .. n₁ + (u+1)·n₂`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::solvers::LegionFunction;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ProductKind {
    Lex,
    Corona,
}

/// A product graph together with its factors and index map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductGraph {
    kind: ProductKind,
    graph: Graph,
    g: Graph,
    h: Graph,
}

impl ProductGraph {
    pub fn kind(&self) -> ProductKind {
        self.kind
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }

    /// First factor (`G`, or `G₁` for the corona).
    pub fn outer(&self) -> &Graph {
        &self.g
    }

    /// Second factor (`H`, or `G₂` for the corona).
    pub fn inner(&self) -> &Graph {
        &self.h
    }

    pub fn n_outer(&self) -> usize {
        self.g.n()
    }

    pub fn n_inner(&self) -> usize {
        self.h.n()
    }

    /// Index of the pair `(u, v)` in a lexicographic product, or of vertex
    /// `v` of the copy attached to `u` in a corona.
    pub fn index(&self, u: usize, v: usize) -> Result<usize> {
        self.g.check_vertex(u)?;
        self.h.check_vertex(v)?;
        Ok(match self.kind {
            ProductKind::Lex => u * self.h.n() + v,
            ProductKind::Corona => self.g.n() + u * self.h.n() + v,
        })
    }

    /// Inverse of [`ProductGraph::index`]. For a corona, the `G₁` vertices map
    /// to `(u, None)`.
    pub fn pair(&self, x: usize) -> Result<(usize, Option<usize>)> {
        self.graph.check_vertex(x)?;
        let nh = self.h.n();
        Ok(match self.kind {
            ProductKind::Lex => (x / nh, Some(x % nh)),
            ProductKind::Corona if x < self.g.n() => (x, None),
            ProductKind::Corona => {
                let y = x - self.g.n();
                (y / nh, Some(y % nh))
            }
        })
    }

    /// Vertices of the copy `H_u`.
    pub fn copy(&self, u: usize) -> Result<VertexSet> {
        self.g.check_vertex(u)?;
        let nh = self.h.n();
        let start = match self.kind {
            ProductKind::Lex => u * nh,
            ProductKind::Corona => self.g.n() + u * nh,
        };
        Ok(VertexSet::from_iter(self.graph.n(), start..start + nh))
    }

    /// All copies, indexed by the outer vertex.
    pub fn copies(&self) -> Vec<VertexSet> {
        (0..self.g.n()).map(|u| self.copy(u).expect("in range")).collect()
    }

    fn check_function(&self, f: &LegionFunction) -> Result<()> {
        if f.len() != self.graph.n() {
            return Err(Error::LengthMismatch { expected: self.graph.n(), got: f.len() });
        }
        Ok(())
    }

    /// `f(H_u)`: total weight placed on the copy over `u`.
    pub fn copy_weight(&self, f: &LegionFunction, u: usize) -> Result<u32> {
        self.check_function(f)?;
        let c = self.copy(u)?;
        Ok(c.iter().map(|x| f.value(x) as u32).sum())
    }

    /// `f[H_u]`: sum of `f(H_x)` over `x ∈ N_G[u]`.
    pub fn closed_copy_weight(&self, f: &LegionFunction, u: usize) -> Result<u32> {
        self.check_function(f)?;
        self.g.check_vertex(u)?;
        self.g.closed(u).iter().map(|x| self.copy_weight(f, x)).sum()
    }

    /// `Σ_{x ∈ N_G(u)} f(H_x)`.
    pub fn open_copy_weight(&self, f: &LegionFunction, u: usize) -> Result<u32> {
        self.check_function(f)?;
        self.g.check_vertex(u)?;
        self.g.neighbors(u).iter().map(|x| self.copy_weight(f, x)).sum()
    }

    pub fn sidecar(&self) -> Sidecar {
        let map = (0..self.graph.n())
            .map(|x| {
                let (u, v) = self.pair(x).expect("in range");
                SidecarEntry { index: x, outer: u, inner: v }
            })
            .collect();
        Sidecar {
            schema: "1".into(),
            kind: self.kind,
            n_outer: self.g.n(),
            n_inner: self.h.n(),
            outer_edges: self.g.edges().map(|(a, b)| [a, b]).collect(),
            inner_edges: self.h.edges().map(|(a, b)| [a, b]).collect(),
            map,
        }
    }

    /// Rebuilds the product described by a sidecar.
    pub fn from_sidecar(s: &Sidecar) -> Result<ProductGraph> {
        let g = Graph::from_edges(s.n_outer, s.outer_edges.iter().map(|e| (e[0], e[1])))?;
        let h = Graph::from_edges(s.n_inner, s.inner_edges.iter().map(|e| (e[0], e[1])))?;
        match s.kind {
            ProductKind::Lex => lexicographic(&g, &h),
            ProductKind::Corona => corona(&g, &h),
        }
    }
}

/// JSON description of a product's factors and index map.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Sidecar {
    pub schema: String,
    pub kind: ProductKind,
    pub n_outer: usize,
    pub n_inner: usize,
    pub outer_edges: Vec<[usize; 2]>,
    pub inner_edges: Vec<[usize; 2]>,
    pub map: Vec<SidecarEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SidecarEntry {
    pub index: usize,
    pub outer: usize,
    /// `None` for the outer vertices of a corona.
    pub inner: Option<usize>,
}

/// `G∘H`: `(u,v) ~ (x,y)` iff `ux ∈ E(G)`, or `u = x` and `vy ∈ E(H)`.
pub fn lexicographic(g: &Graph, h: &Graph) -> Result<ProductGraph> {
    if g.n() == 0 || h.n() == 0 {
        return Err(Error::EmptyFactor);
    }
    let nh = h.n();
    let mut edges = Vec::with_capacity(g.m() * nh * nh + g.n() * h.m());
    for u in 0..g.n() {
        for (a, b) in h.edges() {
            edges.push((u * nh + a, u * nh + b));
        }
    }
    for (u, x) in g.edges() {
        for v in 0..nh {
            for y in 0..nh {
                edges.push((u * nh + v, x * nh + y));
            }
        }
    }
    let graph = Graph::from_edges(g.n() * nh, edges)?;
    Ok(ProductGraph { kind: ProductKind::Lex, graph, g: g.clone(), h: h.clone() })
}

/// `G₁⊙G₂`: one copy of `G₂` per vertex of `G₁`, fully joined to that vertex.
pub fn corona(g1: &Graph, g2: &Graph) -> Result<ProductGraph> {
    if g1.n() == 0 {
        return Err(Error::EmptyFactor);
    }
    let (n1, n2) = (g1.n(), g2.n());
    let mut edges: Vec<(usize, usize)> = g1.edges().collect();
    for u in 0..n1 {
        let base = n1 + u * n2;
        for v in 0..n2 {
            edges.push((u, base + v));
        }
        for (a, b) in g2.edges() {
            edges.push((base + a, base + b));
        }
    }
    let graph = Graph::from_edges(n1 * (1 + n2), edges)?;
    Ok(ProductGraph { kind: ProductKind::Corona, graph, g: g1.clone(), h: g2.clone() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{generate, random_connected, FamilySpec};
    use proptest::prelude::*;

    fn fam(spec: FamilySpec) -> Graph {
        generate(&spec).unwrap()
    }

    #[test]
    fn small_lexicographic_products() {
        let p2 = fam(FamilySpec::Path(2));
        assert!(lexicographic(&p2, &p2).unwrap().graph().is_complete());
        let n2 = Graph::empty(2);
        let c4 = lexicographic(&p2, &n2).unwrap();
        assert_eq!(c4.graph().degrees(), vec![2; 4]);
        assert!(c4.graph().is_connected());
        let k1 = Graph::empty(1);
        let g = fam(FamilySpec::Fig4TwoCycles);
        assert_eq!(lexicographic(&g, &k1).unwrap().graph(), &g);
        assert_eq!(lexicographic(&Graph::empty(0), &k1), Err(Error::EmptyFactor));
    }

    #[test]
    fn small_coronas() {
        let k1 = Graph::empty(1);
        let k2 = fam(FamilySpec::Complete(2));
        assert!(corona(&k1, &k2).unwrap().graph().is_complete());
        let p = corona(&fam(FamilySpec::Path(2)), &Graph::empty(2)).unwrap();
        assert_eq!(p.graph().n(), 6);
        assert_eq!(p.graph().degrees(), vec![3, 3, 1, 1, 1, 1]);
        assert_eq!(p.copy(1).unwrap().to_vec(), vec![4, 5]);
        assert_eq!(p.pair(0).unwrap(), (0, None));
        assert_eq!(p.pair(5).unwrap(), (1, Some(1)));
    }

    #[test]
    fn copy_weights() {
        let p = lexicographic(&fam(FamilySpec::Path(3)), &fam(FamilySpec::Path(4))).unwrap();
        let zero = LegionFunction::zeros(12);
        assert_eq!(p.copy_weight(&zero, 1).unwrap(), 0);
        assert_eq!(p.closed_copy_weight(&zero, 1).unwrap(), 0);
        let mut f = LegionFunction::zeros(12);
        f.set(p.index(1, 2).unwrap(), 2);
        assert_eq!(p.copy_weight(&f, 1).unwrap(), 2);
        assert_eq!(p.copy_weight(&f, 0).unwrap(), 0);
        // weight concentrated in a neighbouring copy
        assert_eq!(p.closed_copy_weight(&f, 0).unwrap(), 2);
        assert_eq!(p.closed_copy_weight(&f, 2).unwrap(), 2);
        assert!(p.copy_weight(&f, 3).is_err());
        assert!(p.copy_weight(&LegionFunction::zeros(5), 0).is_err());
    }

    #[test]
    fn sidecar_round_trip() {
        let p = corona(&fam(FamilySpec::Path(3)), &fam(FamilySpec::Path(2))).unwrap();
        let s = p.sidecar();
        let json = serde_json::to_string(&s).unwrap();
        let back: Sidecar = serde_json::from_str(&json).unwrap();
        assert_eq!(ProductGraph::from_sidecar(&back).unwrap(), p);
    }

    proptest! {
        #[test]
        fn lexicographic_degree_law_and_connectivity(
            ng in 1usize..7, nh in 1usize..5, pg in 0.2f64..1.0, ph in 0.2f64..1.0,
            seed in 0u64..300, drop_edges in 0usize..3,
        ) {
            let mut g = random_connected(ng, pg, seed).unwrap();
            for _ in 0..drop_edges {
                let first = g.edges().next();
                if let Some((a, b)) = first {
                    g = g.remove_edge(a, b).unwrap();
                }
            }
            let h = random_connected(nh, ph, seed + 1).unwrap();
            let p = lexicographic(&g, &h).unwrap();
            prop_assert_eq!(p.graph().n(), ng * nh);
            for u in 0..ng {
                for v in 0..nh {
                    let x = p.index(u, v).unwrap();
                    prop_assert_eq!(p.pair(x).unwrap(), (u, Some(v)));
                    prop_assert_eq!(p.graph().degree(x), nh * g.degree(u) + h.degree(v));
                }
            }
            prop_assert_eq!(p.graph().is_connected(), g.is_connected());
            let gc = g.components();
            let pc = p.graph().components();
            prop_assert_eq!(gc.len(), pc.len());
            for (a, b) in gc.iter().zip(&pc) {
                prop_assert_eq!(a.len() * nh, b.len());
            }
        }
    }
}
