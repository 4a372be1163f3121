//! Validity predicates for the set-valued domination concepts.
//!
//! These are written directly from the definitions and are used as the raw
//! checks behind certificates and the exhaustive oracle; the solvers never
//! call into them on their hot paths.

use super::{Graph, VertexSet};
use crate::error::{Error, Result};

impl Graph {
    /// Every vertex outside `s` has a neighbour in `s`.
    pub fn is_dominating(&self, s: &VertexSet) -> bool {
        (0..self.n()).all(|v| s.contains(v) || self.neighbors(v).intersects(s))
    }

    /// Every vertex has a neighbour in `s`. Undefined with isolated vertices.
    pub fn is_total_dominating(&self, s: &VertexSet) -> Result<bool> {
        if self.has_isolated_vertex() {
            return Err(Error::TotalDominationUndefined);
        }
        Ok((0..self.n()).all(|v| self.neighbors(v).intersects(s)))
    }

    /// Every vertex has at least two neighbours in `s`. Requires `δ ≥ 2`.
    pub fn is_double_total_dominating(&self, s: &VertexSet) -> Result<bool> {
        if self.min_degree().is_some_and(|d| d < 2) {
            return Err(Error::MinDegreeBelowTwo);
        }
        Ok((0..self.n()).all(|v| self.neighbors(v).intersection_len(s) >= 2))
    }

    /// Closed neighbourhoods of distinct members are pairwise disjoint.
    pub fn is_2packing(&self, s: &VertexSet) -> bool {
        let members = s.to_vec();
        members.iter().enumerate().all(|(i, &u)| members[i + 1..].iter().all(|&v| !self.closed(u).intersects(self.closed(v))))
    }

    /// `s` dominates, and every outside vertex `v` has a neighbour `u ∈ s`
    /// such that swapping `u` out for `v` still dominates.
    pub fn is_secure_dominating(&self, s: &VertexSet) -> bool {
        if !self.is_dominating(s) {
            return false;
        }
        (0..self.n()).filter(|&v| !s.contains(v)).all(|v| {
            self.neighbors(v).intersection(s).iter().any(|u| {
                let mut swapped = s.clone();
                swapped.remove(u);
                swapped.insert(v);
                self.is_dominating(&swapped)
            })
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{generate, FamilySpec};
    use proptest::prelude::*;

    fn fam(spec: FamilySpec) -> Graph {
        generate(&spec).unwrap()
    }

    fn set(n: usize, v: &[usize]) -> VertexSet {
        VertexSet::from_iter(n, v.iter().copied())
    }

    fn subsets(n: usize, k: usize) -> Vec<VertexSet> {
        (0u32..1 << n)
            .filter(|m| m.count_ones() as usize == k)
            .map(|m| VertexSet::from_iter(n, (0..n).filter(|&i| m >> i & 1 == 1)))
            .collect()
    }

    #[test]
    fn dominating_examples() {
        let p3 = fam(FamilySpec::Path(3));
        assert!(p3.is_dominating(&set(3, &[1])));
        assert!(!p3.is_dominating(&set(3, &[0])));
        let t = fam(FamilySpec::Fig1Tree);
        assert!(t.is_dominating(&set(6, &[0, 2])));
    }

    #[test]
    fn total_dominating_examples() {
        let p4 = fam(FamilySpec::Path(4));
        assert_eq!(p4.is_total_dominating(&set(4, &[1, 2])), Ok(true));
        assert_eq!(p4.is_total_dominating(&set(4, &[0, 3])), Ok(false));
        // spider: each support vertex paired with a spine neighbour
        let spider = fam(FamilySpec::Fig6Spider);
        assert_eq!(spider.is_total_dominating(&set(15, &[0, 1, 3, 4, 6, 7])), Ok(true));
        let isolated = Graph::empty(2);
        assert_eq!(isolated.is_total_dominating(&set(2, &[0, 1])), Err(Error::TotalDominationUndefined));
    }

    #[test]
    fn double_total_examples() {
        let g44 = fam(FamilySpec::Grs(4, 4));
        // x1, x2, x3, y_1, z_1
        assert_eq!(g44.is_double_total_dominating(&set(11, &[0, 1, 2, 3, 7])), Ok(true));
        let c4 = fam(FamilySpec::Cycle(4));
        assert_eq!(c4.is_double_total_dominating(&VertexSet::full(4)), Ok(true));
        for s in subsets(4, 3) {
            assert_eq!(c4.is_double_total_dominating(&s), Ok(false));
        }
        assert_eq!(fam(FamilySpec::Path(3)).is_double_total_dominating(&VertexSet::full(3)), Err(Error::MinDegreeBelowTwo));
    }

    #[test]
    fn packing_examples() {
        let p7 = fam(FamilySpec::Path(7));
        assert!(p7.is_2packing(&set(7, &[0, 3, 6])));
        assert!(p7.is_2packing(&set(7, &[4])));
        let k3 = fam(FamilySpec::Complete(3));
        for s in subsets(3, 2) {
            assert!(!k3.is_2packing(&s));
        }
        assert!(k3.is_2packing(&VertexSet::empty(3)));
    }

    #[test]
    fn secure_examples() {
        let k5 = fam(FamilySpec::Complete(5));
        for v in 0..5 {
            assert!(k5.is_secure_dominating(&set(5, &[v])));
        }
        assert!(fam(FamilySpec::Path(4)).is_secure_dominating(&set(4, &[1, 2])));
        let c5 = fam(FamilySpec::Cycle(5));
        for s in subsets(5, 2) {
            assert!(!c5.is_secure_dominating(&s));
        }
    }

    proptest! {
        #[test]
        fn secure_implies_dominating(n in 1usize..=8, p in 0.2f64..0.9, seed in 0u64..1000) {
            let g = crate::generators::random_connected(n, p, seed).unwrap();
            prop_assert!(g.is_dominating(&g.vertices()));
            prop_assert!(g.is_2packing(&VertexSet::empty(n)));
            for mask in 0u32..1 << n {
                let s = VertexSet::from_iter(n, (0..n).filter(|&i| mask >> i & 1 == 1));
                if g.is_secure_dominating(&s) {
                    prop_assert!(g.is_dominating(&s));
                }
            }
        }
    }
}
