use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// An assignment `V → {0, 1, 2}`, equivalently the partition `(V0, V1, V2)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LegionFunction {
    values: Vec<u8>,
}

impl LegionFunction {
    pub fn zeros(n: usize) -> Self {
        LegionFunction { values: vec![0; n] }
    }

    pub fn ones(n: usize) -> Self {
        LegionFunction { values: vec![1; n] }
    }

    pub fn from_values(values: Vec<u8>) -> Result<Self> {
        if let Some(&bad) = values.iter().find(|&&x| x > 2) {
            return Err(Error::Config(format!("legion value {bad} outside 0..=2")));
        }
        Ok(LegionFunction { values })
    }

    /// Builds `f` from `V1` and `V2`; the two index lists must be disjoint.
    pub fn from_sets(n: usize, v1: &[usize], v2: &[usize]) -> Result<Self> {
        let mut f = LegionFunction::zeros(n);
        for (list, val) in [(v1, 1u8), (v2, 2u8)] {
            for &v in list {
                if v >= n {
                    return Err(Error::VertexOutOfRange { v, n });
                }
                if f.values[v] != 0 {
                    return Err(Error::Config(format!("vertex {v} assigned twice")));
                }
                f.values[v] = val;
            }
        }
        Ok(f)
    }

    pub(crate) fn from_vertex_sets(v1: &VertexSet, v2: &VertexSet) -> Self {
        let mut f = LegionFunction::zeros(v1.universe());
        for v in v1 {
            f.values[v] = 1;
        }
        for v in v2 {
            f.values[v] = 2;
        }
        f
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn value(&self, v: usize) -> u8 {
        self.values[v]
    }

    pub fn values(&self) -> &[u8] {
        &self.values
    }

    pub fn set(&mut self, v: usize, val: u8) {
        assert!(val <= 2, "legion value {val} outside 0..=2");
        self.values[v] = val;
    }

    fn class(&self, val: u8) -> VertexSet {
        VertexSet::from_iter(self.len(), (0..self.len()).filter(|&v| self.values[v] == val))
    }

    pub fn v0(&self) -> VertexSet {
        self.class(0)
    }

    pub fn v1(&self) -> VertexSet {
        self.class(1)
    }

    pub fn v2(&self) -> VertexSet {
        self.class(2)
    }

    /// `V1 ∪ V2`.
    pub fn positive(&self) -> VertexSet {
        VertexSet::from_iter(self.len(), (0..self.len()).filter(|&v| self.values[v] > 0))
    }

    pub fn weight(&self) -> u32 {
        self.values.iter().map(|&x| x as u32).sum()
    }

    /// `f(X)`.
    pub fn weight_of(&self, x: &VertexSet) -> u32 {
        x.iter().map(|v| self.values[v] as u32).sum()
    }

    fn check(&self, g: &Graph) {
        assert_eq!(self.len(), g.n(), "legion function length does not match the graph order");
    }

    /// No legion on `N[v]`.
    pub fn is_undefended(&self, g: &Graph, v: usize) -> bool {
        self.check(g);
        g.closed(v).iter().all(|u| self.values[u] == 0)
    }

    /// Every `v ∈ V0` can receive a legion from some neighbour without
    /// leaving an undefended vertex behind.
    pub fn is_wrdf(&self, g: &Graph) -> bool {
        self.check(g);
        let pos = self.positive();
        (0..g.n()).filter(|&v| self.values[v] == 0).all(|v| {
            g.neighbors(v).intersection(&pos).iter().any(|u| {
                let mut moved = pos.clone();
                moved.insert(v);
                if self.values[u] == 1 {
                    moved.remove(u);
                }
                g.is_dominating(&moved)
            })
        })
    }

    /// Every `v ∈ V0` has a neighbour in `V2`.
    pub fn is_rdf(&self, g: &Graph) -> bool {
        self.check(g);
        let v2 = self.v2();
        (0..g.n()).filter(|&v| self.values[v] == 0).all(|v| g.neighbors(v).intersects(&v2))
    }
}

impl fmt::Debug for LegionFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "f(V1={:?}, V2={:?})", self.v1().to_vec(), self.v2().to_vec())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{generate, FamilySpec};

    fn fam(spec: FamilySpec) -> Graph {
        generate(&spec).unwrap()
    }

    #[test]
    fn partition_and_weight() {
        let f = LegionFunction::from_sets(6, &[1, 4], &[0]).unwrap();
        assert_eq!(f.weight(), 4);
        assert_eq!(f.v0().to_vec(), vec![2, 3, 5]);
        assert_eq!(f.positive().to_vec(), vec![0, 1, 4]);
        assert!(LegionFunction::from_sets(3, &[1], &[1]).is_err());
        assert!(LegionFunction::from_sets(3, &[3], &[]).is_err());
        assert!(LegionFunction::from_values(vec![0, 3]).is_err());
    }

    #[test]
    fn undefended_vertices() {
        let t = fam(FamilySpec::Fig1Tree);
        let zero = LegionFunction::zeros(6);
        assert!((0..6).all(|v| zero.is_undefended(&t, v)));
        // 2 on the degree-3 vertex, 1 on the second path vertex
        let f = LegionFunction::from_sets(6, &[2], &[0]).unwrap();
        assert!(!f.is_undefended(&t, 3));
        assert!(!f.is_undefended(&t, 2));
        let mut g = LegionFunction::zeros(6);
        g.set(4, 1);
        assert!(!g.is_undefended(&t, 4));
        assert!(g.is_undefended(&t, 3));
    }

    #[test]
    fn fig1_placements() {
        let t = fam(FamilySpec::Fig1Tree);
        let left = LegionFunction::from_sets(6, &[2], &[0]).unwrap();
        assert!(left.is_wrdf(&t));
        assert!(!left.is_rdf(&t));
        let right = LegionFunction::from_sets(6, &[3], &[0]).unwrap();
        assert!(right.is_wrdf(&t));
        let roman = LegionFunction::from_sets(6, &[], &[0, 2]).unwrap();
        assert!(roman.is_rdf(&t));
        assert!(roman.is_wrdf(&t));
        assert!(LegionFunction::ones(6).is_rdf(&t));
        assert!(LegionFunction::ones(6).is_wrdf(&t));
    }

    #[test]
    fn zero_function_is_never_wrdf() {
        for n in 1..6 {
            assert!(!LegionFunction::zeros(n).is_wrdf(&fam(FamilySpec::Complete(n))));
        }
    }

    #[test]
    fn p7_weight_two_is_never_wrdf() {
        let p7 = fam(FamilySpec::Path(7));
        let mut found = 0;
        for code in 0..3usize.pow(7) {
            let vals: Vec<u8> = (0..7).map(|i| (code / 3usize.pow(i) % 3) as u8).collect();
            let f = LegionFunction::from_values(vals).unwrap();
            if f.weight() == 2 {
                assert!(!f.is_wrdf(&p7));
            }
            if f.weight() == 3 && f.is_wrdf(&p7) {
                found += 1;
            }
        }
        assert!(found > 0);
    }

    #[test]
    fn moving_a_lone_legion_can_expose_a_vertex() {
        // P_3 with a single 1 in the middle: moving it to a leaf undefends the other leaf
        let p3 = fam(FamilySpec::Path(3));
        assert!(!LegionFunction::from_sets(3, &[1], &[]).unwrap().is_wrdf(&p3));
        assert!(LegionFunction::from_sets(3, &[], &[1]).unwrap().is_wrdf(&p3));
    }
}
