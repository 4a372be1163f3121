use super::engine::{Rules, State, Step};
use crate::graph::{Graph, VertexSet};

fn ceil_div(a: usize, b: usize) -> u32 {
    a.div_ceil(b.max(1)) as u32
}

/// Vertices closed-covered at least once and at least twice by `pos`.
fn coverage(g: &Graph, pos: &VertexSet) -> (VertexSet, VertexSet) {
    let mut once = VertexSet::empty(g.n());
    let mut twice = VertexSet::empty(g.n());
    for u in pos {
        twice.union_with(&once.intersection(g.closed(u)));
        once.union_with(g.closed(u));
    }
    (once, twice)
}

fn open_coverage(g: &Graph, s: &VertexSet) -> (VertexSet, VertexSet) {
    let mut once = VertexSet::empty(g.n());
    let mut twice = VertexSet::empty(g.n());
    for u in s {
        twice.union_with(&once.intersection(g.neighbors(u)));
        once.union_with(g.neighbors(u));
    }
    (once, twice)
}

/// Shared graph data for the bounds.
pub(crate) struct Prepared<'a> {
    g: &'a Graph,
    /// `N[N[v]]`: vertices within distance two.
    ball2: Vec<VertexSet>,
    max_closed: usize,
}

impl<'a> Prepared<'a> {
    pub fn new(g: &'a Graph) -> Self {
        let ball2 = (0..g.n())
            .map(|v| {
                let mut b = VertexSet::empty(g.n());
                for u in g.closed(v) {
                    b.union_with(g.closed(u));
                }
                b
            })
            .collect();
        Prepared { g, ball2, max_closed: g.max_degree().unwrap_or(0) + 1 }
    }

    /// Greedy set of members of `u` at pairwise distance ≥ 3; no vertex
    /// dominates two of them.
    fn packing_bound(&self, u: &VertexSet) -> u32 {
        let mut blocked = VertexSet::empty(self.g.n());
        let mut count = 0;
        for x in u {
            if !blocked.contains(x) {
                count += 1;
                blocked.union_with(&self.ball2[x]);
            }
        }
        count
    }

    fn domination_bound(&self, u: &VertexSet) -> u32 {
        ceil_div(u.len(), self.max_closed).max(self.packing_bound(u))
    }
}

/// Every function accepted by these rules puts weight at least 2 on
/// `⋃_{x ∈ N_G[u]} H_x` for each outer vertex `u` (lexicographic product
/// with a noncomplete second factor).
pub(crate) struct CopyBound {
    outer: Graph,
    copies: Vec<VertexSet>,
}

impl CopyBound {
    pub fn new(outer: Graph, copies: Vec<VertexSet>) -> Self {
        CopyBound { outer, copies }
    }

    fn bound(&self, s: &State) -> u32 {
        let cw: Vec<u32> = self
            .copies
            .iter()
            .map(|c| (c.intersection_len(&s.v1) + 2 * c.intersection_len(&s.v2)) as u32)
            .collect();
        let deficit: Vec<u32> = (0..self.outer.n())
            .map(|u| 2u32.saturating_sub(self.outer.closed(u).iter().map(|x| cw[x]).sum()))
            .collect();
        // Weight added to one copy helps only the copies within distance one,
        // so copies with disjoint closed neighbourhoods need separate weight.
        let mut used = VertexSet::empty(self.outer.n());
        let mut lb = 0;
        for want in [2, 1] {
            for u in 0..self.outer.n() {
                if deficit[u] == want && !self.outer.closed(u).intersects(&used) {
                    used.union_with(self.outer.closed(u));
                    lb += want;
                }
            }
        }
        lb
    }
}

fn push_cands(out: &mut Vec<(usize, u8)>, set: &VertexSet, s: &State, two: bool) {
    for c in set {
        if s.allow1.contains(c) {
            out.push((c, 1));
        }
        if two && s.allow2.contains(c) {
            out.push((c, 2));
        }
    }
}

/// Weak Roman dominating functions. With `allow2` empty at the root these
/// are exactly the secure dominating sets.
pub(crate) struct WeakRoman<'a> {
    pub prep: Prepared<'a>,
    pub copies: Option<CopyBound>,
}

impl Rules for WeakRoman<'_> {
    fn step(&self, s: &State, target: u32) -> Step {
        let g = self.prep.g;
        let remaining = target - s.weight;
        let two = remaining >= 2;
        let pos = s.positive();
        let (once, twice) = coverage(g, &pos);
        let mut avail = s.allow1.clone();
        if two {
            avail.union_with(&s.allow2);
        }
        let copy_lb = self.copies.as_ref().map_or(0, |c| c.bound(s));

        let undominated = once.complement();
        if !undominated.is_empty() {
            if remaining == 0 {
                return Step::Dead;
            }
            let mut pick = None;
            for x in &undominated {
                let c = g.closed(x).intersection_len(&avail);
                if c == 0 {
                    return Step::Dead;
                }
                if pick.map_or(true, |(bc, _)| c < bc) {
                    pick = Some((c, x));
                }
            }
            let (_, x) = pick.expect("nonempty");
            let lb = self.prep.domination_bound(&undominated).max(copy_lb);
            let mut cands = Vec::new();
            push_cands(&mut cands, &g.closed(x).intersection(&avail), s, two);
            return Step::Branch { lb, cands };
        }

        // Dominated: look for a zero vertex that no single move can serve.
        let mut worst: Option<VertexSet> = None;
        for v in &pos.complement() {
            if g.neighbors(v).intersects(&s.v2) {
                continue;
            }
            let mut branch = g.closed(v).clone();
            let mut defended = false;
            for u in &g.neighbors(v).intersection(&s.v1) {
                let crit = g.closed(u).difference(&twice).difference(g.closed(v));
                if crit.is_empty() {
                    defended = true;
                    break;
                }
                // a completion defending v from u must cover this w afresh
                let w = crit.iter().min_by_key(|&w| g.closed(w).intersection_len(&avail)).expect("nonempty");
                branch.union_with(g.closed(w));
            }
            if defended {
                continue;
            }
            branch.intersect_with(&avail);
            if branch.is_empty() || remaining == 0 {
                return Step::Dead;
            }
            if worst.as_ref().map_or(true, |b| branch.len() < b.len()) {
                worst = Some(branch);
            }
        }
        match worst {
            None => Step::Solution,
            Some(branch) => {
                let mut cands = Vec::new();
                push_cands(&mut cands, &branch, s, two);
                Step::Branch { lb: copy_lb.max(1), cands }
            }
        }
    }
}

/// Roman dominating functions.
pub(crate) struct Roman<'a> {
    pub prep: Prepared<'a>,
    pub copies: Option<CopyBound>,
}

impl Rules for Roman<'_> {
    fn step(&self, s: &State, target: u32) -> Step {
        let g = self.prep.g;
        let remaining = target - s.weight;
        let two = remaining >= 2;
        let mut violators = s.positive().complement();
        for y in &s.v2 {
            violators.difference_with(g.neighbors(y));
        }
        if violators.is_empty() {
            return Step::Solution;
        }
        if remaining == 0 {
            return Step::Dead;
        }
        let avail2 = if two { s.allow2.clone() } else { VertexSet::empty(g.n()) };
        let mut pick: Option<(VertexSet, usize)> = None;
        for x in &violators {
            let mut c = g.neighbors(x).intersection(&avail2);
            if s.allow1.contains(x) || avail2.contains(x) {
                c.insert(x);
            }
            if c.is_empty() {
                return Step::Dead;
            }
            if pick.as_ref().map_or(true, |(b, _)| c.len() < b.len()) {
                pick = Some((c, x));
            }
        }
        let (set, x) = pick.expect("nonempty");
        // a 1 fixes one violator, a 2 fixes at most `most` of them
        let most = avail2.iter().map(|y| g.closed(y).intersection_len(&violators)).max().unwrap_or(0);
        let mut lb = ceil_div(2 * violators.len(), most.max(2));
        if let Some(c) = &self.copies {
            lb = lb.max(c.bound(s));
        }
        let mut cands = Vec::new();
        for c in &set {
            if avail2.contains(c) {
                cands.push((c, 2));
            }
            if c == x && s.allow1.contains(c) {
                cands.push((c, 1));
            }
        }
        Step::Branch { lb, cands }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Cover {
    /// Dominating sets: every vertex in or next to the set.
    Closed,
    /// Total dominating sets: every vertex next to the set.
    Open,
    /// Double total dominating sets: every vertex next to two members.
    Double,
}

/// Set-valued covering problems; the root state forbids the value 2.
pub(crate) struct SetCover<'a> {
    pub prep: Prepared<'a>,
    pub kind: Cover,
}

impl Rules for SetCover<'_> {
    fn step(&self, s: &State, target: u32) -> Step {
        let g = self.prep.g;
        let remaining = target - s.weight;
        let avail = &s.allow1;
        let delta = g.max_degree().unwrap_or(0);
        let (short, need, lb) = match self.kind {
            Cover::Closed => {
                let (once, _) = coverage(g, &s.v1);
                let u = once.complement();
                let lb = self.prep.domination_bound(&u);
                (u, None, lb)
            }
            Cover::Open => {
                let (once, _) = open_coverage(g, &s.v1);
                let u = once.complement();
                let lb = ceil_div(u.len(), delta);
                (u, None, lb)
            }
            Cover::Double => {
                let (once, twice) = open_coverage(g, &s.v1);
                let u = twice.complement();
                let deficit = u.len() + u.difference(&once).len();
                let lb = ceil_div(deficit, delta);
                (u, Some(once), lb)
            }
        };
        if short.is_empty() {
            return Step::Solution;
        }
        if remaining == 0 {
            return Step::Dead;
        }
        let mut pick: Option<(usize, usize)> = None;
        for x in &short {
            let nb = if self.kind == Cover::Closed { g.closed(x) } else { g.neighbors(x) };
            let c = nb.intersection_len(avail);
            let d = match &need {
                Some(once) if !once.contains(x) => 2,
                _ => 1,
            };
            if c < d {
                return Step::Dead;
            }
            // fewest spare candidates first
            if pick.map_or(true, |(bc, _)| c - d < bc) {
                pick = Some((c - d, x));
            }
        }
        let (_, x) = pick.expect("nonempty");
        let nb = if self.kind == Cover::Closed { g.closed(x) } else { g.neighbors(x) };
        let cands = nb.intersection(avail).iter().map(|c| (c, 1)).collect();
        Step::Branch { lb, cands }
    }
}

/// Minimum total copy weight `Σ w_u` over integer vectors with
/// `Σ_{x∈N[u]} w_x ≥ 2` (when `pairs`) and, for every `u` whose open
/// neighbourhood carries no weight, `w_u ≥ gamma_h` (the copy must then
/// dominate itself). Exhaustive over small outer graphs; `None` if too large.
pub(crate) fn copy_relaxation(outer: &Graph, gamma_h: u32, pairs: bool) -> Option<u32> {
    const MAX_OUTER: usize = 12;
    let n = outer.n();
    if n > MAX_OUTER {
        return None;
    }
    let top = gamma_h.max(if pairs { 2 } else { 1 });
    let mut values: Vec<u32> = vec![0, 1, 2, gamma_h];
    values.retain(|&v| v <= top);
    values.sort_unstable();
    values.dedup();
    let feasible = |w: &[u32]| {
        (0..n).all(|u| {
            let open: u32 = outer.neighbors(u).iter().map(|x| w[x]).sum();
            (!pairs || open + w[u] >= 2) && (open >= 1 || w[u] >= gamma_h)
        })
    };
    fn rec(i: usize, w: &mut Vec<u32>, sum: u32, best: &mut u32, values: &[u32], feasible: &dyn Fn(&[u32]) -> bool) {
        if sum >= *best {
            return;
        }
        if i == w.len() {
            if feasible(w) {
                *best = sum;
            }
            return;
        }
        for &v in values {
            w[i] = v;
            rec(i + 1, w, sum + v, best, values, feasible);
        }
        w[i] = 0;
    }
    let mut best = top * n as u32;
    rec(0, &mut vec![0; n], 0, &mut best, &values, &feasible);
    Some(best)
}
