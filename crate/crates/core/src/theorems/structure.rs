//! Structural tests that some hypotheses need: Hamiltonicity, planarity,
//! support vertices.

use crate::graph::{Graph, VertexSet};

/// Vertices of degree one.
pub fn leaves(g: &Graph) -> VertexSet {
    VertexSet::from_iter(g.n(), (0..g.n()).filter(|&v| g.degree(v) == 1))
}

/// Vertices adjacent to at least one leaf.
pub fn support_vertices(g: &Graph) -> VertexSet {
    strong_or_plain(g, 1)
}

/// Vertices adjacent to at least two leaves.
pub fn strong_support_vertices(g: &Graph) -> VertexSet {
    strong_or_plain(g, 2)
}

fn strong_or_plain(g: &Graph, k: usize) -> VertexSet {
    let l = leaves(g);
    VertexSet::from_iter(g.n(), (0..g.n()).filter(|&v| g.neighbors(v).intersection_len(&l) >= k))
}

/// A Hamiltonian cycle as a vertex sequence starting at `0`, by backtracking.
/// Meant for small graphs.
pub fn hamiltonian_cycle(g: &Graph) -> Option<Vec<usize>> {
    let n = g.n();
    if n < 3 || g.min_degree()? < 2 {
        return None;
    }
    fn extend(g: &Graph, path: &mut Vec<usize>, used: &mut VertexSet) -> bool {
        let last = *path.last().expect("nonempty");
        if path.len() == g.n() {
            return g.has_edge(last, path[0]);
        }
        for w in &g.neighbors(last).difference(used) {
            path.push(w);
            used.insert(w);
            if extend(g, path, used) {
                return true;
            }
            used.remove(w);
            path.pop();
        }
        false
    }
    let mut path = vec![0];
    let mut used = VertexSet::singleton(n, 0);
    extend(g, &mut path, &mut used).then_some(path)
}

/// Planarity by the Demoucron–Malgrange–Pertuiset algorithm on each
/// biconnected block.
pub fn is_planar(g: &Graph) -> bool {
    if g.n() >= 3 && g.m() > 3 * g.n() - 6 {
        return false;
    }
    blocks(g).iter().all(|edges| block_is_planar(g.n(), edges))
}

/// Edge sets of the biconnected blocks (Hopcroft–Tarjan).
fn blocks(g: &Graph) -> Vec<Vec<(usize, usize)>> {
    struct Dfs<'a> {
        g: &'a Graph,
        disc: Vec<usize>,
        low: Vec<usize>,
        time: usize,
        stack: Vec<(usize, usize)>,
        out: Vec<Vec<(usize, usize)>>,
    }
    impl Dfs<'_> {
        fn visit(&mut self, u: usize, parent: Option<usize>) {
            self.time += 1;
            self.disc[u] = self.time;
            self.low[u] = self.time;
            let g = self.g;
            for v in g.neighbors(u) {
                if self.disc[v] == 0 {
                    self.stack.push((u, v));
                    self.visit(v, Some(u));
                    self.low[u] = self.low[u].min(self.low[v]);
                    if self.low[v] >= self.disc[u] {
                        let mut block = Vec::new();
                        while let Some(e) = self.stack.pop() {
                            block.push(e);
                            if e == (u, v) {
                                break;
                            }
                        }
                        self.out.push(block);
                    }
                } else if Some(v) != parent && self.disc[v] < self.disc[u] {
                    self.stack.push((u, v));
                    self.low[u] = self.low[u].min(self.disc[v]);
                }
            }
        }
    }
    let n = g.n();
    let mut d = Dfs { g, disc: vec![0; n], low: vec![0; n], time: 0, stack: Vec::new(), out: Vec::new() };
    for v in 0..n {
        if d.disc[v] == 0 {
            d.visit(v, None);
        }
    }
    d.out
}

fn block_is_planar(n: usize, edges: &[(usize, usize)]) -> bool {
    let verts: Vec<usize> = {
        let mut v: Vec<usize> = edges.iter().flat_map(|&(a, b)| [a, b]).collect();
        v.sort_unstable();
        v.dedup();
        v
    };
    // bridges and triangles-or-smaller are trivially planar
    if verts.len() <= 4 {
        return true;
    }
    if edges.len() > 3 * verts.len() - 6 {
        return false;
    }
    let mut adj = vec![VertexSet::empty(n); n];
    for &(a, b) in edges {
        adj[a].insert(b);
        adj[b].insert(a);
    }
    let Some(cycle) = find_cycle(&adj, verts[0]) else { return true };
    let mut in_h = VertexSet::from_iter(n, cycle.iter().copied());
    let mut h_adj = vec![VertexSet::empty(n); n];
    for i in 0..cycle.len() {
        let (a, b) = (cycle[i], cycle[(i + 1) % cycle.len()]);
        h_adj[a].insert(b);
        h_adj[b].insert(a);
    }
    let mut faces = vec![cycle.clone(), cycle];
    loop {
        let frags = fragments(&adj, &in_h, &h_adj);
        if frags.is_empty() {
            return true;
        }
        let mut choice = None;
        for (i, f) in frags.iter().enumerate() {
            let ok: Vec<usize> =
                (0..faces.len()).filter(|&j| f.attach.iter().all(|a| faces[j].contains(&a))).collect();
            match ok.len() {
                0 => return false,
                1 => {
                    choice = Some((i, ok[0]));
                    break;
                }
                _ => {
                    if choice.is_none() {
                        choice = Some((i, ok[0]));
                    }
                }
            }
        }
        let (i, j) = choice.expect("nonempty");
        let path = frags[i].path(&adj, &in_h);
        for w in path.windows(2) {
            h_adj[w[0]].insert(w[1]);
            h_adj[w[1]].insert(w[0]);
        }
        for &v in &path {
            in_h.insert(v);
        }
        let (f1, f2) = split_face(&faces[j], &path);
        faces[j] = f1;
        faces.push(f2);
    }
}

fn find_cycle(adj: &[VertexSet], start: usize) -> Option<Vec<usize>> {
    let n = adj.len();
    let mut parent = vec![usize::MAX; n];
    let mut stack = vec![start];
    let mut seen = VertexSet::singleton(n, start);
    parent[start] = start;
    while let Some(u) = stack.pop() {
        for v in &adj[u] {
            if !seen.contains(v) {
                seen.insert(v);
                parent[v] = u;
                stack.push(v);
            } else if v != parent[u] && parent[v] != u {
                // tree paths from u and v meet at their lowest common ancestor
                let up = |mut x: usize| {
                    let mut p = vec![x];
                    while parent[x] != x {
                        x = parent[x];
                        p.push(x);
                    }
                    p
                };
                let pu = up(u);
                let pv = up(v);
                let lca = *pu.iter().find(|x| pv.contains(x)).expect("same tree");
                let mut cyc: Vec<usize> = pu.iter().copied().take_while(|&x| x != lca).collect();
                cyc.push(lca);
                let mut tail: Vec<usize> = pv.iter().copied().take_while(|&x| x != lca).collect();
                tail.reverse();
                cyc.extend(tail);
                return Some(cyc);
            }
        }
    }
    None
}

struct Fragment {
    attach: Vec<usize>,
    /// Non-embedded vertices of the fragment; empty for a chord.
    inner: VertexSet,
}

impl Fragment {
    /// A path between two distinct attachments through the fragment.
    fn path(&self, adj: &[VertexSet], in_h: &VertexSet) -> Vec<usize> {
        let (a, b) = (self.attach[0], self.attach[1]);
        if self.inner.is_empty() {
            return vec![a, b];
        }
        let n = adj.len();
        let mut prev = vec![usize::MAX; n];
        let mut queue = std::collections::VecDeque::new();
        for s in &adj[a].intersection(&self.inner) {
            prev[s] = a;
            queue.push_back(s);
        }
        while let Some(x) = queue.pop_front() {
            if adj[x].contains(b) {
                let mut p = vec![b, x];
                let mut y = x;
                while prev[y] != a {
                    y = prev[y];
                    p.push(y);
                }
                p.push(a);
                p.reverse();
                return p;
            }
            for y in &adj[x].intersection(&self.inner) {
                if prev[y] == usize::MAX && !in_h.contains(y) {
                    prev[y] = x;
                    queue.push_back(y);
                }
            }
        }
        unreachable!("fragment is connected with two attachments")
    }
}

fn fragments(adj: &[VertexSet], in_h: &VertexSet, h_adj: &[VertexSet]) -> Vec<Fragment> {
    let n = adj.len();
    let mut out = Vec::new();
    for u in in_h {
        for v in &adj[u].intersection(in_h) {
            if u < v && !h_adj[u].contains(v) {
                out.push(Fragment { attach: vec![u, v], inner: VertexSet::empty(n) });
            }
        }
    }
    let mut seen = in_h.clone();
    for s in 0..n {
        if seen.contains(s) || adj[s].is_empty() {
            continue;
        }
        let mut comp = VertexSet::singleton(n, s);
        let mut stack = vec![s];
        seen.insert(s);
        let mut attach = VertexSet::empty(n);
        while let Some(x) = stack.pop() {
            for y in &adj[x] {
                if in_h.contains(y) {
                    attach.insert(y);
                } else if !seen.contains(y) {
                    seen.insert(y);
                    comp.insert(y);
                    stack.push(y);
                }
            }
        }
        out.push(Fragment { attach: attach.to_vec(), inner: comp });
    }
    out
}

/// Splits the cyclic face `f` along `path`, whose ends lie on `f`.
fn split_face(f: &[usize], path: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let a = path[0];
    let b = *path.last().expect("nonempty");
    let i = f.iter().position(|&x| x == a).expect("on face");
    let j = f.iter().position(|&x| x == b).expect("on face");
    let k = f.len();
    let arc = |from: usize, to: usize| {
        let mut out = vec![f[from]];
        let mut x = from;
        while x != to {
            x = (x + 1) % k;
            out.push(f[x]);
        }
        out
    };
    let inner = &path[1..path.len() - 1];
    // a → b along the face, back to a along the path
    let mut f1 = arc(i, j);
    f1.extend(inner.iter().rev());
    // b → a along the face, back to b along the path
    let mut f2 = arc(j, i);
    f2.extend(inner.iter());
    (f1, f2)
}
