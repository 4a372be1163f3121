//! Weight-iterative exhaustive search shared by every minimisation.
//!
//! A state fixes some vertices to 1 or 2 and forbids some (vertex, value)
//! pairs. Rules inspect a state and either accept it, reject it, or name a
//! set of candidate assignments one of which every completion must use.
//! Children are generated in candidate order and each tried pair is
//! forbidden in its later siblings, so every solution is reached exactly once.

use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};
use std::sync::Mutex;

use crate::graph::VertexSet;

#[derive(Clone, Debug)]
pub(crate) struct State {
    pub v1: VertexSet,
    pub v2: VertexSet,
    pub allow1: VertexSet,
    pub allow2: VertexSet,
    pub weight: u32,
}

pub(crate) type Key = (Vec<usize>, Vec<usize>);

impl State {
    pub fn root(n: usize, allow2: bool) -> Self {
        State {
            v1: VertexSet::empty(n),
            v2: VertexSet::empty(n),
            allow1: VertexSet::full(n),
            allow2: if allow2 { VertexSet::full(n) } else { VertexSet::empty(n) },
            weight: 0,
        }
    }

    pub fn positive(&self) -> VertexSet {
        self.v1.union(&self.v2)
    }

    pub fn allows(&self, v: usize, val: u8) -> bool {
        match val {
            1 => self.allow1.contains(v),
            _ => self.allow2.contains(v),
        }
    }

    fn assign(&mut self, v: usize, val: u8) {
        if val == 1 {
            self.v1.insert(v);
        } else {
            self.v2.insert(v);
        }
        self.allow1.remove(v);
        self.allow2.remove(v);
        self.weight += val as u32;
    }

    fn forbid(&mut self, v: usize, val: u8) {
        if val == 1 {
            self.allow1.remove(v);
        } else {
            self.allow2.remove(v);
        }
    }

    /// Canonical order: `V2` then `V1`, each as an ascending index sequence.
    pub fn key(&self) -> Key {
        (self.v2.to_vec(), self.v1.to_vec())
    }

    /// True if no completion can have a key below `best`.
    fn cannot_beat(&self, best: &Key, target: u32) -> bool {
        let room = target - self.weight;
        let lb2 = smallest_superset(&self.v2, if room >= 2 { &self.allow2 } else { &self.v2 });
        match lb2.cmp(&best.0) {
            std::cmp::Ordering::Greater => true,
            std::cmp::Ordering::Less => false,
            std::cmp::Ordering::Equal => smallest_superset(&self.v1, &self.allow1) > best.1,
        }
    }
}

/// Lexicographically smallest ascending sequence of a set `S` with
/// `fixed ⊆ S ⊆ fixed ∪ extra`: everything allowed below `max(fixed)`.
fn smallest_superset(fixed: &VertexSet, extra: &VertexSet) -> Vec<usize> {
    match fixed.iter().last() {
        None => Vec::new(),
        Some(top) => fixed.union(extra).iter().take_while(|&v| v <= top).collect(),
    }
}

pub(crate) enum Step {
    Solution,
    Dead,
    /// `lb` bounds the weight still to be added.
    Branch { lb: u32, cands: Vec<(usize, u8)> },
}

pub(crate) trait Rules: Sync {
    fn step(&self, s: &State, target: u32) -> Step;
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Mode {
    /// Keep the canonical minimum among all solutions of the target weight.
    Best,
    /// Keep every solution.
    All,
}

pub(crate) struct Budget {
    limit: Option<u64>,
    used: AtomicU64,
    exceeded: AtomicBool,
}

impl Budget {
    pub fn new(limit: Option<u64>) -> Self {
        Budget { limit, used: AtomicU64::new(0), exceeded: AtomicBool::new(false) }
    }

    pub fn tick(&self) -> bool {
        let used = self.used.fetch_add(1, Ordering::Relaxed) + 1;
        if self.limit.is_some_and(|l| used > l) {
            self.exceeded.store(true, Ordering::Relaxed);
        }
        !self.exceeded()
    }

    pub fn exceeded(&self) -> bool {
        self.exceeded.load(Ordering::Relaxed)
    }

    pub fn used(&self) -> u64 {
        self.used.load(Ordering::Relaxed)
    }
}

#[derive(Default)]
struct Acc {
    best: Option<(Key, State)>,
    all: Vec<State>,
    /// Stop at the first solution.
    first: bool,
}

impl Acc {
    fn push(&mut self, s: State, mode: Mode) {
        match mode {
            Mode::All => self.all.push(s),
            Mode::Best => {
                let k = s.key();
                if self.best.as_ref().map_or(true, |(b, _)| k < *b) {
                    self.best = Some((k, s));
                }
            }
        }
    }

    fn merge(&mut self, other: Acc, mode: Mode) {
        if let Some((_, s)) = other.best {
            self.push(s, mode);
        }
        self.all.extend(other.all);
    }

    fn found(&self) -> bool {
        self.best.is_some() || !self.all.is_empty()
    }
}

const FRONTIER_WIDTH: usize = 256;
const FRONTIER_DEPTH: usize = 6;

fn children<R: Rules>(rules: &R, s: State, target: u32, mode: Mode, acc: &mut Acc, budget: &Budget) -> Vec<State> {
    if !budget.tick() {
        return Vec::new();
    }
    match rules.step(&s, target) {
        Step::Solution => {
            acc.push(s, mode);
            Vec::new()
        }
        Step::Dead => Vec::new(),
        Step::Branch { lb, cands } => {
            if s.weight + lb > target {
                return Vec::new();
            }
            if let Some((best, _)) = &acc.best {
                if s.cannot_beat(best, target) {
                    return Vec::new();
                }
            }
            let mut base = s;
            let mut out = Vec::with_capacity(cands.len());
            for (v, val) in cands {
                if base.weight + val as u32 > target || !base.allows(v, val) {
                    continue;
                }
                let mut child = base.clone();
                child.assign(v, val);
                out.push(child);
                base.forbid(v, val);
            }
            out
        }
    }
}

fn dfs<R: Rules>(rules: &R, s: State, target: u32, mode: Mode, acc: &mut Acc, budget: &Budget) {
    for child in children(rules, s, target, mode, acc, budget) {
        if budget.exceeded() || acc.first && acc.found() {
            return;
        }
        dfs(rules, child, target, mode, acc, budget);
    }
}

/// Exhausts the tree for one target weight. Returns `None` if the budget ran out.
fn search_target<R: Rules>(
    rules: &R,
    root: &State,
    target: u32,
    mode: Mode,
    shards: usize,
    budget: &Budget,
) -> Option<Acc> {
    let mut acc = Acc::default();
    // The frontier does not depend on the shard count, so node counts don't either.
    let mut frontier = vec![root.clone()];
    for _ in 0..FRONTIER_DEPTH {
        if frontier.is_empty() || frontier.len() >= FRONTIER_WIDTH {
            break;
        }
        let mut next = Vec::new();
        for s in frontier {
            next.extend(children(rules, s, target, mode, &mut acc, budget));
        }
        frontier = next;
    }
    // Every frontier item starts from the same incumbent, found by a
    // sequential first-solution pass, and keeps its own improvements, so the
    // work per item, and hence the node count, is independent of scheduling.
    let mut seed = acc.best.clone();
    if mode == Mode::Best && seed.is_none() {
        let mut probe = Acc { first: true, ..Acc::default() };
        for s in &frontier {
            dfs(rules, s.clone(), target, mode, &mut probe, budget);
            if probe.found() || budget.exceeded() {
                break;
            }
        }
        seed = probe.best;
    }
    let shards = shards.max(1).min(frontier.len().max(1));
    let results: Vec<Mutex<Option<Acc>>> = frontier.iter().map(|_| Mutex::new(None)).collect();
    let next = AtomicUsize::new(0);
    let work = || loop {
        let i = next.fetch_add(1, Ordering::Relaxed);
        let Some(s) = frontier.get(i) else { break };
        let mut local = Acc::default();
        local.best = seed.clone();
        dfs(rules, s.clone(), target, mode, &mut local, budget);
        *results[i].lock().expect("unpoisoned") = Some(local);
    };
    if shards == 1 {
        work();
    } else {
        std::thread::scope(|scope| {
            for _ in 0..shards {
                scope.spawn(work);
            }
        });
    }
    for r in results {
        if let Some(local) = r.into_inner().expect("unpoisoned") {
            acc.merge(local, mode);
        }
    }
    if budget.exceeded() {
        None
    } else {
        Some(acc)
    }
}

pub(crate) struct Found {
    pub weight: u32,
    pub best: State,
    /// Every solution of that weight in canonical order; filled in `All` mode.
    pub all: Vec<State>,
}

pub(crate) enum Outcome {
    Found(Found),
    /// No solution up to and including `max_weight`.
    Infeasible,
    /// Every weight below `lower` was refuted before the budget ran out.
    Budget { lower: u32 },
}

/// Tries `t = lower, lower+1, …, max_weight` and stops at the first feasible `t`.
pub(crate) fn minimize<R: Rules>(
    rules: &R,
    root: &State,
    lower: u32,
    max_weight: u32,
    mode: Mode,
    shards: usize,
    budget: &Budget,
) -> Outcome {
    for t in lower..=max_weight {
        let Some(mut acc) = search_target(rules, root, t, mode, shards, budget) else {
            return Outcome::Budget { lower: t };
        };
        if !acc.found() {
            continue;
        }
        return Outcome::Found(match mode {
            Mode::Best => Found { weight: t, best: acc.best.expect("found").1, all: Vec::new() },
            Mode::All => {
                acc.all.sort_by_cached_key(State::key);
                let best = acc.all[0].clone();
                Found { weight: t, best, all: acc.all }
            }
        });
    }
    Outcome::Infeasible
}

/// Some solution of weight at most `bound`, with no optimality proof.
/// `Err(())` if the budget ran out first.
pub(crate) fn first_within<R: Rules>(rules: &R, root: &State, bound: u32, budget: &Budget) -> Result<Option<State>, ()> {
    let mut acc = Acc { first: true, ..Acc::default() };
    dfs(rules, root.clone(), bound, Mode::Best, &mut acc, budget);
    match acc.best {
        Some((_, s)) => Ok(Some(s)),
        None if budget.exceeded() => Err(()),
        None => Ok(None),
    }
}
