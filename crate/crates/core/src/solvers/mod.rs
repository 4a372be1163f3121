//! Exact solvers for the seven invariants.
//!
//! Minimisations run the weight-iterative engine: for `t = lb, lb+1, …` the
//! whole search tree of weight `≤ t` is exhausted, and the first feasible `t`
//! is the answer. The certificate is the canonical optimum, i.e. the one
//! whose `(V2, V1)` is lexicographically smallest as ascending index lists.

mod engine;
mod legion;
mod oracle;
mod packing;
mod props;
mod rules;

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::Serialize;

use self::engine::{Budget, Mode, Outcome, State};
use self::rules::{CopyBound, Cover, Prepared, Roman, SetCover, WeakRoman};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::products::{ProductGraph, ProductKind};

pub use legion::LegionFunction;
pub use oracle::{oracle, FUNCTION_ORACLE_LIMIT, SET_ORACLE_LIMIT};
pub use props::{is_roman_graph, is_weak_roman_graph, satisfies_property_p};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Invariant {
    /// γ
    Gamma,
    /// γ_t
    GammaT,
    /// γ_{2,t}
    Gamma2T,
    /// ρ
    Rho,
    /// γ_R
    Roman,
    /// γ_r
    WeakRoman,
    /// γ_s
    Secure,
}

impl Invariant {
    pub const ALL: [Invariant; 7] = [
        Invariant::Gamma,
        Invariant::GammaT,
        Invariant::Gamma2T,
        Invariant::Rho,
        Invariant::Roman,
        Invariant::WeakRoman,
        Invariant::Secure,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Invariant::Gamma => "gamma",
            Invariant::GammaT => "gamma_t",
            Invariant::Gamma2T => "gamma_2t",
            Invariant::Rho => "rho",
            Invariant::Roman => "gamma_R",
            Invariant::WeakRoman => "gamma_r",
            Invariant::Secure => "gamma_s",
        }
    }

    /// Whether certificates are legion functions rather than vertex sets.
    pub fn is_function(self) -> bool {
        matches!(self, Invariant::Roman | Invariant::WeakRoman)
    }

    /// Largest order the exhaustive oracle accepts.
    pub fn oracle_limit(self) -> usize {
        if self.is_function() || self == Invariant::Secure {
            FUNCTION_ORACLE_LIMIT
        } else {
            SET_ORACLE_LIMIT
        }
    }

    /// Errors if the invariant is not defined on `g`.
    pub fn check_defined(self, g: &Graph) -> Result<()> {
        if g.n() == 0 {
            return Err(Error::Undefined("graph has no vertices".into()));
        }
        match self {
            Invariant::GammaT if g.has_isolated_vertex() => Err(Error::TotalDominationUndefined),
            Invariant::Gamma2T if g.min_degree().is_some_and(|d| d < 2) => Err(Error::MinDegreeBelowTwo),
            _ => Ok(()),
        }
    }
}

impl fmt::Display for Invariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Invariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Invariant::ALL.into_iter().find(|i| i.id() == s).ok_or_else(|| Error::UnknownInvariant(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolverConfig {
    /// Stop with a budget error if no solution of at most this weight exists.
    pub max_weight: Option<u32>,
    pub shards: usize,
    /// Search nodes allowed before giving up, across all shards.
    pub node_budget: Option<u64>,
    /// Start `γ_r`, `γ_R` and `γ_s` from `γ`.
    pub domination_chain: bool,
    /// For `G∘H` with `δ(G) ≥ 1` and `H` noncomplete, start weak Roman type
    /// searches from `max{γ_r(G), γ_t(G), 2ρ(G)}`.
    pub product_lower: bool,
    /// For `G∘H`, bound by copy weights: `f[H_u] ≥ 2` per copy when `H` is
    /// noncomplete, and a copy whose open neighbourhood is empty of weight
    /// must dominate itself.
    pub copy_lemma: bool,
    /// Report `millis = 0` so that outputs are byte-identical across runs.
    pub record_time: bool,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            max_weight: None,
            shards: 1,
            node_budget: None,
            domination_chain: true,
            product_lower: true,
            copy_lemma: true,
            record_time: true,
        }
    }
}

impl SolverConfig {
    /// No derived lower bounds; used when checking those bounds themselves.
    pub fn plain() -> Self {
        SolverConfig { domination_chain: false, product_lower: false, copy_lemma: false, ..Self::default() }
    }

    pub fn with_shards(mut self, shards: usize) -> Self {
        self.shards = shards;
        self
    }

    pub fn with_budget(mut self, nodes: u64) -> Self {
        self.node_budget = Some(nodes);
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.shards == 0 {
            return Err(Error::Config("shard count must be at least 1".into()));
        }
        if self.node_budget == Some(0) {
            return Err(Error::Config("node budget must be positive".into()));
        }
        if self.max_weight == Some(0) {
            return Err(Error::Config("max weight must be positive".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    Set(VertexSet),
    Function(LegionFunction),
}

impl Certificate {
    /// Weight of a function, cardinality of a set.
    pub fn value(&self) -> u32 {
        match self {
            Certificate::Set(s) => s.len() as u32,
            Certificate::Function(f) => f.weight(),
        }
    }

    pub fn set(&self) -> Option<&VertexSet> {
        match self {
            Certificate::Set(s) => Some(s),
            Certificate::Function(_) => None,
        }
    }

    pub fn function(&self) -> Option<&LegionFunction> {
        match self {
            Certificate::Function(f) => Some(f),
            Certificate::Set(_) => None,
        }
    }

    /// `{"V1":[..],"V2":[..]}` or `{"set":[..]}`.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self.json()).expect("serializable")
    }

    fn json(&self) -> CertJson {
        match self {
            Certificate::Set(s) => CertJson::Set { set: s.to_vec() },
            Certificate::Function(f) => CertJson::Function { v1: f.v1().to_vec(), v2: f.v2().to_vec() },
        }
    }

    /// Reads the form written by [`Certificate::to_json`] for a graph of order `n`.
    pub fn from_json(v: &serde_json::Value, n: usize) -> Result<Certificate> {
        let list = |key: &str| -> Result<Option<Vec<usize>>> {
            match v.get(key) {
                None => Ok(None),
                Some(x) => serde_json::from_value(x.clone())
                    .map(Some)
                    .map_err(|e| Error::Parse { line: 1, msg: format!("certificate field `{key}`: {e}") }),
            }
        };
        match (list("set")?, list("V1")?, list("V2")?) {
            (Some(s), None, None) => {
                if let Some(&v) = s.iter().find(|&&v| v >= n) {
                    return Err(Error::VertexOutOfRange { v, n });
                }
                Ok(Certificate::Set(VertexSet::from_iter(n, s)))
            }
            (None, v1, v2) if v1.is_some() || v2.is_some() => {
                Ok(Certificate::Function(LegionFunction::from_sets(n, &v1.unwrap_or_default(), &v2.unwrap_or_default())?))
            }
            _ => Err(Error::Parse { line: 1, msg: "certificate needs `set` or `V1`/`V2`".into() }),
        }
    }

    /// Checks the certificate against the raw predicate for `inv`.
    pub fn validates(&self, inv: Invariant, g: &Graph) -> bool {
        match (self, inv) {
            (Certificate::Function(f), _) if f.len() != g.n() => false,
            (Certificate::Set(s), _) if s.universe() != g.n() => false,
            (Certificate::Function(f), Invariant::WeakRoman) => f.is_wrdf(g),
            (Certificate::Function(f), Invariant::Roman) => f.is_rdf(g),
            (Certificate::Set(s), Invariant::Gamma) => g.is_dominating(s),
            (Certificate::Set(s), Invariant::GammaT) => g.is_total_dominating(s).unwrap_or(false),
            (Certificate::Set(s), Invariant::Gamma2T) => g.is_double_total_dominating(s).unwrap_or(false),
            (Certificate::Set(s), Invariant::Rho) => g.is_2packing(s),
            (Certificate::Set(s), Invariant::Secure) => g.is_secure_dominating(s),
            _ => false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    pub invariant: Invariant,
    pub value: u32,
    pub certificate: Certificate,
    pub nodes: u64,
    pub millis: u64,
}

#[derive(Serialize)]
#[serde(untagged)]
enum CertJson {
    Function {
        #[serde(rename = "V1")]
        v1: Vec<usize>,
        #[serde(rename = "V2")]
        v2: Vec<usize>,
    },
    Set {
        set: Vec<usize>,
    },
}

#[derive(Serialize)]
struct ResultJson<'a> {
    schema: &'a str,
    invariant: &'a str,
    value: u32,
    certificate: CertJson,
    nodes: u64,
    millis: u64,
}

impl SolveResult {
    pub fn to_json(&self) -> String {
        let certificate = self.certificate.json();
        let j = ResultJson {
            schema: "1",
            invariant: self.invariant.id(),
            value: self.value,
            certificate,
            nodes: self.nodes,
            millis: self.millis,
        };
        serde_json::to_string(&j).expect("serializable")
    }

    pub fn function(&self) -> Option<&LegionFunction> {
        match &self.certificate {
            Certificate::Function(f) => Some(f),
            Certificate::Set(_) => None,
        }
    }

    pub fn set(&self) -> Option<&VertexSet> {
        match &self.certificate {
            Certificate::Set(s) => Some(s),
            Certificate::Function(_) => None,
        }
    }
}

/// Product structure the bounds may exploit.
struct ProductHint<'a> {
    outer: &'a Graph,
    inner: &'a Graph,
    copies: Vec<VertexSet>,
    inner_complete: bool,
}

impl<'a> ProductHint<'a> {
    fn from(p: &'a ProductGraph) -> Option<Self> {
        (p.kind() == ProductKind::Lex).then(|| ProductHint {
            outer: p.outer(),
            inner: p.inner(),
            copies: p.copies(),
            inner_complete: p.inner().is_complete(),
        })
    }
}

fn greedy_dominating(g: &Graph) -> usize {
    let mut covered = VertexSet::empty(g.n());
    let mut count = 0;
    while covered.len() < g.n() {
        let best = (0..g.n()).max_by_key(|&v| (g.closed(v).difference(&covered).len(), std::cmp::Reverse(v))).expect("n > 0");
        covered.union_with(g.closed(best));
        count += 1;
    }
    count
}

fn upper_estimate(inv: Invariant, g: &Graph) -> u32 {
    let d = greedy_dominating(g) as u32;
    let n = g.n() as u32;
    match inv {
        Invariant::Gamma => d,
        Invariant::WeakRoman | Invariant::Roman => (2 * d).min(n),
        Invariant::GammaT => (2 * d).min(n),
        Invariant::Gamma2T | Invariant::Secure | Invariant::Rho => n,
    }
}

struct Run<'a> {
    cfg: &'a SolverConfig,
    budget: Budget,
}

struct Optimum {
    weight: u32,
    best: State,
    all: Vec<State>,
}

impl Run<'_> {
    fn budget_error(&self, inv: Invariant, g: &Graph, lower: u32) -> Error {
        Error::BudgetExceeded { lower, upper: upper_estimate(inv, g).max(lower) }
    }

    fn base_lower(&self, inv: Invariant, g: &Graph) -> u32 {
        let n = g.n();
        let delta = g.max_degree().unwrap_or(0);
        match inv {
            Invariant::Gamma => (n.div_ceil(delta + 1) as u32).max(1),
            Invariant::GammaT => (n.div_ceil(delta.max(1)) as u32).max(2),
            Invariant::Gamma2T => ((2 * n).div_ceil(delta.max(1)) as u32).max(3),
            Invariant::WeakRoman | Invariant::Secure => {
                if g.is_complete() || !self.cfg.domination_chain {
                    1
                } else {
                    2
                }
            }
            Invariant::Roman => {
                if n == 1 {
                    1
                } else {
                    2
                }
            }
            Invariant::Rho => 0,
        }
    }

    fn lower_bound(&self, inv: Invariant, g: &Graph, hint: Option<&ProductHint>) -> Result<u32> {
        let mut lb = self.base_lower(inv, g);
        let weak_type = matches!(inv, Invariant::WeakRoman | Invariant::Roman | Invariant::Secure);
        if weak_type && self.cfg.domination_chain {
            lb = lb.max(self.optimum(Invariant::Gamma, g, None, Mode::Best)?.weight);
        }
        if let Some(h) = hint {
            if weak_type && self.cfg.product_lower && !h.inner_complete && h.outer.min_degree().is_some_and(|d| d >= 1) {
                let g0 = h.outer;
                lb = lb.max(self.optimum(Invariant::WeakRoman, g0, None, Mode::Best)?.weight);
                lb = lb.max(self.optimum(Invariant::GammaT, g0, None, Mode::Best)?.weight);
                lb = lb.max(2 * self.packing(g0)?.len() as u32);
            }
            if weak_type && self.cfg.copy_lemma {
                let gamma_h = self.optimum(Invariant::Gamma, h.inner, None, Mode::Best)?.weight;
                if let Some(r) = rules::copy_relaxation(h.outer, gamma_h, !h.inner_complete) {
                    lb = lb.max(r);
                }
            }
        }
        Ok(lb)
    }

    fn packing(&self, g: &Graph) -> Result<VertexSet> {
        packing::max_packing(g, &self.budget).ok_or_else(|| self.budget_error(Invariant::Rho, g, 0))
    }

    fn rules<'g>(&self, inv: Invariant, g: &'g Graph, hint: Option<&ProductHint>) -> (AnyRules<'g>, State) {
        let copies = hint
            .filter(|h| self.cfg.copy_lemma && !h.inner_complete)
            .map(|h| CopyBound::new(h.outer.clone(), h.copies.clone()));
        let prep = Prepared::new(g);
        let n = g.n();
        match inv {
            Invariant::WeakRoman => (AnyRules::Weak(WeakRoman { prep, copies }), State::root(n, true)),
            Invariant::Secure => (AnyRules::Weak(WeakRoman { prep, copies }), State::root(n, false)),
            Invariant::Roman => (AnyRules::Roman(Roman { prep, copies }), State::root(n, true)),
            Invariant::Gamma | Invariant::GammaT | Invariant::Gamma2T => {
                let kind = match inv {
                    Invariant::Gamma => Cover::Closed,
                    Invariant::GammaT => Cover::Open,
                    _ => Cover::Double,
                };
                (AnyRules::Cover(SetCover { prep, kind }), State::root(n, false))
            }
            Invariant::Rho => unreachable!("ρ is a maximisation"),
        }
    }

    fn optimum(&self, inv: Invariant, g: &Graph, hint: Option<&ProductHint>, mode: Mode) -> Result<Optimum> {
        inv.check_defined(g)?;
        let lower = self.lower_bound(inv, g, hint)?;
        let cap = self.cfg.max_weight.unwrap_or(u32::MAX).min(2 * g.n() as u32);
        let (rules, root) = self.rules(inv, g, hint);
        let outcome = engine::minimize(&rules, &root, lower, cap, mode, self.cfg.shards, &self.budget);
        match outcome {
            Outcome::Found(f) => Ok(Optimum { weight: f.weight, best: f.best, all: f.all }),
            Outcome::Infeasible => Err(self.budget_error(inv, g, cap.saturating_add(1))),
            Outcome::Budget { lower } => Err(self.budget_error(inv, g, lower)),
        }
    }
}

enum AnyRules<'a> {
    Weak(WeakRoman<'a>),
    Roman(Roman<'a>),
    Cover(SetCover<'a>),
}

impl engine::Rules for AnyRules<'_> {
    fn step(&self, s: &State, target: u32) -> engine::Step {
        match self {
            AnyRules::Weak(r) => r.step(s, target),
            AnyRules::Roman(r) => r.step(s, target),
            AnyRules::Cover(r) => r.step(s, target),
        }
    }
}

fn certificate(inv: Invariant, s: &State) -> Certificate {
    if inv.is_function() {
        Certificate::Function(LegionFunction::from_vertex_sets(&s.v1, &s.v2))
    } else {
        Certificate::Set(s.v1.clone())
    }
}

fn solve_with(inv: Invariant, g: &Graph, hint: Option<&ProductHint>, cfg: &SolverConfig) -> Result<SolveResult> {
    cfg.validate()?;
    inv.check_defined(g)?;
    let start = Instant::now();
    let run = Run { cfg, budget: Budget::new(cfg.node_budget) };
    let (value, certificate) = if inv == Invariant::Rho {
        let s = run.packing(g)?;
        (s.len() as u32, Certificate::Set(s))
    } else {
        let opt = run.optimum(inv, g, hint, Mode::Best)?;
        (opt.weight, certificate(inv, &opt.best))
    };
    let millis = if cfg.record_time { start.elapsed().as_millis() as u64 } else { 0 };
    Ok(SolveResult { invariant: inv, value, certificate, nodes: run.budget.used(), millis })
}

/// Exact value of `inv` on `g` with its canonical certificate.
pub fn solve(inv: Invariant, g: &Graph, cfg: &SolverConfig) -> Result<SolveResult> {
    solve_with(inv, g, None, cfg)
}

/// Like [`solve`], but lets lexicographic products use their structure for
/// pruning. Coronas carry no extra bounds.
pub fn solve_product(inv: Invariant, p: &ProductGraph, cfg: &SolverConfig) -> Result<SolveResult> {
    let hint = ProductHint::from(p);
    solve_with(inv, p.graph(), hint.as_ref(), cfg)
}

fn enumerate_with(inv: Invariant, g: &Graph, hint: Option<&ProductHint>, cfg: &SolverConfig) -> Result<Vec<Certificate>> {
    cfg.validate()?;
    if inv == Invariant::Rho {
        return Err(Error::Undefined("enumeration of maximum 2-packings".into()));
    }
    let run = Run { cfg, budget: Budget::new(cfg.node_budget) };
    let opt = run.optimum(inv, g, hint, Mode::All)?;
    Ok(opt.all.iter().map(|s| certificate(inv, s)).collect())
}

fn functions(certs: Vec<Certificate>) -> Vec<LegionFunction> {
    certs
        .into_iter()
        .map(|c| match c {
            Certificate::Function(f) => f,
            Certificate::Set(_) => unreachable!("function invariant"),
        })
        .collect()
}

/// Every optimal certificate of `inv` (not ρ), each once, in canonical order.
pub fn enumerate_optimal(inv: Invariant, g: &Graph, cfg: &SolverConfig) -> Result<Vec<Certificate>> {
    enumerate_with(inv, g, None, cfg)
}

/// Every weak Roman dominating function of weight `γ_r(g)`, each once, in
/// canonical order.
pub fn enumerate_optimal_wrdf(g: &Graph, cfg: &SolverConfig) -> Result<Vec<LegionFunction>> {
    enumerate_with(Invariant::WeakRoman, g, None, cfg).map(functions)
}

/// [`enumerate_optimal_wrdf`] on a product, using its structure for pruning.
pub fn enumerate_optimal_wrdf_product(p: &ProductGraph, cfg: &SolverConfig) -> Result<Vec<LegionFunction>> {
    let hint = ProductHint::from(p);
    enumerate_with(Invariant::WeakRoman, p.graph(), hint.as_ref(), cfg).map(functions)
}

fn witness_with(inv: Invariant, g: &Graph, hint: Option<&ProductHint>, bound: u32, cfg: &SolverConfig) -> Result<Option<Certificate>> {
    cfg.validate()?;
    inv.check_defined(g)?;
    if inv == Invariant::Rho {
        return Err(Error::Undefined("witness search for a maximisation".into()));
    }
    let run = Run { cfg, budget: Budget::new(cfg.node_budget) };
    let (rules, root) = run.rules(inv, g, hint);
    match engine::first_within(&rules, &root, bound, &run.budget) {
        Ok(s) => Ok(s.map(|s| certificate(inv, &s))),
        Err(()) => Err(Error::BudgetExceeded { lower: Run::base_lower(&run, inv, g), upper: upper_estimate(inv, g) }),
    }
}

/// Some certificate of weight at most `bound`, found without proving
/// optimality; `None` proves the value exceeds `bound`.
pub fn witness_within(inv: Invariant, g: &Graph, bound: u32, cfg: &SolverConfig) -> Result<Option<Certificate>> {
    witness_with(inv, g, None, bound, cfg)
}

/// [`witness_within`] on a product, using its structure for pruning.
pub fn witness_within_product(inv: Invariant, p: &ProductGraph, bound: u32, cfg: &SolverConfig) -> Result<Option<Certificate>> {
    let hint = ProductHint::from(p);
    witness_with(inv, p.graph(), hint.as_ref(), bound, cfg)
}

/// Shorthand for the value alone.
pub fn value(inv: Invariant, g: &Graph, cfg: &SolverConfig) -> Result<u32> {
    solve(inv, g, cfg).map(|r| r.value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{generate, random_connected, FamilySpec};
    use crate::products::{corona, lexicographic};
    use proptest::prelude::*;

    fn fam(spec: FamilySpec) -> Graph {
        generate(&spec).unwrap()
    }

    fn val(inv: Invariant, g: &Graph) -> u32 {
        let r = solve(inv, g, &SolverConfig::default()).unwrap();
        assert!(r.certificate.validates(inv, g), "{inv} certificate {:?}", r.certificate);
        assert_eq!(r.certificate.value(), r.value);
        r.value
    }

    #[test]
    fn fixed_values() {
        use Invariant::*;
        let p7 = fam(FamilySpec::Path(7));
        assert_eq!(val(WeakRoman, &p7), 3);
        assert_eq!(val(GammaT, &p7), 4);
        assert_eq!(val(Rho, &p7), 3);
        assert_eq!(val(Roman, &p7), 5);
        assert_eq!(val(WeakRoman, &fam(FamilySpec::Complete(6))), 1);
        let fig4 = fam(FamilySpec::Fig4TwoCycles);
        assert_eq!(val(WeakRoman, &fig4), 4);
        assert_eq!(val(GammaT, &fig4), 5);
        assert_eq!(val(Gamma2T, &fam(FamilySpec::Grs(4, 4))), 5);
        let k33 = fam(FamilySpec::CompleteBipartite(3, 3));
        assert_eq!(val(WeakRoman, &k33), 3);
        assert_eq!(val(GammaT, &k33), 2);
        assert_eq!(val(Rho, &k33), 1);
        assert_eq!(val(Secure, &fam(FamilySpec::Cycle(5))), 3);
        let t = fam(FamilySpec::Fig1Tree);
        assert_eq!(val(WeakRoman, &t), 3);
        assert_eq!(val(Roman, &t), 4);
        assert_eq!(val(Gamma, &t), 2);
        let hk = fam(FamilySpec::Hk(vec![1, 1, 1, 1]));
        assert_eq!(val(Gamma2T, &hk), 4);
        // three consecutive cycle vertices already form a weak Roman set here
        assert_eq!(val(WeakRoman, &hk), 3);
        assert_eq!(val(WeakRoman, &fam(FamilySpec::Hk(vec![2, 2, 2, 2]))), 4);
    }

    #[test]
    fn undefined_cases() {
        let cfg = SolverConfig::default();
        assert_eq!(solve(Invariant::GammaT, &Graph::empty(2), &cfg), Err(Error::TotalDominationUndefined));
        assert_eq!(solve(Invariant::Gamma2T, &fam(FamilySpec::Path(4)), &cfg), Err(Error::MinDegreeBelowTwo));
        assert!(matches!(solve(Invariant::WeakRoman, &Graph::empty(0), &cfg), Err(Error::Undefined(_))));
        assert!(solve(Invariant::Gamma, &Graph::empty(1), &SolverConfig { shards: 0, ..cfg }).is_err());
    }

    #[test]
    fn canonical_certificate() {
        let r = solve(Invariant::WeakRoman, &fam(FamilySpec::Path(4)), &SolverConfig::default()).unwrap();
        // V2 empty for every optimum of P_4; smallest V1 wins
        assert_eq!(r.to_json().split("\"nodes\"").next().unwrap(), r#"{"schema":"1","invariant":"gamma_r","value":2,"certificate":{"V1":[0,2],"V2":[]},"#);
        let r = solve(Invariant::Gamma, &fam(FamilySpec::Cycle(6)), &SolverConfig::default()).unwrap();
        assert_eq!(r.set().unwrap().to_vec(), vec![0, 3]);
        assert!(r.to_json().contains(r#""certificate":{"set":[0,3]}"#));
    }

    #[test]
    fn budget_reports_interval() {
        let g = fam(FamilySpec::Path(14));
        match solve(Invariant::WeakRoman, &g, &SolverConfig::plain().with_budget(3)) {
            Err(Error::BudgetExceeded { lower, upper }) => {
                assert!(lower <= 6 && 6 <= upper, "[{lower}, {upper}]");
            }
            other => panic!("{other:?}"),
        }
        let cfg = SolverConfig { max_weight: Some(2), ..SolverConfig::default() };
        assert!(matches!(solve(Invariant::WeakRoman, &g, &cfg), Err(Error::BudgetExceeded { lower: 3, .. })));
    }

    #[test]
    fn enumeration_examples() {
        let cfg = SolverConfig::default();
        let k3 = enumerate_optimal_wrdf(&fam(FamilySpec::Complete(3)), &cfg).unwrap();
        assert_eq!(k3.len(), 3);
        assert!(k3.iter().all(|f| f.weight() == 1 && f.v2().is_empty()));
        let t = fam(FamilySpec::Fig1Tree);
        let all = enumerate_optimal_wrdf(&t, &cfg).unwrap();
        assert!(all.contains(&LegionFunction::from_sets(6, &[2], &[0]).unwrap()));
        assert!(all.contains(&LegionFunction::from_sets(6, &[3], &[0]).unwrap()));
        let p4 = fam(FamilySpec::Path(4));
        let all = enumerate_optimal_wrdf(&p4, &cfg).unwrap();
        assert!(all.iter().all(|f| f.v2().is_empty()));
        let mut brute = Vec::new();
        for code in 0..81usize {
            let vals: Vec<u8> = (0..4).map(|i| (code / 3usize.pow(i) % 3) as u8).collect();
            let f = LegionFunction::from_values(vals).unwrap();
            if f.weight() == 2 && f.is_wrdf(&p4) {
                brute.push(f);
            }
        }
        brute.sort_by_key(|f| (f.v2().to_vec(), f.v1().to_vec()));
        assert_eq!(all, brute);
    }

    #[test]
    fn enumerates_optimal_sets() {
        let cfg = SolverConfig::default();
        let sets = |inv, g: &Graph| -> Vec<Vec<usize>> {
            enumerate_optimal(inv, g, &cfg).unwrap().iter().map(|c| c.set().unwrap().to_vec()).collect()
        };
        assert_eq!(sets(Invariant::Gamma, &fam(FamilySpec::Cycle(6))), vec![vec![0, 3], vec![1, 4], vec![2, 5]]);
        assert_eq!(sets(Invariant::Gamma, &fam(FamilySpec::Path(4))).len(), 4);
        assert_eq!(sets(Invariant::GammaT, &fam(FamilySpec::Path(4))), vec![vec![1, 2]]);
        assert!(enumerate_optimal(Invariant::Rho, &fam(FamilySpec::Path(4)), &cfg).is_err());
    }

    #[test]
    fn products_use_their_structure() {
        let p10 = fam(FamilySpec::Path(10));
        let p = lexicographic(&fam(FamilySpec::Path(2)), &p10).unwrap();
        let fast = solve_product(Invariant::WeakRoman, &p, &SolverConfig::default()).unwrap();
        assert_eq!(fast.value, 4);
        let plain = solve(Invariant::WeakRoman, p.graph(), &SolverConfig::plain()).unwrap();
        assert_eq!(plain.certificate, fast.certificate);
        let c = corona(&fam(FamilySpec::Path(2)), &Graph::empty(2)).unwrap();
        assert_eq!(solve_product(Invariant::WeakRoman, &c, &SolverConfig::default()).unwrap().value, 4);
    }

    #[test]
    fn shard_count_does_not_change_output() {
        let g = lexicographic(&fam(FamilySpec::Path(3)), &fam(FamilySpec::Path(4))).unwrap();
        for inv in [Invariant::WeakRoman, Invariant::Roman, Invariant::Gamma] {
            let mut outs = Vec::new();
            for shards in [1, 2, 8] {
                let cfg = SolverConfig { record_time: false, ..SolverConfig::default().with_shards(shards) };
                outs.push(solve_product(inv, &g, &cfg).unwrap().to_json());
            }
            assert_eq!(outs[0], outs[1]);
            assert_eq!(outs[0], outs[2]);
        }
    }

    #[test]
    fn invariant_ids_round_trip() {
        for inv in Invariant::ALL {
            assert_eq!(inv.id().parse::<Invariant>().unwrap(), inv);
        }
        assert!("gamma_x".parse::<Invariant>().is_err());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(60))]

        #[test]
        fn agrees_with_oracle(n in 1usize..=8, p in 0.15f64..0.9, seed in 0u64..10_000) {
            let g = random_connected(n, p, seed).unwrap();
            for inv in Invariant::ALL {
                if inv.check_defined(&g).is_err() {
                    continue;
                }
                let expect = oracle(inv, &g).unwrap();
                for cfg in [SolverConfig::default(), SolverConfig::plain().with_shards(3)] {
                    let r = solve(inv, &g, &cfg).unwrap();
                    prop_assert_eq!(r.value, expect, "{} on {:?}", inv, g);
                    prop_assert!(r.certificate.validates(inv, &g));
                }
            }
        }

        #[test]
        fn enumeration_matches_brute_force(n in 1usize..=6, p in 0.15f64..0.9, seed in 0u64..10_000) {
            let g = random_connected(n, p, seed).unwrap();
            let opt = oracle(Invariant::WeakRoman, &g).unwrap();
            let mut brute = Vec::new();
            for code in 0..3usize.pow(n as u32) {
                let vals: Vec<u8> = (0..n).map(|i| (code / 3usize.pow(i as u32) % 3) as u8).collect();
                let f = LegionFunction::from_values(vals).unwrap();
                if f.weight() == opt && f.is_wrdf(&g) {
                    brute.push(f);
                }
            }
            brute.sort_by_key(|f| (f.v2().to_vec(), f.v1().to_vec()));
            prop_assert_eq!(enumerate_optimal_wrdf(&g, &SolverConfig::default().with_shards(2)).unwrap(), brute);
        }

        #[test]
        fn domination_chain(n in 1usize..=10, p in 0.1f64..0.8, seed in 0u64..10_000) {
            let g = random_connected(n, p, seed).unwrap();
            let cfg = SolverConfig::default();
            let gamma = value(Invariant::Gamma, &g, &cfg).unwrap();
            let wr = value(Invariant::WeakRoman, &g, &cfg).unwrap();
            let roman = value(Invariant::Roman, &g, &cfg).unwrap();
            prop_assert!(gamma <= wr && wr <= roman && roman <= 2 * gamma);
            prop_assert!(wr <= value(Invariant::Secure, &g, &cfg).unwrap());
            if n >= 2 {
                prop_assert!(2 * gamma <= 2 * value(Invariant::GammaT, &g, &cfg).unwrap());
            }
        }
    }
}
