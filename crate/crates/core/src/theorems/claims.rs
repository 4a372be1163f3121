//! The claim registry. Each claim is a statement over solver outputs with
//! hypotheses that are themselves decided by the solvers, plus a sweep of
//! desk-scale instances.

use std::time::Instant;

use serde::Serialize;
use serde_json::{json, Value};

use super::formulas::Formula;
use super::paths::{find_p3_sets, find_p4_sets, reduce_p4};
use super::structure::{hamiltonian_cycle, is_planar, leaves, strong_support_vertices, support_vertices};
use crate::error::{Error, Result};
use crate::generators::{generate, random_connected, FamilySpec};
use crate::graph::{Graph, VertexSet};
use crate::products::{corona, lexicographic, ProductGraph};
use crate::solvers::{
    enumerate_optimal, enumerate_optimal_wrdf_product, satisfies_property_p, solve, solve_product,
    witness_within_product, Certificate, Invariant, LegionFunction, SolveResult, SolverConfig,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ClaimKind {
    Formula,
    Inequality,
    Equivalence,
    Existence,
    /// Holds for every optimal function; checked by enumerating all of them.
    Universal,
    Reduction,
    /// A search for examples; `holds` marks an instance with the property.
    Exploratory,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Holds,
    Violated,
    Inapplicable,
    BudgetExceeded,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Holds => "holds",
            Verdict::Violated => "violated",
            Verdict::Inapplicable => "inapplicable",
            Verdict::BudgetExceeded => "budget-exceeded",
        }
    }
}

/// A graph with a display label and, for named families, its spec.
#[derive(Debug, Clone)]
pub struct Named {
    pub label: String,
    pub graph: Graph,
    pub spec: Option<FamilySpec>,
}

impl Named {
    pub fn family(spec: FamilySpec) -> Result<Self> {
        Ok(Named { label: spec.to_string(), graph: generate(&spec)?, spec: Some(spec) })
    }

    pub fn custom(label: impl Into<String>, graph: Graph) -> Self {
        Named { label: label.into(), graph, spec: None }
    }
}

fn fam(spec: FamilySpec) -> Named {
    Named::family(spec).expect("valid built-in family")
}

/// An outer graph, an optional second factor, and an optional vertex tuple
/// (the `P_4` set for reductions).
#[derive(Debug, Clone)]
pub struct Instance {
    pub g: Named,
    pub h: Option<Named>,
    pub set: Option<Vec<usize>>,
}

impl Instance {
    pub fn single(g: Named) -> Self {
        Instance { g, h: None, set: None }
    }

    pub fn pair(g: Named, h: Named) -> Self {
        Instance { g, h: Some(h), set: None }
    }

    pub fn label(&self) -> String {
        let mut s = format!("G={}", self.g.label);
        if let Some(h) = &self.h {
            s += &format!(" H={}", h.label);
        }
        if let Some(set) = &self.set {
            s += &format!(" S={set:?}");
        }
        s
    }

    fn h(&self) -> Result<&Graph> {
        self.h.as_ref().map(|h| &h.graph).ok_or_else(|| Error::Undefined("this claim needs a second graph H".into()))
    }

    /// Order of the largest graph the check searches.
    fn order(&self) -> usize {
        self.g.graph.n() * self.h.as_ref().map_or(1, |h| h.graph.n() + 1)
    }
}

#[derive(Debug, Clone, Serialize)]
struct GraphJson {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl From<&Graph> for GraphJson {
    fn from(g: &Graph) -> Self {
        GraphJson { n: g.n(), edges: g.edges().collect() }
    }
}

/// One claim checked on one instance.
#[derive(Debug, Clone, Serialize)]
pub struct ClaimReport {
    pub schema: &'static str,
    pub claim: String,
    pub kind: ClaimKind,
    pub instance: String,
    graphs: Value,
    pub verdict: Verdict,
    pub lhs: Option<u32>,
    pub relation: Option<&'static str>,
    pub rhs: Option<u32>,
    pub detail: String,
    pub witness: Option<Value>,
    pub millis: u64,
}

impl ClaimReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Rel {
    Le,
    Ge,
    Eq,
}

impl Rel {
    fn symbol(self) -> &'static str {
        match self {
            Rel::Le => "<=",
            Rel::Ge => ">=",
            Rel::Eq => "=",
        }
    }

    fn test(self, a: u32, b: u32) -> bool {
        match self {
            Rel::Le => a <= b,
            Rel::Ge => a >= b,
            Rel::Eq => a == b,
        }
    }
}

struct Outcome {
    verdict: Verdict,
    lhs: Option<u32>,
    relation: Option<&'static str>,
    rhs: Option<u32>,
    detail: String,
    witness: Option<Value>,
}

impl Outcome {
    fn skip(why: impl Into<String>) -> Self {
        Outcome { verdict: Verdict::Inapplicable, lhs: None, relation: None, rhs: None, detail: why.into(), witness: None }
    }

    fn flag(ok: bool, detail: impl Into<String>) -> Self {
        let verdict = if ok { Verdict::Holds } else { Verdict::Violated };
        Outcome { verdict, lhs: None, relation: None, rhs: None, detail: detail.into(), witness: None }
    }

    fn compare(lhs: u32, rel: Rel, rhs: u32) -> Self {
        Outcome { lhs: Some(lhs), relation: Some(rel.symbol()), rhs: Some(rhs), ..Self::flag(rel.test(lhs, rhs), "") }
    }

    fn detail(mut self, d: impl Into<String>) -> Self {
        self.detail = d.into();
        self
    }

    fn witness(mut self, w: Value) -> Self {
        self.witness = Some(w);
        self
    }

    fn cert(self, r: &SolveResult) -> Self {
        self.witness(r.certificate.to_json())
    }

    /// Exploratory claims mark matches as `holds` and the rest inapplicable.
    fn found(yes: bool, detail: String) -> Self {
        if yes {
            Self::flag(true, detail)
        } else {
            Self::skip(format!("no: {detail}"))
        }
    }
}

struct Ctx {
    cfg: SolverConfig,
}

/// Products up to this order get an exact value in upper-bound checks;
/// larger ones get a witness of weight at most the bound.
const EXACT_ORDER: usize = 36;

impl Ctx {
    fn solve(&self, inv: Invariant, g: &Graph) -> Result<SolveResult> {
        solve(inv, g, &self.cfg)
    }

    fn val(&self, inv: Invariant, g: &Graph) -> Result<u32> {
        self.solve(inv, g).map(|r| r.value)
    }

    fn lex(&self, i: &Instance) -> Result<ProductGraph> {
        lexicographic(&i.g.graph, i.h()?)
    }

    fn solve_lex(&self, inv: Invariant, p: &ProductGraph) -> Result<SolveResult> {
        solve_product(inv, p, &self.cfg)
    }

    fn wr_lex(&self, i: &Instance) -> Result<SolveResult> {
        self.solve_lex(Invariant::WeakRoman, &self.lex(i)?)
    }

    /// `inv(p) ≤ bound`: exactly for small products, else by a witness.
    fn at_most(&self, inv: Invariant, p: &ProductGraph, bound: u32) -> Result<Outcome> {
        if p.graph().n() <= EXACT_ORDER {
            let r = self.solve_lex(inv, p)?;
            return Ok(Outcome::compare(r.value, Rel::Le, bound).cert(&r));
        }
        Ok(match witness_within_product(inv, p, bound, &self.cfg)? {
            Some(c) => Outcome::compare(c.value(), Rel::Le, bound)
                .detail(format!("witness of weight {} (exact value not computed)", c.value()))
                .witness(c.to_json()),
            None => Outcome {
                rhs: Some(bound),
                relation: Some(Rel::Le.symbol()),
                ..Outcome::flag(false, format!("no {inv} certificate of weight <= {bound} exists"))
            },
        })
    }

    fn upper(&self, i: &Instance, bound: u32) -> Result<Outcome> {
        self.at_most(Invariant::WeakRoman, &self.lex(i)?, bound)
    }

    fn h_gamma_at_least(&self, i: &Instance, k: u32) -> Result<Option<Outcome>> {
        let g = self.val(Invariant::Gamma, i.h()?)?;
        Ok((g < k).then(|| Outcome::skip(format!("needs γ(H) >= {k}, got {g}"))))
    }

    fn h_noncomplete(&self, i: &Instance) -> Result<Option<Outcome>> {
        Ok(i.h()?.is_complete().then(|| Outcome::skip("needs H noncomplete")))
    }
}

/// A registered statement.
pub struct Claim {
    pub id: &'static str,
    pub kind: ClaimKind,
    /// The statement in symbols, hypotheses first.
    pub statement: &'static str,
    /// Run with every optional lower bound off, because the solver's bounds
    /// depend on this statement.
    pub plain: bool,
    /// Largest searched order the sweep includes.
    pub max_order: usize,
    check: fn(&Ctx, &Instance) -> Result<Outcome>,
    sweep: fn(usize) -> Vec<Instance>,
}

impl Claim {
    /// Instances for a sweep with outer graphs of order at most `max_n`.
    pub fn sweep(&self, max_n: usize) -> Vec<Instance> {
        (self.sweep)(max_n).into_iter().filter(|i| i.order() <= self.max_order).collect()
    }

    fn config(&self, cfg: &SolverConfig) -> SolverConfig {
        if self.plain {
            SolverConfig { domination_chain: false, product_lower: false, copy_lemma: false, ..cfg.clone() }
        } else {
            cfg.clone()
        }
    }
}

// ---- corpora ----

fn randoms(max_n: usize) -> Vec<Named> {
    let mut out = Vec::new();
    for n in 4..=max_n {
        for (p, seed) in [(0.3, 1u64), (0.5, 2), (0.7, 3)] {
            let g = random_connected(n, p, seed).expect("valid parameters");
            out.push(Named::custom(format!("random({n},{p},{seed})"), g));
        }
    }
    out
}

/// Named graphs of order at most `max_n`.
fn named(max_n: usize) -> Vec<Named> {
    use FamilySpec::*;
    let mut specs = Vec::new();
    specs.extend((2..=max_n).map(Path));
    specs.extend((3..=max_n).map(Cycle));
    specs.extend((1..=max_n.min(5)).map(Complete));
    specs.extend((3..max_n).map(Star));
    specs.extend([CompleteBipartite(2, 3), CompleteBipartite(3, 3), CompleteBipartite(2, 4), CocktailParty(3)]);
    specs.extend((4..=max_n).filter(|n| n % 3 != 0).map(Comb));
    specs.extend([Grs(1, 1), Grs(2, 1), Grs(2, 2), Grs(4, 4)]);
    specs.extend([Hk(vec![1, 1, 1]), Hk(vec![1, 1, 1, 1]), Hk(vec![2, 2, 2, 2]), Hk(vec![3, 2, 3, 2])]);
    specs.extend([Fig1Tree, Fig2Planar, Fig4TwoCycles, Fig6Spider]);
    specs.into_iter().map(fam).filter(|g| g.graph.n() <= max_n).collect()
}

fn corpus(max_n: usize) -> Vec<Named> {
    let mut v = named(max_n);
    v.extend(randoms(max_n));
    v
}

fn disconnected(max_n: usize) -> Vec<Named> {
    use FamilySpec::*;
    let pairs = [(Path(2), Path(3)), (Cycle(4), Complete(1)), (Path(3), Complete(3)), (Star(3), Cycle(5)), (Path(4), Path(4))];
    pairs
        .into_iter()
        .map(|(a, b)| {
            let (a, b) = (fam(a), fam(b));
            Named::custom(format!("{} ∪ {}", a.label, b.label), a.graph.disjoint_union(&b.graph))
        })
        .filter(|g| g.graph.n() <= max_n)
        .collect()
}

fn singles(gs: Vec<Named>) -> Vec<Instance> {
    gs.into_iter().map(Instance::single).collect()
}

fn pairs(gs: Vec<Named>, hs: &[Named]) -> Vec<Instance> {
    gs.into_iter().flat_map(|g| hs.iter().map(move |h| Instance::pair(g.clone(), h.clone()))).collect()
}

fn p4_corona_k1() -> Named {
    let p4 = generate(&FamilySpec::Path(4)).expect("valid");
    Named::custom("P_4⊙K_1", corona(&p4, &Graph::empty(1)).expect("nonempty").into_graph())
}

/// Second factors with `γ ≥ 4`.
fn h_gamma4() -> Vec<Named> {
    vec![fam(FamilySpec::Empty(4)), p4_corona_k1(), fam(FamilySpec::Path(10))]
}

fn h_gamma3() -> Vec<Named> {
    vec![fam(FamilySpec::Empty(3)), fam(FamilySpec::Path(7)), fam(FamilySpec::Empty(4))]
}

/// Second factors with `γ_r = 2`.
fn h_wr2() -> Vec<Named> {
    use FamilySpec::*;
    vec![fam(Path(3)), fam(Cycle(4)), fam(CocktailParty(3)), fam(Star(3))]
}

fn h_noncomplete() -> Vec<Named> {
    use FamilySpec::*;
    vec![fam(Empty(2)), fam(Path(3)), fam(Cycle(4)), fam(Path(4)), fam(Cycle(5)), fam(Empty(4))]
}

fn h_any() -> Vec<Named> {
    use FamilySpec::*;
    let mut v = vec![fam(Complete(1)), fam(Complete(2)), fam(Complete(3))];
    v.extend(h_noncomplete());
    v
}

fn h_connected_gamma4() -> Vec<Named> {
    vec![p4_corona_k1(), fam(FamilySpec::Path(10))]
}

fn outer(max_n: usize) -> Vec<Named> {
    named(max_n.min(8))
}

// ---- structural hypotheses ----

fn is_path(g: &Graph) -> bool {
    g.is_tree() && g.max_degree().unwrap_or(0) <= 2
}

fn is_cycle(g: &Graph) -> bool {
    g.n() >= 3 && g.is_connected() && g.degrees().iter().all(|&d| d == 2)
}

/// The instance's spec, if it is a family member reproducing the graph.
fn member<'a>(g: &'a Named, family: &str) -> Option<&'a FamilySpec> {
    g.spec.as_ref().filter(|s| s.name() == family && generate(s).is_ok_and(|x| x == g.graph))
}

fn lex_path_value(n: usize) -> Result<u32> {
    Formula::GammaRLexPath.eval(n)
}

// ---- checks ----

fn chain(c: &Ctx, i: &Instance) -> Result<Outcome> {
    let g = &i.g.graph;
    let gm = c.val(Invariant::Gamma, g)?;
    let wr = c.val(Invariant::WeakRoman, g)?;
    let ro = c.val(Invariant::Roman, g)?;
    let mut ok = gm <= wr && wr <= ro && ro <= 2 * gm;
    let mut d = format!("γ={gm} γ_r={wr} γ_R={ro}");
    if !g.has_isolated_vertex() {
        let gt = c.val(Invariant::GammaT, g)?;
        ok &= gm <= gt;
        d += &format!(" γ_t={gt}");
    }
    Ok(Outcome::flag(ok, d))
}

fn secure_bound(c: &Ctx, i: &Instance) -> Result<Outcome> {
    let g = &i.g.graph;
    Ok(Outcome::compare(c.val(Invariant::WeakRoman, g)?, Rel::Le, c.val(Invariant::Secure, g)?))
}

fn complete_iff(c: &Ctx, i: &Instance) -> Result<Outcome> {
    let g = &i.g.graph;
    let r = c.solve(Invariant::WeakRoman, g)?;
    Ok(Outcome::flag((r.value == 1) == g.is_complete(), format!("γ_r={} complete={}", r.value, g.is_complete())).cert(&r))
}

fn wrdn2_iff(c: &Ctx, i: &Instance) -> Result<Outcome> {
    let g = &i.g.graph;
    if g.is_complete() {
        return Ok(Outcome::skip("needs G noncomplete"));
    }
    let wr = c.val(Invariant::WeakRoman, g)?;
    let gm = c.val(Invariant::Gamma, g)?;
    let gs = c.val(Invariant::Secure, g)?;
    Ok(Outcome::flag((wr == 2) == (gm == 1 || gs == 2), format!("γ_r={wr} γ={gm} γ_s={gs}")))
}

fn edge_removal(c: &Ctx, i: &Instance) -> Result<Outcome> {
    let g = &i.g.graph;
    let base = c.val(Invariant::WeakRoman, g)?;
    for (u, v) in g.edges() {
        let sub = c.val(Invariant::WeakRoman, &g.remove_edge(u, v)?)?;
        if sub < base {
            return Ok(Outcome::compare(sub, Rel::Ge, base).detail(format!("removing {u}-{v}")).witness(json!([u, v])));
        }
    }
    Ok(Outcome::flag(true, format!("γ_r={base}, {} spanning subgraphs G-e", g.m())))
}

fn components_additive(c: &Ctx, i: &Instance) -> Result<Outcome> {
    let g = &i.g.graph;
    let mut sum = 0;
    for comp in g.components() {
        sum += c.val(Invariant::WeakRoman, &g.induced(&comp).0)?;
    }
    Ok(Outcome::compare(c.val(Invariant::WeakRoman, g)?, Rel::Eq, sum))
}

fn path_cycle_formula(c: &Ctx, i: &Instance) -> Result<Outcome> {
    let g = &i.g.graph;
    if !(is_path(g) || is_cycle(g)) || g.n() < 4 {
        return Ok(Outcome::skip("needs a path or cycle of order >= 4"));
    }
    let r = c.solve(Invariant::WeakRoman, g)?;
    Ok(Outcome::compare(r.value, Rel::Eq, Formula::GammaRPathCycle.eval(g.n())?).cert(&r))
}

fn hamiltonian_bound(c: &Ctx, i: &Instance) -> Result<Outcome> {
    let g = &i.g.graph;
    if g.n() < 4 {
        return Ok(Outcome::skip("needs order >= 4"));
    }
    let Some(cycle) = hamiltonian_cycle(g) else { return Ok(Outcome::skip("no Hamiltonian cycle")) };
    let r = c.solve(Invariant::WeakRoman, g)?;
    Ok(Outcome::compare(r.value, Rel::Le, Formula::GammaRPathCycle.eval(g.n())?)
        .witness(json!({"cycle": cycle, "certificate": r.certificate.to_json()})))
}

fn weak_roman_via_roman(c: &Ctx, i: &Instance) -> Result<Outcome> {
    let g = &i.g.graph;
    let gm = c.val(Invariant::Gamma, g)?;
    let wr = c.val(Invariant::WeakRoman, g)?;
    let ro = c.val(Invariant::Roman, g)?;
    Ok(Outcome::flag((wr == 2 * gm) == (wr == ro && ro == 2 * gm), format!("γ={gm} γ_r={wr} γ_R={ro}")))
}

fn lex_connected(c: &Ctx, i: &Instance) -> Result<Outcome> {
    let p = c.lex(i)?;
    let (a, b) = (p.graph().is_connected(), i.g.graph.is_connected());
    Ok(Outcome::flag(a == b, format!("G∘H connected={a}, G connected={b}")))
}

fn lex_components_additive(c: &Ctx, i: &Instance) -> Result<Outcome> {
    let g = &i.g.graph;
    let h = i.h()?;
    let mut sum = 0;
    for comp in g.components() {
        sum += c.solve_lex(Invariant::WeakRoman, &lexicographic(&g.induced(&comp).0, h)?)?.value;
    }
    Ok(Outcome::compare(c.wr_lex(i)?.value, Rel::Eq, sum))
}

fn lex_spanning_monotone(c: &Ctx, i: &Instance) -> Result<Outcome> {
    let g = &i.g.graph;
    let h = i.h()?;
    if !g.is_connected() || g.m() == 0 {
        return Ok(Outcome::skip("needs G connected with an edge"));
    }
    let kn = generate(&FamilySpec::Complete(g.n()))?;
    let low = c.solve_lex(Invariant::WeakRoman, &lexicographic(&kn, h)?)?.value;
    let mid = c.wr_lex(i)?.value;
    let (u, v) = g.edges().next().expect("has an edge");
    let high = c.solve_lex(Invariant::WeakRoman, &lexicographic(&g.remove_edge(u, v)?, h)?)?.value;
    Ok(Outcome::flag(low <= mid && mid <= high, format!("K_n∘H: {low}, G∘H: {mid}, (G-{u}{v})∘H: {high}")))
}

fn lex_upper_2gt(c: &Ctx, i: &Instance) -> Result<Outcome> {
    if i.g.graph.has_isolated_vertex() {
        return Ok(Outcome::skip("needs G without isolated vertices"));
    }
    c.upper(i, 2 * c.val(Invariant::GammaT, &i.g.graph)?)
}

fn lex_upper_maxdeg4(c: &Ctx, i: &Instance) -> Result<Outcome> {
    let g = &i.g.graph;
    if g.has_isolated_vertex() || g.max_degree().unwrap_or(0) + 2 < g.n() {
        return Ok(Outcome::skip("needs no isolated vertex and Δ >= n-2"));
    }
    c.upper(i, 4)
}

fn lex_upper_diam2(c: &Ctx, i: &Instance) -> Result<Outcome> {
    let g = &i.g.graph;
    if g.diameter() != Some(2) {
        return Ok(Outcome::skip("needs diameter 2"));
    }
    c.upper(i, 2 * (g.min_degree().unwrap_or(0) as u32 + 1))
}

fn lex_upper_two_thirds(c: &Ctx, i: &Instance) -> Result<Outcome> {
    let g = &i.g.graph;
    if !g.is_connected() || g.n() < 3 {
        return Ok(Outcome::skip("needs G connected of order >= 3"));
    }
    c.upper(i, Formula::TwoThirdsBound.eval(g.n())?)
}

fn lex_upper_tree_ns(c: &Ctx, i: &Instance) -> Result<Outcome> {
    let g = &i.g.graph;
    if !g.is_tree() || g.n() < 3 {
        return Ok(Outcome::skip("needs a tree of order >= 3"));
    }
    c.upper(i, (g.n() + support_vertices(g).len()) as u32)
}

fn lex_upper_planar6(c: &Ctx, i: &Instance) -> Result<Outcome> {
    let g = &i.g.graph;
    if g.diameter() != Some(2) || !is_planar(g) {
        return Ok(Outcome::skip("needs a planar graph of diameter 2"));
    }
    c.upper(i, 6)
}

fn lex_upper_4gamma(c: &Ctx, i: &Instance) -> Result<Outcome> {
    if let Some(o) = c.h_noncomplete(i)? {
        return Ok(o);
    }
    if i.g.graph.has_isolated_vertex() {
        return Ok(Outcome::skip("needs G without isolated vertices"));
    }
    c.upper(i, 4 * c.val(Invariant::Gamma, &i.g.graph)?)
}

fn lex_upper_gamma_gammar(c: &Ctx, i: &Instance) -> Result<Outcome> {
    if let Some(o) = c.h_noncomplete(i)? {
        return Ok(o);
    }
    c.upper(i, c.val(Invariant::Gamma, &i.g.graph)? * c.val(Invariant::WeakRoman, i.h()?)?)
}

fn lex_upper_g2t(c: &Ctx, i: &Instance) -> Result<Outcome> {
    let g = &i.g.graph;
    if g.min_degree().unwrap_or(0) < 2 {
        return Ok(Outcome::skip("needs δ(G) >= 2"));
    }
    let g2t = c.val(Invariant::Gamma2T, g)?;
    let wr = c.val(Invariant::WeakRoman, g)?;
    let p = c.lex(i)?;
    let two = c.at_most(Invariant::Gamma2T, &p, g2t)?;
    let three = c.at_most(Invariant::WeakRoman, &p, g2t)?;
    let show = |o: &Outcome| o.lhs.map_or("none".to_string(), |x| x.to_string());
    let ok = wr <= g2t && two.verdict == Verdict::Holds && three.verdict == Verdict::Holds;
    Ok(Outcome::flag(ok, format!("γ_2t(G)={g2t}; (i) γ_r(G)={wr}; (ii) γ_2t(G∘H)<={}; (iii) γ_r(G∘H)<={}", show(&two), show(&three))))
}

fn lex_upper_n_mindeg2(c: &Ctx, i: &Instance) -> Result<Outcome> {
    let g = &i.g.graph;
    if g.min_degree().unwrap_or(0) < 2 {
        return Ok(Outcome::skip("needs δ(G) >= 2"));
    }
    c.upper(i, g.n() as u32)
}

fn copy_lemma(c: &Ctx, i: &Instance) -> Result<Outcome> {
    if let Some(o) = c.h_noncomplete(i)? {
        return Ok(o);
    }
    let p = c.lex(i)?;
    let all = enumerate_optimal_wrdf_product(&p, &c.cfg)?;
    let mut least = u32::MAX;
    for f in &all {
        for u in 0..p.n_outer() {
            let w = p.closed_copy_weight(f, u)?;
            if w < 2 {
                return Ok(Outcome::compare(w, Rel::Ge, 2)
                    .detail(format!("f[H_{u}] = {w} for an optimal function of weight {}", f.weight()))
                    .witness(function_json(f)));
            }
            least = least.min(w);
        }
    }
    Ok(Outcome::compare(least, Rel::Ge, 2).detail(format!("min f[H_u] over {} optimal functions", all.len())))
}

fn function_json(f: &LegionFunction) -> Value {
    json!({"V1": f.v1().to_vec(), "V2": f.v2().to_vec()})
}

fn lex_lower_max(c: &Ctx, i: &Instance) -> Result<Outcome> {
    let g = &i.g.graph;
    if let Some(o) = c.h_noncomplete(i)? {
        return Ok(o);
    }
    if g.has_isolated_vertex() {
        return Ok(Outcome::skip("needs δ(G) >= 1"));
    }
    let wr = c.val(Invariant::WeakRoman, g)?;
    let gt = c.val(Invariant::GammaT, g)?;
    let rho = c.val(Invariant::Rho, g)?;
    let r = c.wr_lex(i)?;
    Ok(Outcome::compare(r.value, Rel::Ge, wr.max(gt).max(2 * rho))
        .detail(format!("γ_r(G)={wr} γ_t(G)={gt} 2ρ(G)={}", 2 * rho))
        .cert(&r))
}

fn tree_lower_2gamma(c: &Ctx, i: &Instance) -> Result<Outcome> {
    if let Some(o) = c.h_noncomplete(i)? {
        return Ok(o);
    }
    if !i.g.graph.is_tree() {
        return Ok(Outcome::skip("needs a tree"));
    }
    let r = c.wr_lex(i)?;
    Ok(Outcome::compare(r.value, Rel::Ge, 2 * c.val(Invariant::Gamma, &i.g.graph)?).cert(&r))
}

fn lex_complete_second(c: &Ctx, i: &Instance) -> Result<Outcome> {
    if !i.h()?.is_complete() {
        return Ok(Outcome::skip("needs H complete"));
    }
    let r = c.wr_lex(i)?;
    Ok(Outcome::compare(r.value, Rel::Eq, c.val(Invariant::WeakRoman, &i.g.graph)?).cert(&r))
}

fn eq_2gt(c: &Ctx, i: &Instance) -> Result<Outcome> {
    let g = &i.g.graph;
    if let Some(o) = c.h_noncomplete(i)? {
        return Ok(o);
    }
    if g.has_isolated_vertex() {
        return Ok(Outcome::skip("γ_t(G) undefined"));
    }
    let gt = c.val(Invariant::GammaT, g)?;
    let m = c.val(Invariant::WeakRoman, g)?.max(2 * c.val(Invariant::Rho, g)?);
    if 2 * gt != m {
        return Ok(Outcome::skip(format!("needs 2γ_t(G) = max{{γ_r(G), 2ρ(G)}}; got {} vs {m}", 2 * gt)));
    }
    let r = c.wr_lex(i)?;
    Ok(Outcome::compare(r.value, Rel::Eq, 2 * gt).cert(&r))
}

fn corona_eq(c: &Ctx, i: &Instance) -> Result<Outcome> {
    let (g1, g2) = (&i.g.graph, i.h()?);
    if g1.has_isolated_vertex() {
        return Ok(Outcome::skip("needs G without isolated vertices"));
    }
    if g2.is_complete() {
        return Ok(Outcome::skip("needs H noncomplete"));
    }
    let p = corona(g1, g2)?;
    let r = c.solve(Invariant::WeakRoman, p.graph())?;
    let gt = c.val(Invariant::GammaT, p.graph())?;
    let rho = c.val(Invariant::Rho, p.graph())?;
    Ok(Outcome::flag(r.value == 2 * gt && r.value == 2 * rho, format!("γ_r={} 2γ_t={} 2ρ={}", r.value, 2 * gt, 2 * rho))
        .cert(&r))
}

fn weakroman_eq_2gamma(c: &Ctx, i: &Instance) -> Result<Outcome> {
    let g = &i.g.graph;
    let gm = c.val(Invariant::Gamma, g)?;
    if c.val(Invariant::WeakRoman, g)? != 2 * gm {
        return Ok(Outcome::skip("G is not a weak Roman graph"));
    }
    let hr = c.val(Invariant::WeakRoman, i.h()?)?;
    if hr != 2 {
        return Ok(Outcome::skip(format!("needs γ_r(H) = 2, got {hr}")));
    }
    let r = c.wr_lex(i)?;
    Ok(Outcome::compare(r.value, Rel::Eq, 2 * gm).cert(&r))
}

/// The unique minimum dominating set, if there is exactly one.
fn unique_gamma_set(c: &Ctx, g: &Graph) -> Result<Option<VertexSet>> {
    let all = enumerate_optimal(Invariant::Gamma, g, &c.cfg)?;
    Ok(match all.as_slice() {
        [Certificate::Set(s)] => Some(s.clone()),
        _ => None,
    })
}

fn strongsupport_tree(c: &Ctx, i: &Instance) -> Result<Outcome> {
    let g = &i.g.graph;
    if !g.is_tree() {
        return Ok(Outcome::skip("needs a tree"));
    }
    let Some(s) = unique_gamma_set(c, g)? else { return Ok(Outcome::skip("γ-set not unique")) };
    if !s.is_subset(&strong_support_vertices(g)) {
        return Ok(Outcome::skip("γ-set has a vertex that is not a strong support vertex"));
    }
    let hr = c.val(Invariant::WeakRoman, i.h()?)?;
    if hr != 2 {
        return Ok(Outcome::skip(format!("needs γ_r(H) = 2, got {hr}")));
    }
    let r = c.wr_lex(i)?;
    Ok(Outcome::compare(r.value, Rel::Eq, 2 * s.len() as u32).cert(&r))
}

fn star_leaf_4gamma(c: &Ctx, i: &Instance) -> Result<Outcome> {
    let g = &i.g.graph;
    if g.has_isolated_vertex() {
        return Ok(Outcome::skip("γ_t(G) undefined"));
    }
    let gm = c.val(Invariant::Gamma, g)?;
    if c.val(Invariant::GammaT, g)? != 2 * gm {
        return Ok(Outcome::skip("needs γ_t(G) = 2γ(G)"));
    }
    let l = leaves(g);
    let sets = enumerate_optimal(Invariant::Gamma, g, &c.cfg)?;
    let good = sets.iter().filter_map(Certificate::set).find(|d| d.iter().all(|v| g.neighbors(v).intersects(&l)));
    let Some(d) = good else { return Ok(Outcome::skip("no γ-set with every vertex next to a leaf")) };
    if let Some(o) = c.h_gamma_at_least(i, 4)? {
        return Ok(o);
    }
    let r = c.wr_lex(i)?;
    Ok(Outcome::compare(r.value, Rel::Eq, 4 * gm).detail(format!("γ-set {:?}", d.to_vec())).cert(&r))
}

fn tree_support_4gamma(c: &Ctx, i: &Instance) -> Result<Outcome> {
    let g = &i.g.graph;
    if !g.is_tree() {
        return Ok(Outcome::skip("needs a tree"));
    }
    let s = support_vertices(g);
    if !g.is_2packing(&s) || s.len() as u32 != c.val(Invariant::Rho, g)? {
        return Ok(Outcome::skip("support vertices are not a maximum 2-packing"));
    }
    if let Some(o) = c.h_gamma_at_least(i, 4)? {
        return Ok(o);
    }
    let r = c.wr_lex(i)?;
    Ok(Outcome::compare(r.value, Rel::Eq, 4 * c.val(Invariant::Gamma, g)?).cert(&r))
}

fn eq_g2t(c: &Ctx, i: &Instance) -> Result<Outcome> {
    let g = &i.g.graph;
    if let Some(o) = c.h_noncomplete(i)? {
        return Ok(o);
    }
    if g.min_degree().unwrap_or(0) < 2 {
        return Ok(Outcome::skip("γ_2t(G) needs δ(G) >= 2"));
    }
    let g2t = c.val(Invariant::Gamma2T, g)?;
    let m = c.val(Invariant::WeakRoman, g)?.max(2 * c.val(Invariant::Rho, g)?);
    if g2t != m {
        return Ok(Outcome::skip(format!("needs γ_2t(G) = max{{γ_r(G), 2ρ(G)}}; got {g2t} vs {m}")));
    }
    let r = c.wr_lex(i)?;
    Ok(Outcome::compare(r.value, Rel::Eq, g2t).cert(&r))
}

fn kn_lex(c: &Ctx, i: &Instance) -> Result<Outcome> {
    let g = &i.g.graph;
    let h = i.h()?;
    if !g.is_complete() || g.n() < 3 {
        return Ok(Outcome::skip("needs G = K_n with n >= 3"));
    }
    if let Some(o) = c.h_noncomplete(i)? {
        return Ok(o);
    }
    let hr = c.val(Invariant::WeakRoman, h)?;
    let mut p_vertex = None;
    for a in 0..h.n() {
        if satisfies_property_p(h, a)? {
            p_vertex = Some(a);
            break;
        }
    }
    let r = c.wr_lex(i)?;
    let ok = (2..=3).contains(&r.value) && (r.value == 2) == (hr == 2 || p_vertex.is_some());
    Ok(Outcome::flag(ok, format!("γ_r(K_n∘H)={} γ_r(H)={hr} property-P vertex={p_vertex:?}", r.value)).cert(&r))
}

fn star_lex(c: &Ctx, i: &Instance) -> Result<Outcome> {
    let g = &i.g.graph;
    let n = g.n();
    if n < 4 || !g.is_tree() || g.max_degree() != Some(n - 1) {
        return Ok(Outcome::skip("needs G = K_{1,n} with n >= 3"));
    }
    let h = i.h()?;
    let hr = c.val(Invariant::WeakRoman, h)?;
    let hg = c.val(Invariant::Gamma, h)?;
    let r = c.wr_lex(i)?;
    let v = r.value;
    let mut parts = Vec::new();
    let mut ok = true;
    if (2..=3).contains(&hr) {
        ok &= v == hr;
        parts.push(format!("(i) {v} = γ_r(H) = {hr}"));
    }
    if hr >= 4 {
        ok &= (3..=4).contains(&v);
        parts.push(format!("(ii) 3 <= {v} <= 4"));
    }
    if hg >= 4 {
        ok &= v == 4;
        parts.push(format!("(iii) {v} = 4"));
    }
    if parts.is_empty() {
        return Ok(Outcome::skip(format!("no clause applies: γ_r(H)={hr}")));
    }
    Ok(Outcome::flag(ok, parts.join("; ")).cert(&r))
}

fn p3_lemma(c: &Ctx, i: &Instance) -> Result<Outcome> {
    let g = &i.g.graph;
    let sets = find_p3_sets(g);
    if sets.is_empty() {
        return Ok(Outcome::skip("no P3 set"));
    }
    if let Some(o) = c.h_gamma_at_least(i, 4)? {
        return Ok(o);
    }
    let p = c.lex(i)?;
    let all = enumerate_optimal_wrdf_product(&p, &c.cfg)?;
    for s in &sets {
        let mut exists = false;
        for f in &all {
            let w: Vec<u32> = s.iter().map(|&x| p.copy_weight(f, x)).collect::<Result<_>>()?;
            let sum: u32 = w.iter().sum();
            if sum != 4 {
                return Ok(Outcome::compare(sum, Rel::Eq, 4)
                    .detail(format!("P3 set {s:?}, copy weights {w:?}"))
                    .witness(function_json(f)));
            }
            exists |= w[1] == 2 && w[2] == 0;
        }
        if !exists {
            return Ok(Outcome::flag(false, format!("P3 set {s:?}: no optimal function with f(H2)=2, f(H3)=0")));
        }
    }
    Ok(Outcome::flag(true, format!("{} P3 sets, {} optimal functions", sets.len(), all.len())))
}

fn comb_formula(c: &Ctx, i: &Instance) -> Result<Outcome> {
    let Some(FamilySpec::Comb(n)) = member(&i.g, "comb") else { return Ok(Outcome::skip("G is not a comb")) };
    if let Some(o) = c.h_gamma_at_least(i, 4)? {
        return Ok(o);
    }
    let r = c.wr_lex(i)?;
    Ok(Outcome::compare(r.value, Rel::Eq, Formula::GammaRLexComb.eval(*n)?).cert(&r))
}

fn p4_reduction(c: &Ctx, i: &Instance) -> Result<Outcome> {
    let g = &i.g.graph;
    let s = match &i.set {
        Some(s) => <[usize; 4]>::try_from(s.as_slice()).map_err(|_| Error::NotP4Set(s.clone()))?,
        None => match find_p4_sets(g).first() {
            Some(&s) => s,
            None => return Ok(Outcome::skip("no P4 set")),
        },
    };
    if let Some(o) = c.h_gamma_at_least(i, 4)? {
        return Ok(o);
    }
    // x1 has a neighbour outside S, so G* is never empty
    let red = reduce_p4(g, s)?;
    let left = c.wr_lex(i)?;
    let right = c.solve_lex(Invariant::WeakRoman, &lexicographic(&red.graph, i.h()?)?)?;
    let note = if red.is_degenerate() { "degenerate reduction" } else { "clean reduction" };
    Ok(Outcome::compare(left.value, Rel::Eq, right.value + 4)
        .detail(format!("S={s:?}; G* has n={} m={}; {note}", red.graph.n(), red.graph.m()))
        .witness(json!({
            "reduced": GraphJson::from(&red.graph),
            "kept": red.kept,
            "degenerate": red.degenerate,
            "G": left.certificate.to_json(),
            "G*": right.certificate.to_json(),
        })))
}

fn cycle_lex(c: &Ctx, i: &Instance) -> Result<Outcome> {
    let g = &i.g.graph;
    if !is_cycle(g) {
        return Ok(Outcome::skip("needs a cycle"));
    }
    if let Some(o) = c.h_gamma_at_least(i, 4)? {
        return Ok(o);
    }
    let r = c.wr_lex(i)?;
    Ok(Outcome::compare(r.value, Rel::Eq, g.n() as u32).cert(&r))
}

fn path_lex(c: &Ctx, i: &Instance) -> Result<Outcome> {
    let g = &i.g.graph;
    if !is_path(g) || g.n() < 2 {
        return Ok(Outcome::skip("needs a path of order >= 2"));
    }
    if let Some(o) = c.h_gamma_at_least(i, 4)? {
        return Ok(o);
    }
    let r = c.wr_lex(i)?;
    Ok(Outcome::compare(r.value, Rel::Eq, lex_path_value(g.n())?).cert(&r))
}

fn twoouterweights(c: &Ctx, i: &Instance) -> Result<Outcome> {
    let (g, h) = (&i.g.graph, i.h()?);
    if g.n() < 2 || h.n() < 2 || !g.is_connected() || !h.is_connected() {
        return Ok(Outcome::skip("needs G and H nontrivial and connected"));
    }
    if let Some(o) = c.h_gamma_at_least(i, 4)? {
        return Ok(o);
    }
    let p = c.lex(i)?;
    let all = enumerate_optimal_wrdf_product(&p, &c.cfg)?;
    for f in &all {
        let ok = (0..g.n()).map(|u| p.open_copy_weight(f, u)).collect::<Result<Vec<_>>>()?.iter().all(|&w| w >= 2);
        if ok {
            return Ok(Outcome::flag(true, format!("found among {} optimal functions", all.len())).witness(function_json(f)));
        }
    }
    Ok(Outcome::flag(false, format!("none of {} optimal functions qualifies", all.len())))
}

fn grs_value(c: &Ctx, i: &Instance) -> Result<Outcome> {
    if member(&i.g, "grs").is_none() {
        return Ok(Outcome::skip("G is not a G_{r,s}"));
    }
    if let Some(o) = c.h_gamma_at_least(i, 3)? {
        return Ok(o);
    }
    let g2t = c.val(Invariant::Gamma2T, &i.g.graph)?;
    let r = c.wr_lex(i)?;
    Ok(Outcome::flag(r.value == 5 && g2t == 5, format!("γ_r(G∘H)={} γ_2t(G)={g2t}", r.value)).cert(&r))
}

fn hk_k(g: &Named) -> Option<u32> {
    match member(g, "hk") {
        Some(FamilySpec::Hk(s)) => Some(s.len() as u32),
        _ => None,
    }
}

fn hk_base(c: &Ctx, i: &Instance) -> Result<Outcome> {
    let Some(k) = hk_k(&i.g) else { return Ok(Outcome::skip("G is not in H_k")) };
    let r = c.solve(Invariant::WeakRoman, &i.g.graph)?;
    let g2t = c.val(Invariant::Gamma2T, &i.g.graph)?;
    Ok(Outcome::flag(r.value == k && g2t == k, format!("k={k} γ_r={} γ_2t={g2t}", r.value)).cert(&r))
}

fn hk_value(c: &Ctx, i: &Instance) -> Result<Outcome> {
    let Some(k) = hk_k(&i.g) else { return Ok(Outcome::skip("G is not in H_k")) };
    let r = c.wr_lex(i)?;
    let d = format!("k={k}, H complete={}", i.h()?.is_complete());
    Ok(Outcome::compare(r.value, Rel::Eq, k).detail(d).cert(&r))
}

fn probe_2gamma(c: &Ctx, i: &Instance) -> Result<Outcome> {
    let g = &i.g.graph;
    let (wr, gm) = (c.val(Invariant::WeakRoman, g)?, c.val(Invariant::Gamma, g)?);
    Ok(Outcome::found(wr == 2 * gm, format!("γ_r={wr} 2γ={}", 2 * gm)))
}

fn probe_2gamma_t(c: &Ctx, i: &Instance) -> Result<Outcome> {
    let g = &i.g.graph;
    if g.has_isolated_vertex() {
        return Ok(Outcome::skip("γ_t undefined"));
    }
    let (wr, gt) = (c.val(Invariant::WeakRoman, g)?, c.val(Invariant::GammaT, g)?);
    Ok(Outcome::found(wr == 2 * gt, format!("γ_r={wr} 2γ_t={}", 2 * gt)))
}

fn probe_gt_rho(c: &Ctx, i: &Instance) -> Result<Outcome> {
    let g = &i.g.graph;
    if g.has_isolated_vertex() {
        return Ok(Outcome::skip("γ_t undefined"));
    }
    let (gt, rho) = (c.val(Invariant::GammaT, g)?, c.val(Invariant::Rho, g)?);
    Ok(Outcome::found(gt == rho, format!("γ_t={gt} ρ={rho}")))
}

fn probe_g2t(c: &Ctx, i: &Instance) -> Result<Outcome> {
    let g = &i.g.graph;
    if g.min_degree().unwrap_or(0) < 2 {
        return Ok(Outcome::skip("γ_2t needs δ >= 2"));
    }
    let (wr, g2t) = (c.val(Invariant::WeakRoman, g)?, c.val(Invariant::Gamma2T, g)?);
    Ok(Outcome::found(wr == g2t, format!("γ_r={wr} γ_2t={g2t}")))
}

fn probe_g2t_2rho(c: &Ctx, i: &Instance) -> Result<Outcome> {
    let g = &i.g.graph;
    if g.min_degree().unwrap_or(0) < 2 {
        return Ok(Outcome::skip("γ_2t needs δ >= 2"));
    }
    let (g2t, rho) = (c.val(Invariant::Gamma2T, g)?, c.val(Invariant::Rho, g)?);
    Ok(Outcome::found(g2t == 2 * rho, format!("γ_2t={g2t} 2ρ={}", 2 * rho)))
}

// ---- sweeps ----

fn sw_corpus(max_n: usize) -> Vec<Instance> {
    singles(corpus(max_n))
}

fn sw_components(max_n: usize) -> Vec<Instance> {
    let mut v = disconnected(max_n.max(10));
    v.extend(named(max_n));
    singles(v)
}

fn sw_paths_cycles(max_n: usize) -> Vec<Instance> {
    let n = max_n.max(4);
    singles((4..=n).flat_map(|n| [fam(FamilySpec::Path(n)), fam(FamilySpec::Cycle(n))]).collect())
}

fn sw_outer_any(max_n: usize) -> Vec<Instance> {
    pairs(outer(max_n), &h_any())
}

fn sw_outer_noncomplete(max_n: usize) -> Vec<Instance> {
    pairs(outer(max_n), &h_noncomplete())
}

fn sw_lex_components(max_n: usize) -> Vec<Instance> {
    pairs(disconnected(max_n.max(8)), &h_noncomplete()[..3])
}

fn sw_outer_small_noncomplete(max_n: usize) -> Vec<Instance> {
    pairs(outer(max_n.min(6)), &h_noncomplete()[..4])
}

fn sw_complete_second(max_n: usize) -> Vec<Instance> {
    use FamilySpec::*;
    pairs(outer(max_n), &[fam(Complete(1)), fam(Complete(2)), fam(Complete(3))])
}

fn sw_corona(max_n: usize) -> Vec<Instance> {
    use FamilySpec::*;
    pairs(outer(max_n.min(5)), &[fam(Empty(2)), fam(Path(3)), fam(Empty(3)), fam(Cycle(4))])
}

fn sw_outer_wr2(max_n: usize) -> Vec<Instance> {
    pairs(outer(max_n), &h_wr2())
}

fn sw_trees_wr2(max_n: usize) -> Vec<Instance> {
    let trees = named(max_n.max(15)).into_iter().filter(|g| g.graph.is_tree()).collect();
    pairs(trees, &h_wr2())
}

fn sw_outer_gamma4(max_n: usize) -> Vec<Instance> {
    pairs(outer(max_n), &h_gamma4())
}

fn sw_complete(max_n: usize) -> Vec<Instance> {
    use FamilySpec::*;
    let hs = [Empty(2), Path(3), Path(4), Cycle(4), Cycle(5), Cycle(7), Empty(4), Path(10)].map(fam);
    pairs((3..=max_n.clamp(3, 5)).map(|n| fam(Complete(n))).collect(), &hs)
}

fn sw_stars(max_n: usize) -> Vec<Instance> {
    use FamilySpec::*;
    let hs = [Path(3), Cycle(4), Path(4), Cycle(7), Path(7), Empty(4), Path(10)].map(fam);
    pairs((3..=max_n.clamp(3, 5)).map(|n| fam(Star(n))).collect(), &hs)
}

fn sw_p3(max_n: usize) -> Vec<Instance> {
    let gs = named(max_n).into_iter().filter(|g| !find_p3_sets(&g.graph).is_empty()).collect();
    pairs(gs, &[fam(FamilySpec::Empty(4))])
}

fn sw_combs(max_n: usize) -> Vec<Instance> {
    pairs((4..=max_n.max(4)).map(|n| fam(FamilySpec::Comb(n))).collect(), &h_gamma4())
}

fn sw_p4(max_n: usize) -> Vec<Instance> {
    let gs = named(max_n).into_iter().filter(|g| !find_p4_sets(&g.graph).is_empty()).collect();
    pairs(gs, &h_gamma4())
}

fn sw_cycles_gamma4(max_n: usize) -> Vec<Instance> {
    pairs((3..=max_n.max(3)).map(|n| fam(FamilySpec::Cycle(n))).collect(), &h_gamma4())
}

fn sw_paths_gamma4(max_n: usize) -> Vec<Instance> {
    pairs((2..=max_n.max(2)).map(|n| fam(FamilySpec::Path(n))).collect(), &h_gamma4())
}

fn sw_twoouter(max_n: usize) -> Vec<Instance> {
    let gs = outer(max_n.min(4)).into_iter().filter(|g| g.graph.n() >= 2 && g.graph.is_connected()).collect();
    pairs(gs, &h_connected_gamma4())
}

fn sw_grs(_: usize) -> Vec<Instance> {
    use FamilySpec::*;
    pairs([Grs(1, 1), Grs(2, 1), Grs(2, 2), Grs(4, 4)].map(fam).to_vec(), &h_gamma3())
}

fn sw_hk_base(_: usize) -> Vec<Instance> {
    singles(hk_specs().into_iter().map(fam).collect())
}

fn hk_specs() -> Vec<FamilySpec> {
    use FamilySpec::Hk;
    vec![
        Hk(vec![1, 1, 1]),
        Hk(vec![2, 2, 2]),
        Hk(vec![1, 1, 1, 1]),
        Hk(vec![1, 2, 1, 2]),
        Hk(vec![2, 2, 2, 2]),
        Hk(vec![3, 2, 3, 2]),
        Hk(vec![1, 1, 1, 1, 1]),
        Hk(vec![2, 2, 2, 2, 2]),
    ]
}

fn sw_hk(_: usize) -> Vec<Instance> {
    use FamilySpec::*;
    pairs(hk_specs().into_iter().map(fam).collect(), &[fam(Complete(1)), fam(Complete(2)), fam(Empty(2)), fam(Path(3))])
}

macro_rules! claim {
    ($id:literal, $kind:ident, $plain:literal, $cap:literal, $stmt:literal, $check:ident, $sweep:ident) => {
        Claim {
            id: $id,
            kind: ClaimKind::$kind,
            statement: $stmt,
            plain: $plain,
            max_order: $cap,
            check: $check,
            sweep: $sweep,
        }
    };
}

static CLAIMS: &[Claim] = &[
    claim!("chain", Inequality, true, 12, "γ ≤ γ_r ≤ γ_R ≤ 2γ; γ ≤ γ_t without isolated vertices", chain, sw_corpus),
    claim!("secure_bound", Inequality, false, 12, "γ_r ≤ γ_s", secure_bound, sw_corpus),
    claim!("complete_iff", Equivalence, true, 12, "γ_r(G) = 1 ⇔ G complete", complete_iff, sw_corpus),
    claim!("wrdn2_iff", Equivalence, true, 12, "G noncomplete: γ_r(G) = 2 ⇔ γ(G) = 1 or γ_s(G) = 2", wrdn2_iff, sw_corpus),
    claim!("edge_removal", Inequality, false, 10, "γ_r(G − e) ≥ γ_r(G)", edge_removal, sw_corpus),
    claim!("components_additive", Formula, false, 14, "γ_r(G) = Σ γ_r(G_i) over components", components_additive, sw_components),
    claim!("path_cycle_formula", Formula, false, 64, "n ≥ 4: γ_r(P_n) = γ_r(C_n) = ⌈3n/7⌉", path_cycle_formula, sw_paths_cycles),
    claim!("hamiltonian_bound", Inequality, false, 12, "G Hamiltonian, n ≥ 4: γ_r(G) ≤ ⌈3n/7⌉", hamiltonian_bound, sw_corpus),
    claim!("weak_roman_via_roman", Equivalence, false, 12, "γ_r = 2γ ⇔ γ_r = γ_R = 2γ", weak_roman_via_roman, sw_corpus),
    claim!("lex_connected", Equivalence, false, 200, "G∘H connected ⇔ G connected", lex_connected, sw_outer_any),
    claim!("lex_components_additive", Formula, false, 40, "γ_r(G∘H) = Σ γ_r(G_i∘H) over components", lex_components_additive, sw_lex_components),
    claim!("lex_spanning_monotone", Inequality, false, 24, "G connected, G_1 spanning: γ_r(K_n∘H) ≤ γ_r(G∘H) ≤ γ_r(G_1∘H)", lex_spanning_monotone, sw_outer_small_noncomplete),
    claim!("lex_upper_2gt", Inequality, false, 60, "δ(G) ≥ 1: γ_r(G∘H) ≤ 2γ_t(G)", lex_upper_2gt, sw_outer_any),
    claim!("lex_upper_maxdeg4", Inequality, false, 60, "δ(G) ≥ 1, Δ(G) ≥ n − 2: γ_r(G∘H) ≤ 4", lex_upper_maxdeg4, sw_outer_any),
    claim!("lex_upper_diam2", Inequality, false, 60, "diam(G) = 2: γ_r(G∘H) ≤ 2(δ(G) + 1)", lex_upper_diam2, sw_outer_any),
    claim!("lex_upper_two_thirds", Inequality, false, 60, "G connected, n ≥ 3: γ_r(G∘H) ≤ 2⌊2n/3⌋", lex_upper_two_thirds, sw_outer_any),
    claim!("lex_upper_tree_ns", Inequality, false, 60, "T tree, n ≥ 3, s support vertices: γ_r(T∘H) ≤ n + s", lex_upper_tree_ns, sw_outer_any),
    claim!("lex_upper_planar6", Inequality, false, 60, "G planar, diam(G) = 2: γ_r(G∘H) ≤ 6", lex_upper_planar6, sw_outer_any),
    claim!("lex_upper_4gamma", Inequality, false, 60, "δ(G) ≥ 1, H noncomplete: γ_r(G∘H) ≤ 4γ(G)", lex_upper_4gamma, sw_outer_noncomplete),
    claim!("lex_upper_gamma_gammar", Inequality, false, 60, "H noncomplete: γ_r(G∘H) ≤ γ(G)γ_r(H)", lex_upper_gamma_gammar, sw_outer_noncomplete),
    claim!("lex_upper_g2t", Inequality, false, 60, "δ(G) ≥ 2: γ_r(G) ≤ γ_2t(G), γ_2t(G∘H) ≤ γ_2t(G), γ_r(G∘H) ≤ γ_2t(G)", lex_upper_g2t, sw_outer_any),
    claim!("lex_upper_n_mindeg2", Inequality, false, 60, "δ(G) ≥ 2: γ_r(G∘H) ≤ n", lex_upper_n_mindeg2, sw_outer_any),
    claim!("copy_lemma", Universal, true, 28, "H noncomplete, f any γ_r(G∘H)-function: f[H_u] ≥ 2 for all u", copy_lemma, sw_outer_small_noncomplete),
    claim!("lex_lower_max", Inequality, true, 28, "δ(G) ≥ 1, H noncomplete: γ_r(G∘H) ≥ max{γ_r(G), γ_t(G), 2ρ(G)}", lex_lower_max, sw_outer_noncomplete),
    claim!("tree_lower_2gamma", Inequality, true, 28, "T tree, H noncomplete: γ_r(T∘H) ≥ 2γ(T)", tree_lower_2gamma, sw_outer_noncomplete),
    claim!("lex_complete_second", Formula, false, 60, "γ_r(G∘K_m) = γ_r(G)", lex_complete_second, sw_complete_second),
    claim!("eq_2gt", Formula, false, 60, "2γ_t(G) = max{γ_r(G), 2ρ(G)}, H noncomplete: γ_r(G∘H) = 2γ_t(G)", eq_2gt, sw_outer_noncomplete),
    claim!("corona_eq", Formula, false, 30, "δ(G_1) ≥ 1, G_2 noncomplete: γ_r(G_1⊙G_2) = 2γ_t(G_1⊙G_2) = 2ρ(G_1⊙G_2)", corona_eq, sw_corona),
    claim!("weakroman_eq_2gamma", Formula, false, 60, "γ_r(G) = 2γ(G), γ_r(H) = 2: γ_r(G∘H) = 2γ(G)", weakroman_eq_2gamma, sw_outer_wr2),
    claim!("strongsupport_tree", Formula, false, 100, "T tree with a unique γ-set of strong support vertices, γ_r(H) = 2: γ_r(T∘H) = 2γ(T)", strongsupport_tree, sw_trees_wr2),
    claim!("star_leaf_4gamma", Formula, false, 60, "γ_t(G) = 2γ(G), a γ-set all next to leaves, γ(H) ≥ 4: γ_r(G∘H) = 4γ(G)", star_leaf_4gamma, sw_outer_gamma4),
    claim!("tree_support_4gamma", Formula, false, 60, "T tree whose support vertices form a ρ-set, γ(H) ≥ 4: γ_r(T∘H) = 4γ(T)", tree_support_4gamma, sw_outer_gamma4),
    claim!("eq_g2t", Formula, false, 60, "γ_2t(G) = max{γ_r(G), 2ρ(G)}, H noncomplete: γ_r(G∘H) = γ_2t(G)", eq_g2t, sw_outer_noncomplete),
    claim!("kn_lex", Equivalence, false, 60, "n ≥ 3, H noncomplete: 2 ≤ γ_r(K_n∘H) ≤ 3, = 2 ⇔ γ_r(H) = 2 or H has a property-P vertex", kn_lex, sw_complete),
    claim!("star_lex", Formula, false, 70, "n ≥ 3: γ_r(K_{1,n}∘H) = γ_r(H) if γ_r(H) ∈ {2,3}; ∈ [3,4] if γ_r(H) ≥ 4; = 4 if γ(H) ≥ 4", star_lex, sw_stars),
    claim!("p3_lemma", Universal, true, 24, "{x1,x2,x3} a P3 set, γ(H) ≥ 4: every γ_r(G∘H)-function has f(H_1)+f(H_2)+f(H_3) = 4, and one has f(H_2) = 2, f(H_3) = 0", p3_lemma, sw_p3),
    claim!("comb_formula", Formula, false, 40, "n ≥ 4, γ(H) ≥ 4: γ_r(T_n∘H) = 2⌊2n/3⌋", comb_formula, sw_combs),
    claim!("p4_reduction", Reduction, false, 40, "S a P4 set, γ(H) ≥ 4: γ_r(G∘H) = γ_r(G*∘H) + 4", p4_reduction, sw_p4),
    claim!("cycle_lex", Formula, false, 40, "n ≥ 3, γ(H) ≥ 4: γ_r(C_n∘H) = n", cycle_lex, sw_cycles_gamma4),
    claim!("path_lex", Formula, false, 40, "n ≥ 2, γ(H) ≥ 4: γ_r(P_n∘H) = n, n+2, n+1 for n ≡ 0, 2, odd (mod 4)", path_lex, sw_paths_gamma4),
    claim!("twoouterweights", Existence, true, 24, "G, H nontrivial connected, γ(H) ≥ 4: some γ_r(G∘H)-function has Σ_{u'∈N(u)} f(H_u') ≥ 2 for all u", twoouterweights, sw_twoouter),
    claim!("grs_value", Formula, false, 40, "γ(H) ≥ 3: γ_r(G_{r,s}∘H) = 5 = γ_2t(G_{r,s})", grs_value, sw_grs),
    claim!("hk_base", Formula, false, 20, "G ∈ H_k: γ_r(G) = γ_2t(G) = k", hk_base, sw_hk_base),
    claim!("hk_value", Formula, false, 60, "G ∈ H_k: γ_r(G∘H) = k", hk_value, sw_hk),
    claim!("probe_2gamma", Exploratory, false, 12, "search: γ_r(G) = 2γ(G)", probe_2gamma, sw_corpus),
    claim!("probe_2gamma_t", Exploratory, false, 12, "search: γ_r(G) = 2γ_t(G)", probe_2gamma_t, sw_corpus),
    claim!("probe_gt_rho", Exploratory, false, 12, "search: γ_t(G) = ρ(G)", probe_gt_rho, sw_corpus),
    claim!("probe_g2t", Exploratory, false, 12, "search: γ_r(G) = γ_2t(G)", probe_g2t, sw_corpus),
    claim!("probe_g2t_2rho", Exploratory, false, 12, "search: γ_2t(G) = 2ρ(G)", probe_g2t_2rho, sw_corpus),
];

/// Every registered claim.
pub fn registry() -> &'static [Claim] {
    CLAIMS
}

pub fn find_claim(id: &str) -> Result<&'static Claim> {
    CLAIMS.iter().find(|c| c.id == id).ok_or_else(|| Error::UnknownClaim(id.to_string()))
}

/// Checks claim `id` on one instance. Running out of budget is a verdict,
/// not an error.
pub fn verify_claim(id: &str, inst: &Instance, cfg: &SolverConfig) -> Result<ClaimReport> {
    let claim = find_claim(id)?;
    cfg.validate()?;
    let ctx = Ctx { cfg: claim.config(cfg) };
    let start = Instant::now();
    let out = match (claim.check)(&ctx, inst) {
        Ok(o) => o,
        Err(Error::BudgetExceeded { lower, upper }) => Outcome {
            verdict: Verdict::BudgetExceeded,
            ..Outcome::skip(format!("budget exceeded; value in [{lower}, {upper}]"))
        },
        Err(e) => return Err(e),
    };
    let millis = if cfg.record_time { start.elapsed().as_millis() as u64 } else { 0 };
    let mut graphs = json!({"G": GraphJson::from(&inst.g.graph)});
    if let Some(h) = &inst.h {
        graphs["H"] = json!(GraphJson::from(&h.graph));
    }
    if let Some(s) = &inst.set {
        graphs["S"] = json!(s);
    }
    Ok(ClaimReport {
        schema: "1",
        claim: claim.id.to_string(),
        kind: claim.kind,
        instance: inst.label(),
        graphs,
        verdict: out.verdict,
        lhs: out.lhs,
        relation: out.relation,
        rhs: out.rhs,
        detail: out.detail,
        witness: out.witness,
        millis,
    })
}

/// Verdict counts for one claim over its sweep.
#[derive(Debug, Clone, Default, Serialize)]
pub struct Tally {
    pub instances: usize,
    pub holds: usize,
    pub violated: usize,
    pub inapplicable: usize,
    pub budget_exceeded: usize,
}

impl Tally {
    pub fn add(&mut self, v: Verdict) {
        self.instances += 1;
        match v {
            Verdict::Holds => self.holds += 1,
            Verdict::Violated => self.violated += 1,
            Verdict::Inapplicable => self.inapplicable += 1,
            Verdict::BudgetExceeded => self.budget_exceeded += 1,
        }
    }
}

/// Runs the sweep of one claim.
pub fn sweep_claim(id: &str, max_n: usize, cfg: &SolverConfig) -> Result<Vec<ClaimReport>> {
    let claim = find_claim(id)?;
    claim.sweep(max_n).iter().map(|i| verify_claim(id, i, cfg)).collect()
}

/// Markdown table of per-claim verdict counts.
pub fn summary_table(rows: &[(&Claim, Tally)]) -> String {
    let mut s = String::from("| claim | kind | instances | holds | violated | inapplicable | budget-exceeded |\n");
    s += "|---|---|---|---|---|---|---|\n";
    for (c, t) in rows {
        let kind = serde_json::to_value(c.kind).expect("serializable");
        s += &format!(
            "| {} | {} | {} | {} | {} | {} | {} |\n",
            c.id,
            kind.as_str().unwrap_or_default(),
            t.instances,
            t.holds,
            t.violated,
            t.inapplicable,
            t.budget_exceeded
        );
    }
    s
}
