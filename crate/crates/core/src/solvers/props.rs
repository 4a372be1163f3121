use super::{value, Invariant, SolverConfig};
use crate::error::Result;
use crate::graph::Graph;

/// `V(H) ∖ N[a]` induces a clique (vacuously so when empty).
pub fn satisfies_property_p(h: &Graph, a: usize) -> Result<bool> {
    h.check_vertex(a)?;
    let rest = h.closed(a).complement();
    Ok(rest.iter().all(|x| rest.difference(h.closed(x)).is_empty()))
}

/// `γ_r(G) = 2γ(G)`.
pub fn is_weak_roman_graph(g: &Graph, cfg: &SolverConfig) -> Result<bool> {
    Ok(value(Invariant::WeakRoman, g, cfg)? == 2 * value(Invariant::Gamma, g, cfg)?)
}

/// `γ_R(G) = 2γ(G)`.
pub fn is_roman_graph(g: &Graph, cfg: &SolverConfig) -> Result<bool> {
    Ok(value(Invariant::Roman, g, cfg)? == 2 * value(Invariant::Gamma, g, cfg)?)
}
