//! Exhaustive reference values: every subset or every function is tested
//! with the raw predicates. Slow on purpose; it shares no code with the
//! search engine.

use super::{Invariant, LegionFunction};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

pub const FUNCTION_ORACLE_LIMIT: usize = 12;
pub const SET_ORACLE_LIMIT: usize = 20;

fn subset(n: usize, mask: u32) -> VertexSet {
    VertexSet::from_iter(n, (0..n).filter(|&i| mask >> i & 1 == 1))
}

fn min_set(g: &Graph, ok: impl Fn(&VertexSet) -> bool) -> u32 {
    let n = g.n();
    let mut best = n as u32;
    for mask in 0u32..1 << n {
        if mask.count_ones() < best && ok(&subset(n, mask)) {
            best = mask.count_ones();
        }
    }
    best
}

fn min_function(g: &Graph, ok: impl Fn(&LegionFunction) -> bool) -> u32 {
    let n = g.n();
    let mut best = u32::MAX;
    let mut vals = vec![0u8; n];
    loop {
        let w: u32 = vals.iter().map(|&x| x as u32).sum();
        if w < best {
            let f = LegionFunction::from_values(vals.clone()).expect("values in range");
            if ok(&f) {
                best = w;
            }
        }
        // base-3 increment
        let mut i = 0;
        while i < n && vals[i] == 2 {
            vals[i] = 0;
            i += 1;
        }
        if i == n {
            return best;
        }
        vals[i] += 1;
    }
}

/// Value of `inv` on `g` by exhaustive scan.
pub fn oracle(inv: Invariant, g: &Graph) -> Result<u32> {
    inv.check_defined(g)?;
    let limit = inv.oracle_limit();
    if g.n() > limit {
        return Err(Error::SizeLimit { n: g.n(), limit });
    }
    Ok(match inv {
        Invariant::Gamma => min_set(g, |s| g.is_dominating(s)),
        Invariant::GammaT => min_set(g, |s| g.is_total_dominating(s).unwrap_or(false)),
        Invariant::Gamma2T => min_set(g, |s| g.is_double_total_dominating(s).unwrap_or(false)),
        Invariant::Secure => min_set(g, |s| g.is_secure_dominating(s)),
        Invariant::Rho => (0u32..1 << g.n())
            .filter(|&m| g.is_2packing(&subset(g.n(), m)))
            .map(u32::count_ones)
            .max()
            .unwrap_or(0),
        Invariant::WeakRoman => min_function(g, |f| f.is_wrdf(g)),
        Invariant::Roman => min_function(g, |f| f.is_rdf(g)),
    })
}
