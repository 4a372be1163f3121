//! Statements about the invariants, and the machinery to check them on
//! concrete graphs.

pub mod claims;
pub mod formulas;
pub mod paths;
pub mod structure;

pub use claims::{
    find_claim, registry, summary_table, sweep_claim, verify_claim, Claim, ClaimKind, ClaimReport, Instance, Named,
    Tally, Verdict,
};
pub use formulas::{closed_formula, Formula};
pub use paths::{find_p3_sets, find_p4_sets, reduce_p4, Degeneracy, Reduction};
pub use structure::{hamiltonian_cycle, is_planar, leaves, strong_support_vertices, support_vertices};
