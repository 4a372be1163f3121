//! All seven invariants of a few small graphs, with their certificates.

use weak_roman::generators::{generate, FamilySpec};
use weak_roman::solvers::{solve, Certificate, Invariant, SolverConfig};

fn main() {
    let cfg = SolverConfig::default();
    for spec in [FamilySpec::Path(7), FamilySpec::Cycle(9), FamilySpec::CompleteBipartite(3, 3), FamilySpec::Fig1Tree] {
        let g = generate(&spec).unwrap();
        println!("{spec}  (n={}, m={})", g.n(), g.m());
        for inv in Invariant::ALL {
            if let Err(e) = inv.check_defined(&g) {
                println!("  {:<9} -  ({e})", inv.id());
                continue;
            }
            let r = solve(inv, &g, &cfg).unwrap();
            let cert = match &r.certificate {
                Certificate::Set(s) => format!("set {:?}", s.to_vec()),
                Certificate::Function(f) => format!("V1 {:?} V2 {:?}", f.v1().to_vec(), f.v2().to_vec()),
            };
            println!("  {:<9} {:>2}  {cert}", inv.id(), r.value);
        }
    }
}
