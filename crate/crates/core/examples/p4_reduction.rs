//! Induced-P_4 reductions, including the degenerate ones on short cycles.

use weak_roman::generators::{generate, FamilySpec};
use weak_roman::theorems::{find_p4_sets, reduce_p4, verify_claim, Instance, Named};
use weak_roman::solvers::SolverConfig;

fn main() {
    for spec in [FamilySpec::Path(7), FamilySpec::Cycle(8), FamilySpec::Cycle(6), FamilySpec::Cycle(5)] {
        let g = generate(&spec).unwrap();
        let sets = find_p4_sets(&g);
        let s = sets[0];
        let r = reduce_p4(&g, s).unwrap();
        println!(
            "{spec}: {} P4 sets; reducing {s:?} keeps {:?}, edges {:?}, degenerate {:?}",
            sets.len(),
            r.kept,
            r.graph.edges().collect::<Vec<_>>(),
            r.degenerate
        );
    }

    // the reduction claim, where γ(N_4) = 4 satisfies its hypothesis
    let cfg = SolverConfig { record_time: false, ..SolverConfig::default() };
    for spec in [FamilySpec::Path(7), FamilySpec::Cycle(8), FamilySpec::Cycle(6)] {
        let inst = Instance::pair(Named::family(spec).unwrap(), Named::family(FamilySpec::Empty(4)).unwrap());
        let rep = verify_claim("p4_reduction", &inst, &cfg).unwrap();
        println!("{:<16} {:<10} {:?} {} {:?}: {}", rep.instance, rep.verdict.as_str(), rep.lhs, rep.relation.unwrap_or(""), rep.rhs, rep.detail);
    }
}
