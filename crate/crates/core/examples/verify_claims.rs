//! Check registered claims on single instances and over a small sweep.

use weak_roman::generators::FamilySpec;
use weak_roman::solvers::SolverConfig;
use weak_roman::theorems::{registry, summary_table, verify_claim, Instance, Named, Tally};

fn main() {
    let cfg = SolverConfig { record_time: false, ..SolverConfig::default() };
    let named = |s| Named::family(s).unwrap();

    let cases = [
        ("star_lex", Instance::pair(named(FamilySpec::Star(3)), named(FamilySpec::Path(10)))),
        ("kn_lex", Instance::pair(named(FamilySpec::Complete(3)), named(FamilySpec::Cycle(7)))),
        ("lex_upper_planar6", Instance::pair(named(FamilySpec::Fig2Planar), named(FamilySpec::Path(4)))),
        ("hk_base", Instance::single(named(FamilySpec::Hk(vec![1, 1, 1, 1])))),
    ];
    for (id, inst) in &cases {
        let r = verify_claim(id, inst, &cfg).unwrap();
        println!("{:<18} {:<32} {:<10} {}", id, r.instance, r.verdict.as_str(), r.detail);
    }

    // a cheap sweep over the graph-level claims
    let mut rows = Vec::new();
    for c in registry().iter().filter(|c| !c.id.starts_with("lex") && c.max_order <= 14) {
        let mut t = Tally::default();
        for inst in c.sweep(6) {
            t.add(verify_claim(c.id, &inst, &cfg).unwrap().verdict);
        }
        rows.push((c, t));
    }
    print!("\n{}", summary_table(&rows));
}
