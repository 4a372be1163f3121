//! Every minimum weak Roman dominating function of a small product, and
//! the distribution of copy weights over them.

use std::collections::BTreeMap;

use weak_roman::generators::{generate, FamilySpec};
use weak_roman::products::lexicographic;
use weak_roman::solvers::{enumerate_optimal, enumerate_optimal_wrdf_product, Invariant, SolverConfig};

fn main() {
    let cfg = SolverConfig::default();
    let c6 = generate(&FamilySpec::Cycle(6)).unwrap();
    let sets = enumerate_optimal(Invariant::Gamma, &c6, &cfg).unwrap();
    println!("C_6 has {} minimum dominating sets:", sets.len());
    for s in &sets {
        println!("  {:?}", s.set().unwrap().to_vec());
    }

    let p = lexicographic(&generate(&FamilySpec::Path(2)).unwrap(), &generate(&FamilySpec::Path(10)).unwrap()).unwrap();
    let all = enumerate_optimal_wrdf_product(&p, &cfg).unwrap();
    println!("\nP_2∘P_10: {} optimal functions of weight {}", all.len(), all[0].weight());
    let mut shapes: BTreeMap<Vec<u32>, usize> = BTreeMap::new();
    for f in &all {
        let w = (0..2).map(|u| p.copy_weight(f, u).unwrap()).collect();
        *shapes.entry(w).or_default() += 1;
    }
    for (w, count) in shapes {
        println!("  copy weights {w:?}: {count}");
    }
}
