//! Bounded searches: node budgets, and certificates below a weight bound
//! without proving optimality.

use weak_roman::error::Error;
use weak_roman::generators::{generate, FamilySpec};
use weak_roman::products::lexicographic;
use weak_roman::solvers::{solve_product, witness_within_product, Invariant, SolverConfig};

fn main() {
    let g = generate(&FamilySpec::Fig2Planar).unwrap();
    let h = generate(&FamilySpec::Path(4)).unwrap();
    let p = lexicographic(&g, &h).unwrap();
    println!("fig2_planar∘P_4 has {} vertices", p.graph().n());

    let tight = SolverConfig::default().with_budget(2_000);
    match solve_product(Invariant::WeakRoman, &p, &tight) {
        Ok(r) => println!("solved within budget: {}", r.value),
        Err(Error::BudgetExceeded { lower, upper }) => println!("budget exhausted; γ_r in [{lower}, {upper}]"),
        Err(e) => panic!("{e}"),
    }

    let cfg = SolverConfig::default();
    for bound in [6, 4, 3] {
        match witness_within_product(Invariant::WeakRoman, &p, bound, &cfg).unwrap() {
            Some(c) => println!("weight <= {bound}: found one of weight {}", c.value()),
            None => println!("weight <= {bound}: none exists"),
        }
    }
}
