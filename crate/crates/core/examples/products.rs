//! Lexicographic and corona products: index maps, copies, and values.

use weak_roman::generators::{generate, FamilySpec};
use weak_roman::graph::Graph;
use weak_roman::products::{corona, lexicographic};
use weak_roman::solvers::{solve, solve_product, Invariant, SolverConfig};

fn main() {
    let cfg = SolverConfig::default();
    let g = generate(&FamilySpec::Star(3)).unwrap();
    let h = generate(&FamilySpec::Path(10)).unwrap();
    let p = lexicographic(&g, &h).unwrap();
    println!("K_{{1,3}}∘P_10: n={} m={}", p.graph().n(), p.graph().m());
    println!("vertex (2, 7) has index {}; copy H_2 is {:?}", p.index(2, 7).unwrap(), p.copy(2).unwrap().to_vec());

    let r = solve_product(Invariant::WeakRoman, &p, &cfg).unwrap();
    let f = r.function().unwrap();
    println!("γ_r = {} after {} search nodes", r.value, r.nodes);
    for u in 0..g.n() {
        println!("  f(H_{u}) = {}, f[H_{u}] = {}", p.copy_weight(f, u).unwrap(), p.closed_copy_weight(f, u).unwrap());
    }

    // the same graph without the product structure, for comparison
    let plain = solve(Invariant::WeakRoman, p.graph(), &SolverConfig::plain()).unwrap();
    println!("without product bounds: γ_r = {} after {} nodes", plain.value, plain.nodes);

    let c = corona(&generate(&FamilySpec::Path(3)).unwrap(), &Graph::empty(2)).unwrap();
    let v = |inv| solve(inv, c.graph(), &cfg).unwrap().value;
    println!(
        "\nP_3⊙N_2: γ={} γ_t={} ρ={} γ_r={}",
        v(Invariant::Gamma),
        v(Invariant::GammaT),
        v(Invariant::Rho),
        v(Invariant::WeakRoman)
    );
    println!("sidecar: {}", serde_json::to_string(&c.sidecar()).unwrap());
}
