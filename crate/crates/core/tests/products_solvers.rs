use proptest::prelude::*;
use weak_roman::generators::{generate, random_connected, FamilySpec};
use weak_roman::graph::Graph;
use weak_roman::products::{corona, lexicographic};
use weak_roman::solvers::{
    enumerate_optimal_wrdf, enumerate_optimal_wrdf_product, oracle, solve, solve_product, witness_within_product,
    Invariant, SolverConfig,
};

fn quiet() -> SolverConfig {
    SolverConfig { record_time: false, ..SolverConfig::default() }
}

fn fam(spec: FamilySpec) -> Graph {
    generate(&spec).unwrap()
}

/// A random graph that may be disconnected.
fn loose(n: usize, p: f64, seed: u64, cut: usize) -> Graph {
    let mut g = random_connected(n, p, seed).unwrap();
    for _ in 0..cut {
        let first = g.edges().next();
        if let Some((a, b)) = first {
            g = g.remove_edge(a, b).unwrap();
        }
    }
    g
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn product_solver_matches_oracle(
        ng in 1usize..=4, nh in 1usize..=3, pg in 0.2f64..1.0, ph in 0.05f64..1.0,
        seed in 0u64..5000, cut in 0usize..2,
    ) {
        let g = loose(ng, pg, seed, cut);
        let h = loose(nh, ph, seed + 7, cut);
        let p = lexicographic(&g, &h).unwrap();
        for inv in [Invariant::WeakRoman, Invariant::Roman, Invariant::Secure, Invariant::Gamma] {
            let r = solve_product(inv, &p, &quiet()).unwrap();
            prop_assert_eq!(r.value, oracle(inv, p.graph()).unwrap(), "{} on {:?} ∘ {:?}", inv, g, h);
            prop_assert!(r.certificate.validates(inv, p.graph()));
        }
    }

    #[test]
    fn product_bounds_do_not_change_values(
        ng in 2usize..=4, nh in 2usize..=5, pg in 0.3f64..1.0, ph in 0.05f64..0.8, seed in 0u64..5000,
    ) {
        let g = random_connected(ng, pg, seed).unwrap();
        let h = loose(nh, ph, seed + 3, 1);
        let p = lexicographic(&g, &h).unwrap();
        let plain = solve(Invariant::WeakRoman, p.graph(), &SolverConfig::plain()).unwrap();
        let aware = solve_product(Invariant::WeakRoman, &p, &quiet()).unwrap();
        prop_assert_eq!(aware.value, plain.value);
        // canonical certificates do not depend on the pruning either
        prop_assert_eq!(aware.certificate, plain.certificate);
    }

    #[test]
    fn product_enumeration_matches_plain(
        ng in 1usize..=3, nh in 2usize..=3, pg in 0.3f64..1.0, ph in 0.05f64..0.8, seed in 0u64..5000,
    ) {
        let g = random_connected(ng, pg, seed).unwrap();
        let h = loose(nh, ph, seed + 1, 1);
        let p = lexicographic(&g, &h).unwrap();
        prop_assert_eq!(
            enumerate_optimal_wrdf_product(&p, &quiet()).unwrap(),
            enumerate_optimal_wrdf(p.graph(), &SolverConfig::plain()).unwrap()
        );
    }

    #[test]
    fn witnesses_bracket_the_value(
        ng in 2usize..=4, nh in 2usize..=4, pg in 0.3f64..1.0, ph in 0.05f64..0.8, seed in 0u64..5000,
    ) {
        let g = random_connected(ng, pg, seed).unwrap();
        let h = loose(nh, ph, seed + 5, 1);
        let p = lexicographic(&g, &h).unwrap();
        let v = solve_product(Invariant::WeakRoman, &p, &quiet()).unwrap().value;
        let w = witness_within_product(Invariant::WeakRoman, &p, v, &quiet()).unwrap().unwrap();
        prop_assert!(w.value() <= v && w.validates(Invariant::WeakRoman, p.graph()));
        prop_assert!(witness_within_product(Invariant::WeakRoman, &p, v - 1, &quiet()).unwrap().is_none());
    }

    #[test]
    fn corona_domination_is_outer_order(n1 in 1usize..=4, n2 in 1usize..=3, seed in 0u64..5000) {
        let g1 = random_connected(n1, 0.5, seed).unwrap();
        let g2 = loose(n2, 0.5, seed + 1, 1);
        let p = corona(&g1, &g2).unwrap();
        prop_assert_eq!(solve(Invariant::Gamma, p.graph(), &quiet()).unwrap().value, n1 as u32);
    }
}

#[test]
fn results_do_not_depend_on_shards() {
    let p = lexicographic(&fam(FamilySpec::Path(3)), &fam(FamilySpec::Cycle(5))).unwrap();
    let one = solve_product(Invariant::WeakRoman, &p, &quiet()).unwrap().to_json();
    for shards in [2, 8] {
        let cfg = quiet().with_shards(shards);
        assert_eq!(solve_product(Invariant::WeakRoman, &p, &cfg).unwrap().to_json(), one);
    }
}

#[test]
fn small_products_with_a_long_path() {
    // γ(P_10) = 4, so these follow the path and star formulas
    let h = fam(FamilySpec::Path(10));
    assert_eq!(solve(Invariant::Gamma, &h, &quiet()).unwrap().value, 4);
    for (g, want) in [(FamilySpec::Path(2), 4), (FamilySpec::Path(3), 4), (FamilySpec::Star(3), 4)] {
        let p = lexicographic(&fam(g.clone()), &h).unwrap();
        assert_eq!(solve_product(Invariant::WeakRoman, &p, &quiet()).unwrap().value, want, "{g}");
    }
}

#[test]
fn complete_second_factor_keeps_the_value() {
    for g in [FamilySpec::Path(5), FamilySpec::Cycle(5), FamilySpec::Fig1Tree] {
        let g = fam(g);
        let base = solve(Invariant::WeakRoman, &g, &quiet()).unwrap().value;
        for m in [2, 3] {
            let p = lexicographic(&g, &fam(FamilySpec::Complete(m))).unwrap();
            assert_eq!(solve_product(Invariant::WeakRoman, &p, &quiet()).unwrap().value, base);
        }
    }
}
