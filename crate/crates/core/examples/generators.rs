//! The named families, their vertex conventions, and the edge-list format.

use weak_roman::generators::{generate, random_connected, FamilySpec};
use weak_roman::graph::Graph;

fn main() {
    use FamilySpec::*;
    let specs = [
        Path(6),
        Cycle(5),
        Star(4),
        CocktailParty(3),
        Comb(7),
        Grs(2, 1),
        Hk(vec![2, 1, 2]),
        Fig1Tree,
        Fig2Planar,
        Fig4TwoCycles,
        Fig6Spider,
    ];
    for spec in specs {
        let g = generate(&spec).unwrap();
        let mut degrees = g.degrees();
        degrees.sort_unstable();
        println!("{:<14} n={:<3} m={:<3} diameter={:?} degrees={degrees:?}", spec.to_string(), g.n(), g.m(), g.diameter());
    }

    // families parse from tokens, as on the command line
    let spec = FamilySpec::parse(&["hk", "4", "1", "2", "1", "2"]).unwrap();
    println!("\nparsed {spec}");

    // random graphs are connected and reproducible from the seed
    let g = random_connected(8, 0.3, 42).unwrap();
    assert_eq!(g, random_connected(8, 0.3, 42).unwrap());
    let text = g.to_edge_list();
    print!("\nrandom_connected(8, 0.3, 42):\n{text}");
    assert_eq!(Graph::parse_edge_list(&text).unwrap(), g);
}
