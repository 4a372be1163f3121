//! The search against exhaustive enumeration on random graphs.

use weak_roman::generators::random_connected;
use weak_roman::solvers::{oracle, solve, Invariant, SolverConfig};

fn main() {
    let cfg = SolverConfig::default();
    let mut checked = 0;
    for seed in 0..100u64 {
        let n = 3 + seed as usize % 6;
        let g = random_connected(n, 0.35, seed).unwrap();
        for inv in Invariant::ALL {
            if inv.check_defined(&g).is_err() {
                continue;
            }
            let (fast, slow) = (solve(inv, &g, &cfg).unwrap(), oracle(inv, &g).unwrap());
            assert_eq!(fast.value, slow, "{inv} on seed {seed}");
            assert!(fast.certificate.validates(inv, &g));
            checked += 1;
        }
    }
    println!("{checked} values agree with the oracle");
}
