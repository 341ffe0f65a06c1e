//! Races the branch-and-bound solver against the subset-enumeration
//! oracle on random graphs and reports the witness sizes.
//!
//! Usage: `cargo run --release --example solver_vs_oracle [trials]`

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use poset_ao::graph::SimpleGraph;
use poset_ao::solver::{ao_brute, ao_exact, SolverConfig};

fn main() {
    let trials: usize = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("trials must be a number"))
        .unwrap_or(200);

    let mut rng = StdRng::seed_from_u64(20_240_817);
    let cfg = SolverConfig::default();
    let mut histogram = [0usize; 13];

    for trial in 0..trials {
        let n = rng.random_range(4..=12);
        let p = rng.random_range(0.15..0.85);
        let mut g = SimpleGraph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                if rng.random_bool(p) {
                    g.add_edge(u, v);
                }
            }
        }

        let exact = ao_exact(&g, &cfg).expect("small instances");
        let brute = ao_brute(&g, &cfg).expect("n <= 12");
        assert_eq!(exact.value, brute, "disagreement on trial {trial}: {g:?}");
        assert!(exact.validate(&g));
        histogram[exact.value] += 1;
    }

    println!("{trials} random graphs, solver and oracle agree on every one");
    println!("distribution of ao values:");
    for (value, count) in histogram.iter().enumerate() {
        if *count > 0 {
            println!("  ao={value:2}: {count}");
        }
    }
}
