//! The Boolean lattice and its independent family of 2-chains
//! `{A, A + {m}}` over the middle-layer subsets of `{1..m-1}`.
//!
//! Usage: `cargo run --example boolean_chains [max_m]`

use poset_ao::constructions::{binomial, boolean_lattice, boolean_witness};
use poset_ao::solver::{ao_exact, SolverConfig};

fn main() {
    let max_m: u32 = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("max_m must be a number"))
        .unwrap_or(4);

    let cfg = SolverConfig::default();
    for m in 1..=max_m {
        let lattice = boolean_lattice(m);
        let family = boolean_witness(m);
        family.validate(&lattice).expect("the family is independent");
        let formula = 2 * binomial(u64::from(m) - 1, u64::from((m - 1) / 2));

        print!(
            "m={m}: n={:3} witness chains={:2} witness size={:2} (2*C={formula})",
            lattice.n(),
            family.chains.len(),
            family.size()
        );
        if lattice.n() <= 16 {
            let exact = ao_exact(&lattice.comparability_graph(), &cfg).unwrap().value;
            println!(" exact ao={exact}");
        } else {
            println!(" exact ao skipped (too large)");
        }
    }
}
