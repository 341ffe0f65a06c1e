//! Library tour: build a poset, read off its parameters, bounds,
//! structural predicates and the chain-family witness.
//!
//! Usage: `cargo run --example analyze_poset`

use poset_ao::constructions::boolean_lattice;
use poset_ao::solver::{ao_bounds, ao_poset, SolverConfig};
use poset_ao::structure::{central_element, find_cover_cycle, find_n_shape, find_v_shape};

fn main() {
    let poset = boolean_lattice(3);
    let cfg = SolverConfig::default();

    println!("subsets of {{1,2,3}} under strict inclusion:");
    println!("  n      = {}", poset.n());
    println!("  height = {}", poset.height());
    println!("  width  = {}", poset.width());

    let (lo, hi) = ao_bounds(&poset);
    let (result, family) = ao_poset(&poset, &cfg).expect("16 nodes are easy");
    println!("  ao     = {} (bounds said {lo}..={hi})", result.value);

    println!("  acyclic   = {}", find_cover_cycle(&poset).is_none());
    println!("  V-free    = {}", find_v_shape(&poset).is_none());
    println!("  N-free    = {}", find_n_shape(&poset).is_none());
    println!("  connected = {}", poset.is_connected());
    println!("  central   = {:?}", central_element(&poset));

    println!("one optimal independent family of chains (elements are bitmasks):");
    for chain in &family.chains {
        let pretty: Vec<String> = chain.iter().map(|&v| format!("{v:03b}")).collect();
        println!("  {}", pretty.join(" < "));
    }
}
