//! Builds each named construction, re-checks its claims with the
//! predicates and the exact solver, and prints a one-line summary.
//!
//! Usage: `cargo run --release --example constructions_tour`

use poset_ao::constructions::{
    grid_cliques, lambda_extremal, lambda_h_extremal, multipartite, planar_c5_join, x_extremal,
};
use poset_ao::solver::{ao_exact, ceil_sqrt, SolverConfig};

fn main() {
    let cfg = SolverConfig::default();

    println!("lambda-extremal posets (largest V-free with a given ao):");
    for a in 1..=8 {
        let r = lambda_extremal(a);
        let check = r.self_check(&cfg).expect("claims hold");
        println!(
            "  a={a}: size={:2} height={} ao={} verified={}",
            r.claimed_size, r.claimed_height, r.claimed_ao, check.ao_verified
        );
    }

    println!("height-capped variants:");
    for (a, h) in [(4, 2), (4, 1), (6, 2), (8, 3)] {
        let r = lambda_h_extremal(a, h).expect("inside the specified regions");
        r.self_check(&cfg).expect("claims hold");
        println!("  (a={a}, h={h}): size={:2} height={}", r.claimed_size, r.claimed_height);
    }

    println!("x-extremal posets (largest acyclic N-free with a given ao):");
    for a in 1..=6 {
        let r = x_extremal(a).expect("a >= 1");
        let check = r.self_check(&cfg).expect("claims hold");
        println!(
            "  a={a}: size={:2} central={:?} conjectural={} verified={}",
            r.claimed_size, r.central, r.conjectural_size, check.ao_verified
        );
    }

    println!("graph examples:");
    for k in 1..=3 {
        let g = grid_cliques(k);
        let v = ao_exact(&g, &cfg).unwrap().value;
        println!("  {k} cliques of size {k}: n={:2} ao={v}", g.n());
    }
    for copies in 1..=2 {
        let g = planar_c5_join(copies);
        let v = ao_exact(&g, &cfg).unwrap().value;
        println!("  {copies} C5-join component(s): n={:2} ao={v}", g.n());
    }
    for n in [5usize, 9, 16] {
        let p = multipartite(n);
        let v = ao_exact(&p.comparability_graph(), &cfg).unwrap().value;
        println!(
            "  multipartite n={n:2}: parts={} ao={v} (ceil of sqrt({n}) is {})",
            p.height(),
            ceil_sqrt(n)
        );
    }
}
