//! Walks the isomorph-free enumeration: class counts, the minimum of `ao`
//! over all posets and over acyclic posets, and the attainment of that
//! minimum by connected N-free posets.
//!
//! Usage: `cargo run --release --example enumerate_small [max_n]`

use poset_ao::enumeration::{
    enumerate_acyclic, enumerate_posets, min_ao, verify_connected_nfree_attainment,
};
use poset_ao::extremal::ao_tn_bounds;
use poset_ao::solver::ceil_sqrt;

fn main() {
    let max_n: usize = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("max_n must be a number"))
        .unwrap_or(6);

    println!(
        "{:>2} {:>8} {:>8} {:>10} {:>12} {:>10} {:>10}",
        "n", "classes", "acyclic", "min ao", "ceil(sqrt)", "min ao(T)", "predicted"
    );
    for n in 1..=max_n {
        let all = enumerate_posets(n).expect("n <= 7");
        let acyclic = enumerate_acyclic(n).expect("n <= 7");
        let (min_all, _) = min_ao(all.iter().cloned()).unwrap();
        let (min_acyclic, _) = min_ao(acyclic.iter().cloned()).unwrap();
        println!(
            "{n:>2} {:>8} {:>8} {min_all:>10} {:>12} {min_acyclic:>10} {:>10}",
            all.len(),
            acyclic.len(),
            ceil_sqrt(n),
            ao_tn_bounds(n as u64).predicted
        );
    }

    println!();
    for n in 1..=max_n.min(6) {
        let attained = verify_connected_nfree_attainment(n).expect("n <= 7");
        println!("n={n}: acyclic minimum attained by a connected N-free poset: {attained}");
    }
}
