//! Writes a DOT rendering of a Hasse diagram.
//!
//! Usage: `cargo run --example export_dot [a] [out.dot]`
//! Renders the x-extremal poset for the given `a` (default 4).

use poset_ao::constructions::x_extremal;
use poset_ao::io::poset_dot;

fn main() {
    let a: u64 = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("a must be a number"))
        .unwrap_or(4);
    let out = std::env::args().nth(2).unwrap_or_else(|| "hasse.dot".into());

    let report = x_extremal(a).expect("a >= 1");
    let dot = poset_dot(&report.poset);
    std::fs::write(&out, &dot).expect("write dot file");
    println!(
        "wrote {out}: {} elements, central element {:?}",
        report.poset.n(),
        report.central
    );
    println!("render with: dot -Tpng {out} -o hasse.png");
}
