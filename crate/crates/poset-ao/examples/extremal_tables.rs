//! Prints the extremal size tables and the bracket they induce on the
//! minimum of `ao` over acyclic posets.
//!
//! Usage: `cargo run --example extremal_tables [max_a]`

use poset_ao::extremal::{
    ao_tn_bounds, asymptotic_ratio, lambda_closed, lambda_rec, x_closed, x_via_max,
};

fn main() {
    let max_a: u64 = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("max_a must be a number"))
        .unwrap_or(16);

    println!("{:>4} {:>8} {:>8} {:>8} {:>12}", "a", "lambda", "x", "x(max)", "lambda(rec)");
    for a in 1..=max_a {
        let via_max = if a < 2 {
            "-".to_string()
        } else {
            match x_via_max(a) {
                Ok(v) => v.to_string(),
                Err(_) => "odd: n/a".to_string(),
            }
        };
        println!(
            "{a:>4} {:>8} {:>8} {:>8} {:>12}",
            lambda_closed(a),
            x_closed(a),
            via_max,
            lambda_rec(a)
        );
    }

    println!();
    println!("bracket for the minimum of ao over acyclic posets on n elements:");
    for n in [3u64, 12, 31, 100, 1000, 100_000] {
        let b = ao_tn_bounds(n);
        println!(
            "  n={n:>6}: k={} range=({}, {}] predicted={}{}  ratio={:.3}",
            b.k,
            b.lo - 1,
            b.hi,
            b.predicted,
            if b.conjectural { " (conjectural)" } else { "" },
            asymptotic_ratio(n),
        );
    }
}
