//! Regenerates the committed per-class golden tables under `goldens/`.
//!
//! Usage: `cargo run --release --example emit_goldens [max_n]`
//!
//! One CSV per size n = 1..=max_n (default 7), one row per isomorphism
//! class: canonical key, ao, height, width and the four structural
//! predicates. Re-running must reproduce the committed files byte for byte.

use std::path::PathBuf;

use poset_ao::enumeration::class_table_csv;

fn main() {
    let max_n: usize = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("max_n must be a number"))
        .unwrap_or(7);

    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("goldens");
    std::fs::create_dir_all(&dir).expect("create goldens directory");

    for n in 1..=max_n {
        let csv = class_table_csv(n).expect("enumeration is capped at n = 7");
        let path = dir.join(format!("posets_n{n}.csv"));
        let rows = csv.lines().count() - 2;
        std::fs::write(&path, csv).expect("write golden file");
        println!("wrote {} ({rows} classes)", path.display());
    }
}
