//! The committed per-class tables must regenerate byte for byte
//! (`cargo run --example emit_goldens` rewrites them).

use std::path::PathBuf;

use poset_ao::enumeration::class_table_csv;

fn golden_path(n: usize) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join(format!("goldens/posets_n{n}.csv"))
}

#[test]
fn committed_goldens_regenerate_cleanly() {
    for n in 1..=6 {
        let committed = std::fs::read_to_string(golden_path(n))
            .unwrap_or_else(|e| panic!("missing golden for n={n}: {e}"));
        let regenerated = class_table_csv(n).unwrap();
        assert_eq!(committed, regenerated, "golden drift at n={n}");
    }
}

#[test]
fn golden_n7_regenerates_cleanly() {
    let committed = std::fs::read_to_string(golden_path(7)).expect("missing golden for n=7");
    let regenerated = class_table_csv(7).unwrap();
    assert_eq!(committed, regenerated, "golden drift at n=7");
}

#[test]
fn golden_row_counts_follow_the_class_counts() {
    const CLASS_COUNTS: [usize; 7] = [1, 2, 5, 16, 63, 318, 2045];
    for n in 1..=7 {
        let text = std::fs::read_to_string(golden_path(n)).unwrap();
        let rows = text.lines().count() - 2; // command header + column header
        assert_eq!(rows, CLASS_COUNTS[n - 1], "n={n}");
    }
}
