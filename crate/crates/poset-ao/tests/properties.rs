//! Property tests over randomly generated posets and graphs.

use proptest::prelude::*;

use poset_ao::enumeration::canonical_key;
use poset_ao::extremal::{ao_tn_bounds, lambda_closed, lambda_h};
use poset_ao::poset::Poset;
use poset_ao::solver::{
    alpha_brute, ao_brute, ao_bounds, ao_exact, ao_poset, ceil_sqrt, SolverConfig,
};
use poset_ao::structure::{find_v_shape, is_v_free};

/// A random poset on up to `max_n` elements: close arbitrary pairs
/// transitively, dropping orientation conflicts along the way.
fn arb_poset(max_n: usize) -> impl Strategy<Value = Poset> {
    (1..=max_n).prop_flat_map(move |n| {
        let pairs = proptest::collection::vec((0..n, 0..n), 0..=2 * n);
        pairs.prop_map(move |raw| {
            let mut kept: Vec<(usize, usize)> = Vec::new();
            for (u, l) in raw {
                if u == l {
                    continue;
                }
                kept.push((u, l));
                if Poset::from_cover_relations(n, &kept).is_err() {
                    kept.pop();
                }
            }
            Poset::from_cover_relations(n, &kept).expect("conflicts were dropped")
        })
    })
}

fn arb_permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<usize>>()).prop_shuffle()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn invert_is_involution(p in arb_poset(9)) {
        prop_assert_eq!(p.invert().invert(), p);
    }

    #[test]
    fn invert_preserves_parameters(p in arb_poset(9)) {
        let q = p.invert();
        prop_assert_eq!(p.height(), q.height());
        prop_assert_eq!(p.width(), q.width());
        prop_assert_eq!(
            p.comparability_graph().edges(),
            q.comparability_graph().edges()
        );
    }

    #[test]
    fn height_times_width_covers_size(p in arb_poset(10)) {
        prop_assert!(p.height() * p.width() >= p.n());
    }

    #[test]
    fn cover_pairs_regenerate_the_order(p in arb_poset(9)) {
        let pairs: Vec<(usize, usize)> =
            p.cover_pairs().iter().map(|c| (c.upper, c.lower)).collect();
        let q = Poset::from_cover_relations(p.n(), &pairs).unwrap();
        prop_assert_eq!(p, q);
    }

    #[test]
    fn width_matches_independent_set_on_comparability(p in arb_poset(10)) {
        prop_assert_eq!(p.width(), alpha_brute(&p.comparability_graph()));
    }

    #[test]
    fn exact_matches_brute_on_posets(p in arb_poset(9)) {
        let cfg = SolverConfig::default();
        let g = p.comparability_graph();
        let exact = ao_exact(&g, &cfg).unwrap();
        prop_assert_eq!(exact.value, ao_brute(&g, &cfg).unwrap());
        prop_assert!(exact.validate(&g));
    }

    #[test]
    fn poset_witness_validates(p in arb_poset(9)) {
        let cfg = SolverConfig::default();
        let (result, family) = ao_poset(&p, &cfg).unwrap();
        prop_assert_eq!(family.size(), result.value);
        prop_assert!(family.validate(&p).is_ok());
    }

    #[test]
    fn bounds_bracket_the_exact_value(p in arb_poset(9)) {
        let cfg = SolverConfig::default();
        let (lo, hi) = ao_bounds(&p);
        let value = ao_poset(&p, &cfg).unwrap().0.value;
        prop_assert!(lo <= value && value <= hi);
        prop_assert!(value >= ceil_sqrt(p.n()));
    }

    #[test]
    fn relabeling_preserves_predicates_and_key(
        (p, perm) in arb_poset(7).prop_flat_map(|p| {
            let n = p.n();
            (Just(p), arb_permutation(n))
        })
    ) {
        let q = p.relabel(&perm);
        prop_assert_eq!(is_v_free(&p), is_v_free(&q));
        prop_assert_eq!(canonical_key(&p), canonical_key(&q));
    }

    #[test]
    fn v_freeness_is_hereditary(
        (p, keep) in arb_poset(9).prop_flat_map(|p| {
            let n = p.n();
            let keep = proptest::collection::btree_set(0..n, 0..=n);
            (Just(p), keep)
        })
    ) {
        if find_v_shape(&p).is_none() {
            let keep: Vec<usize> = keep.into_iter().collect();
            prop_assert!(find_v_shape(&p.induced(&keep)).is_none());
        }
    }

    #[test]
    fn lambda_h_never_exceeds_the_ceiling(a in 0u64..200, h in 0u64..210) {
        if let Some(v) = lambda_h(a, h) {
            if h <= a {
                prop_assert!(v <= lambda_closed(a) - (a - h));
            } else {
                prop_assert_eq!(v, lambda_closed(a));
            }
        }
    }

    #[test]
    fn tn_bracket_is_consistent(n in 2u64..100_000) {
        let b = ao_tn_bounds(n);
        let k = u64::from(b.k);
        prop_assert!(k * (1 << (k - 1)) <= n && n <= (k + 1) * (1 << k) - 1);
        prop_assert!(b.lo <= b.predicted && b.predicted <= b.hi);
    }
}
