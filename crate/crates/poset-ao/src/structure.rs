//! Structural predicates with explicit witnesses: cover-graph acyclicity,
//! V-freeness, N-freeness and central elements.
//!
//! The V and N predicates quantify over the full order relation `<`, not
//! over covers; only acyclicity is a statement about the cover graph. All
//! searches scan tuples in lexicographic order so witnesses are
//! reproducible.

use crate::poset::Poset;

/// A certificate that a structural predicate fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ShapeWitness {
    /// `(p1, p2, p3)` with `p1 < p2`, `p1 < p3` and `p2` incomparable to
    /// `p3` (one element below two incomparable ones).
    V(usize, usize, usize),
    /// `(p1, p2, p3, p4)` with `p1 > p3`, `p1 > p4`, `p2 > p4` and
    /// `p1 ~/~ p2`, `p2 ~/~ p3`, `p3 ~/~ p4`.
    N(usize, usize, usize, usize),
    /// A cycle in the undirected cover graph, listed in traversal order.
    CoverCycle(Vec<usize>),
}

impl ShapeWitness {
    /// Re-checks the witness against `poset`.
    pub fn holds_in(&self, poset: &Poset) -> bool {
        match *self {
            ShapeWitness::V(p1, p2, p3) => {
                poset.less(p1, p2) && poset.less(p1, p3) && poset.incomparable(p2, p3)
            }
            ShapeWitness::N(p1, p2, p3, p4) => {
                poset.less(p3, p1)
                    && poset.less(p4, p1)
                    && poset.less(p4, p2)
                    && poset.incomparable(p1, p2)
                    && poset.incomparable(p2, p3)
                    && poset.incomparable(p3, p4)
            }
            ShapeWitness::CoverCycle(ref cycle) => {
                if cycle.len() < 4 {
                    return false;
                }
                let g = poset.cover_graph();
                cycle
                    .iter()
                    .zip(cycle.iter().cycle().skip(1))
                    .take(cycle.len())
                    .all(|(&a, &b)| g.has_edge(a, b))
            }
        }
    }
}

/// Searches the undirected cover graph for a cycle.
///
/// Returns `None` exactly when the cover graph is a forest, i.e. the poset
/// is acyclic. DFS roots and neighbors are visited in increasing order.
pub fn find_cover_cycle(poset: &Poset) -> Option<ShapeWitness> {
    let g = poset.cover_graph();
    let n = g.n();
    let mut state = vec![0u8; n]; // 0 unvisited, 1 on stack, 2 done
    let mut parent = vec![usize::MAX; n];

    for root in 0..n {
        if state[root] != 0 {
            continue;
        }
        // Iterative DFS keeping the current path; a visited non-parent
        // neighbor closes a cycle.
        let mut stack = vec![(root, usize::MAX)];
        while let Some(&(v, from)) = stack.last() {
            if state[v] == 0 {
                state[v] = 1;
                parent[v] = from;
                let mut pushed = false;
                for w in g.neighbors(v).iter() {
                    if w == from {
                        continue;
                    }
                    if state[w] == 1 {
                        // Walk the tree path v -> w.
                        let mut cycle = vec![v];
                        let mut cur = parent[v];
                        while cur != w {
                            cycle.push(cur);
                            cur = parent[cur];
                        }
                        cycle.push(w);
                        return Some(ShapeWitness::CoverCycle(cycle));
                    }
                    if state[w] == 0 {
                        stack.push((w, v));
                        pushed = true;
                    }
                }
                if pushed {
                    continue;
                }
            }
            // Re-visits of finished children fall through to here.
            let (v, _) = stack.pop().unwrap();
            if state[v] == 1 {
                state[v] = 2;
            }
        }
    }
    None
}

/// True iff the cover graph is a forest.
pub fn is_acyclic(poset: &Poset) -> bool {
    find_cover_cycle(poset).is_none()
}

/// First V-shape in lexicographic `(p1, p2, p3)` order, or `None` if the
/// poset is V-free.
pub fn find_v_shape(poset: &Poset) -> Option<ShapeWitness> {
    let n = poset.n();
    for p1 in 0..n {
        for p2 in poset.above(p1).iter() {
            for p3 in poset.above(p1).iter() {
                if p3 <= p2 {
                    continue; // the shape is symmetric in p2, p3
                }
                if poset.incomparable(p2, p3) {
                    return Some(ShapeWitness::V(p1, p2, p3));
                }
            }
        }
    }
    None
}

pub fn is_v_free(poset: &Poset) -> bool {
    find_v_shape(poset).is_none()
}

/// First N-shape in lexicographic `(p1, p2, p3, p4)` order, or `None` if
/// the poset is N-free.
pub fn find_n_shape(poset: &Poset) -> Option<ShapeWitness> {
    let n = poset.n();
    for p1 in 0..n {
        for p2 in 0..n {
            if p2 == p1 || !poset.incomparable(p1, p2) {
                continue;
            }
            for p3 in poset.below(p1).iter() {
                if p3 == p2 || !poset.incomparable(p2, p3) {
                    continue;
                }
                for p4 in poset.below(p1).iter() {
                    if p4 == p2 || p4 == p3 {
                        continue;
                    }
                    if poset.less(p4, p2) && poset.incomparable(p3, p4) {
                        return Some(ShapeWitness::N(p1, p2, p3, p4));
                    }
                }
            }
        }
    }
    None
}

pub fn is_n_free(poset: &Poset) -> bool {
    find_n_shape(poset).is_none()
}

/// The smallest-index element comparable to every other element, if any.
pub fn central_element(poset: &Poset) -> Option<usize> {
    let n = poset.n();
    (0..n).find(|&p| poset.above(p).count() + poset.below(p).count() == n - 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::Poset;

    fn diamond() -> Poset {
        Poset::from_cover_relations(4, &[(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap()
    }

    /// Both elements of the top pair above both of the bottom pair.
    fn crown() -> Poset {
        Poset::from_cover_relations(4, &[(0, 2), (0, 3), (1, 2), (1, 3)]).unwrap()
    }

    fn v_poset() -> Poset {
        // 0 below incomparable 1 and 2.
        Poset::from_cover_relations(3, &[(1, 0), (2, 0)]).unwrap()
    }

    fn n_poset() -> Poset {
        Poset::from_cover_relations(4, &[(0, 2), (0, 3), (1, 3)]).unwrap()
    }

    #[test]
    fn diamond_cover_cycle() {
        let w = find_cover_cycle(&diamond()).expect("diamond cover graph has a 4-cycle");
        match &w {
            ShapeWitness::CoverCycle(cycle) => assert_eq!(cycle.len(), 4),
            other => panic!("unexpected witness {other:?}"),
        }
        assert!(w.holds_in(&diamond()));
    }

    #[test]
    fn crown_cover_cycle() {
        let w = find_cover_cycle(&crown()).expect("crown cover graph has a 4-cycle");
        assert!(w.holds_in(&crown()));
    }

    #[test]
    fn chains_are_acyclic() {
        for n in 0..6 {
            assert!(is_acyclic(&Poset::chain(n)));
        }
    }

    #[test]
    fn v_shape_found_in_lex_order() {
        let w = find_v_shape(&v_poset()).expect("the V poset has a V-shape");
        assert_eq!(w, ShapeWitness::V(0, 1, 2));
        assert!(w.holds_in(&v_poset()));
    }

    #[test]
    fn lambda_shape_is_not_a_v() {
        // One element above two incomparable leaves: the V opens downward
        // only.
        let p = Poset::from_cover_relations(3, &[(0, 1), (0, 2)]).unwrap();
        assert!(find_v_shape(&p).is_none());
    }

    #[test]
    fn chain_is_v_free() {
        assert!(is_v_free(&Poset::chain(4)));
    }

    #[test]
    fn n_shape_found() {
        let w = find_n_shape(&n_poset()).expect("the N poset has an N-shape");
        assert_eq!(w, ShapeWitness::N(0, 1, 2, 3));
        assert!(w.holds_in(&n_poset()));
    }

    #[test]
    fn v_free_implies_n_free_small_cases() {
        let cases = [
            Poset::chain(4),
            Poset::antichain(4),
            v_poset().invert(), // lambda shape
            Poset::chain(2).disjoint_union(&Poset::chain(2)),
        ];
        for p in cases {
            assert!(is_v_free(&p));
            assert!(is_n_free(&p));
            assert!(is_acyclic(&p));
        }
    }

    #[test]
    fn antichain_has_no_n_shape() {
        assert!(find_n_shape(&Poset::antichain(4)).is_none());
    }

    #[test]
    fn central_elements() {
        assert_eq!(central_element(&Poset::chain(3)), Some(0));
        assert_eq!(central_element(&Poset::antichain(2)), None);
        assert_eq!(central_element(&diamond()), Some(0));
        assert_eq!(central_element(&v_poset()), Some(0));
    }

    #[test]
    fn predicates_survive_relabeling() {
        let p = n_poset();
        let q = p.relabel(&[3, 1, 0, 2]);
        assert_eq!(find_n_shape(&p).is_some(), find_n_shape(&q).is_some());
        assert_eq!(find_v_shape(&p).is_some(), find_v_shape(&q).is_some());
        assert_eq!(
            find_cover_cycle(&p).is_some(),
            find_cover_cycle(&q).is_some()
        );
    }
}
