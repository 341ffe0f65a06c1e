//! Finite posets with dense element ids and their derived graphs.
//!
//! Elements are `0..n`. The strict order is stored as its full transitive
//! closure in bitset rows (one "above" and one "below" row per element), so
//! comparability queries are O(1) and the classical parameters are cheap.
//! Covers are recomputed on demand. All values are immutable once built.

use crate::bits::BitSet;
use crate::graph::SimpleGraph;

/// Building a poset from relations failed because the pairs contain a
/// directed cycle (equivalently, the transitive closure would have to break
/// irreflexivity or antisymmetry).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleError {
    /// One element on the offending cycle.
    pub element: usize,
}

impl std::fmt::Display for CycleError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "relation pairs contain a cycle through element {}",
            self.element
        )
    }
}

impl std::error::Error for CycleError {}

/// `upper` covers `lower`: `lower < upper` with nothing strictly between.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct CoverPair {
    pub upper: usize,
    pub lower: usize,
}

/// A finite strict partial order on `0..n`.
#[derive(Clone, PartialEq, Eq)]
pub struct Poset {
    n: usize,
    /// `up[p]` is the set of q with p < q.
    up: Vec<BitSet>,
    /// `down[p]` is the set of q with q < p.
    down: Vec<BitSet>,
}

impl Poset {
    /// The empty relation on `n` elements.
    pub fn antichain(n: usize) -> Self {
        Poset {
            n,
            up: (0..n).map(|_| BitSet::new(n)).collect(),
            down: (0..n).map(|_| BitSet::new(n)).collect(),
        }
    }

    /// The total order `0 > 1 > ... > n-1`.
    pub fn chain(n: usize) -> Self {
        let pairs: Vec<(usize, usize)> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
        Self::from_cover_relations(n, &pairs).expect("a chain has no cycles")
    }

    /// Builds the poset whose order is the transitive closure of the given
    /// `(upper, lower)` pairs. The pairs may be any valid relations, not
    /// only covers.
    ///
    /// Returns [`CycleError`] if the pairs contain a directed cycle. Panics
    /// if an element id is out of range.
    pub fn from_cover_relations(n: usize, pairs: &[(usize, usize)]) -> Result<Self, CycleError> {
        // succ[l] = elements directly above l according to the input pairs
        let mut succ: Vec<BitSet> = (0..n).map(|_| BitSet::new(n)).collect();
        for &(upper, lower) in pairs {
            assert!(upper < n && lower < n, "element id out of range");
            if upper == lower {
                return Err(CycleError { element: upper });
            }
            succ[lower].insert(upper);
        }

        // Kahn-style topological order over the pair digraph; a leftover
        // element with nonzero in-degree exposes a cycle.
        let mut indeg = vec![0usize; n];
        for l in 0..n {
            for u in succ[l].iter() {
                indeg[u] += 1;
            }
        }
        let mut order: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
        let mut head = 0;
        while head < order.len() {
            let v = order[head];
            head += 1;
            for u in succ[v].iter() {
                indeg[u] -= 1;
                if indeg[u] == 0 {
                    order.push(u);
                }
            }
        }
        if order.len() != n {
            let element = (0..n).find(|&v| indeg[v] > 0).unwrap();
            return Err(CycleError { element });
        }

        // Closure: process in reverse topological order so each successor's
        // up-row is already complete.
        let mut up: Vec<BitSet> = (0..n).map(|_| BitSet::new(n)).collect();
        for &v in order.iter().rev() {
            let mut row = BitSet::new(n);
            for u in succ[v].iter() {
                row.insert(u);
                row.union_with(&up[u]);
            }
            up[v] = row;
        }
        Ok(Self::from_up_rows(n, up))
    }

    /// Assembles a poset from closed "above" rows. Debug builds validate the
    /// strict-order invariants.
    pub(crate) fn from_up_rows(n: usize, up: Vec<BitSet>) -> Self {
        let mut down: Vec<BitSet> = (0..n).map(|_| BitSet::new(n)).collect();
        for p in 0..n {
            for q in up[p].iter() {
                down[q].insert(p);
            }
        }
        let poset = Poset { n, up, down };
        debug_assert!(poset.check_invariants());
        poset
    }

    fn check_invariants(&self) -> bool {
        for p in 0..self.n {
            if self.up[p].contains(p) {
                return false; // irreflexive
            }
            for q in self.up[p].iter() {
                if self.up[q].contains(p) {
                    return false; // antisymmetric
                }
                if !self.up[q].is_subset_of(&self.up[p]) {
                    return false; // transitive
                }
            }
        }
        true
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// True iff `p < q`.
    #[inline]
    pub fn less(&self, p: usize, q: usize) -> bool {
        self.up[p].contains(q)
    }

    /// True iff `p == q`, `p < q` or `q < p`.
    #[inline]
    pub fn comparable(&self, p: usize, q: usize) -> bool {
        p == q || self.less(p, q) || self.less(q, p)
    }

    #[inline]
    pub fn incomparable(&self, p: usize, q: usize) -> bool {
        !self.comparable(p, q)
    }

    /// Elements above `p` (everything `q` with `p < q`).
    #[inline]
    pub fn above(&self, p: usize) -> &BitSet {
        &self.up[p]
    }

    /// Elements below `p`.
    #[inline]
    pub fn below(&self, p: usize) -> &BitSet {
        &self.down[p]
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.n).filter(|&p| self.up[p].is_empty()).collect()
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.n).filter(|&p| self.down[p].is_empty()).collect()
    }

    /// Number of ordered pairs `p < q`.
    pub fn relation_count(&self) -> usize {
        self.up.iter().map(BitSet::count).sum()
    }

    /// The transitive reduction: exactly the cover pairs of the order,
    /// sorted by `(upper, lower)`.
    ///
    /// A pair `q < p` is a cover iff no `r` lies strictly between, i.e. the
    /// closure contains no 2-step path from `q` to `p`.
    pub fn cover_pairs(&self) -> Vec<CoverPair> {
        let mut covers = Vec::new();
        for p in 0..self.n {
            for q in self.down[p].iter() {
                if !self.up[q].intersects(&self.down[p]) {
                    covers.push(CoverPair { upper: p, lower: q });
                }
            }
        }
        covers.sort_unstable();
        covers
    }

    /// Edge between every comparable pair.
    pub fn comparability_graph(&self) -> SimpleGraph {
        let mut g = SimpleGraph::new(self.n);
        for p in 0..self.n {
            for q in self.up[p].iter() {
                g.add_edge(p, q);
            }
        }
        g
    }

    /// Undirected graph on the cover pairs (the Hasse diagram's graph).
    pub fn cover_graph(&self) -> SimpleGraph {
        let mut g = SimpleGraph::new(self.n);
        for c in self.cover_pairs() {
            g.add_edge(c.upper, c.lower);
        }
        g
    }

    /// Size of a largest chain; 0 for the empty poset.
    pub fn height(&self) -> usize {
        // Longest path over the closure DAG. |below| strictly increases
        // along any chain, so processing by that count is a topological
        // order.
        let mut order: Vec<usize> = (0..self.n).collect();
        order.sort_unstable_by_key(|&p| self.down[p].count());
        let mut h = vec![0usize; self.n];
        let mut best = 0;
        for &p in &order {
            let below_best = self.down[p].iter().map(|q| h[q]).max().unwrap_or(0);
            h[p] = below_best + 1;
            best = best.max(h[p]);
        }
        best
    }

    /// Size of a largest antichain, via Dilworth's theorem: a minimum chain
    /// partition corresponds to a maximum matching in the split bipartite
    /// graph of the order relation, and `width = n - matching`.
    pub fn width(&self) -> usize {
        self.n - self.max_order_matching()
    }

    fn max_order_matching(&self) -> usize {
        // Kuhn's augmenting-path matching on left/right copies of the
        // elements with an edge for every p < q.
        let n = self.n;
        let mut match_right: Vec<Option<usize>> = vec![None; n];
        let mut matched = 0;

        fn try_augment(
            poset: &Poset,
            p: usize,
            seen: &mut [bool],
            match_right: &mut [Option<usize>],
        ) -> bool {
            for q in poset.up[p].iter() {
                if seen[q] {
                    continue;
                }
                seen[q] = true;
                if match_right[q].is_none()
                    || try_augment(poset, match_right[q].unwrap(), seen, match_right)
                {
                    match_right[q] = Some(p);
                    return true;
                }
            }
            false
        }

        for p in 0..n {
            let mut seen = vec![false; n];
            if try_augment(self, p, &mut seen, &mut match_right) {
                matched += 1;
            }
        }
        matched
    }

    /// Connectivity of the cover graph. Posets with at most one element are
    /// connected.
    pub fn is_connected(&self) -> bool {
        self.cover_graph().is_connected()
    }

    /// The dual order: `less'(p, q)` iff `less(q, p)`. An involution.
    pub fn invert(&self) -> Poset {
        Poset {
            n: self.n,
            up: self.down.clone(),
            down: self.up.clone(),
        }
    }

    /// Places `other` next to `self` with no relations across; the elements
    /// of `other` are shifted by `self.n`.
    pub fn disjoint_union(&self, other: &Poset) -> Poset {
        let n = self.n + other.n;
        let mut up: Vec<BitSet> = (0..n).map(|_| BitSet::new(n)).collect();
        for p in 0..self.n {
            for q in self.up[p].iter() {
                up[p].insert(q);
            }
        }
        for p in 0..other.n {
            for q in other.up[p].iter() {
                up[self.n + p].insert(self.n + q);
            }
        }
        Self::from_up_rows(n, up)
    }

    /// The subposet induced on `keep`, renumbered in the order given.
    pub fn induced(&self, keep: &[usize]) -> Poset {
        let n = keep.len();
        let mut up: Vec<BitSet> = (0..n).map(|_| BitSet::new(n)).collect();
        for (i, &p) in keep.iter().enumerate() {
            for (j, &q) in keep.iter().enumerate() {
                if i != j && self.less(p, q) {
                    up[i].insert(j);
                }
            }
        }
        Self::from_up_rows(n, up)
    }

    /// Relabels elements: new element `i` is old element `perm[i]`.
    pub fn relabel(&self, perm: &[usize]) -> Poset {
        assert_eq!(perm.len(), self.n);
        self.induced(perm)
    }
}

impl std::fmt::Debug for Poset {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let rels: Vec<(usize, usize)> = (0..self.n)
            .flat_map(|p| self.up[p].iter().map(move |q| (p, q)))
            .collect();
        write!(f, "Poset(n={}, less={:?})", self.n, rels)
    }
}

/// Why a chain family failed validation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ChainFamilyError {
    /// A listed chain is not totally ordered.
    NotAChain { chain: usize },
    /// An element appears in two chains.
    Overlap { element: usize },
    /// Two elements of different chains are comparable.
    CrossComparable { a: usize, b: usize },
    /// An element id is out of range.
    OutOfRange { element: usize },
}

impl std::fmt::Display for ChainFamilyError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ChainFamilyError::NotAChain { chain } => {
                write!(f, "chain #{chain} is not totally ordered")
            }
            ChainFamilyError::Overlap { element } => {
                write!(f, "element {element} appears in more than one chain")
            }
            ChainFamilyError::CrossComparable { a, b } => {
                write!(f, "elements {a} and {b} of different chains are comparable")
            }
            ChainFamilyError::OutOfRange { element } => {
                write!(f, "element {element} is out of range")
            }
        }
    }
}

impl std::error::Error for ChainFamilyError {}

/// An independent family of chains: pairwise disjoint chains such that any
/// two elements of different chains are incomparable. Witnesses the `ao`
/// value of a poset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainFamily {
    /// Each chain is listed bottom-up (strictly increasing under the order).
    pub chains: Vec<Vec<usize>>,
}

impl ChainFamily {
    /// Total number of elements covered by the family.
    pub fn size(&self) -> usize {
        self.chains.iter().map(Vec::len).sum()
    }

    /// Checks all family invariants against `poset`.
    pub fn validate(&self, poset: &Poset) -> Result<(), ChainFamilyError> {
        let mut seen = BitSet::new(poset.n());
        for (ci, chain) in self.chains.iter().enumerate() {
            for &e in chain {
                if e >= poset.n() {
                    return Err(ChainFamilyError::OutOfRange { element: e });
                }
                if seen.contains(e) {
                    return Err(ChainFamilyError::Overlap { element: e });
                }
                seen.insert(e);
            }
            for w in chain.windows(2) {
                if !poset.less(w[0], w[1]) {
                    return Err(ChainFamilyError::NotAChain { chain: ci });
                }
            }
        }
        for (ci, chain) in self.chains.iter().enumerate() {
            for other in self.chains.iter().skip(ci + 1) {
                for &a in chain {
                    for &b in other {
                        if poset.comparable(a, b) {
                            return Err(ChainFamilyError::CrossComparable { a, b });
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diamond() -> Poset {
        // 0 on top, 3 on the bottom, 1 and 2 incomparable in the middle.
        Poset::from_cover_relations(4, &[(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap()
    }

    #[test]
    fn closure_of_chain() {
        let p = Poset::from_cover_relations(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(p.less(2, 0), "transitivity must add 2 < 0");
        assert!(p.less(1, 0) && p.less(2, 1));
        assert_eq!(p.relation_count(), 3);
    }

    #[test]
    fn two_cycle_is_rejected() {
        let err = Poset::from_cover_relations(2, &[(0, 1), (1, 0)]).unwrap_err();
        assert!(err.element < 2);
    }

    #[test]
    fn self_pair_is_rejected() {
        assert!(Poset::from_cover_relations(1, &[(0, 0)]).is_err());
    }

    #[test]
    fn n_poset_closure_adds_nothing() {
        // 0 > 2, 0 > 3, 1 > 3: the zig-zag has no transitive consequences.
        let p = Poset::from_cover_relations(4, &[(0, 2), (0, 3), (1, 3)]).unwrap();
        assert_eq!(p.relation_count(), 3);
        assert!(p.incomparable(2, 3));
        assert!(p.incomparable(0, 1));
        assert!(p.incomparable(1, 2));
    }

    #[test]
    fn cover_pairs_of_chain_skip_long_relations() {
        let p = Poset::chain(3);
        let covers = p.cover_pairs();
        assert_eq!(
            covers,
            vec![
                CoverPair { upper: 0, lower: 1 },
                CoverPair { upper: 1, lower: 2 }
            ]
        );
    }

    #[test]
    fn cover_pairs_of_antichain_empty() {
        assert!(Poset::antichain(4).cover_pairs().is_empty());
    }

    #[test]
    fn diamond_has_four_covers() {
        assert_eq!(diamond().cover_pairs().len(), 4);
    }

    #[test]
    fn comparability_graphs() {
        let chain = Poset::chain(4);
        assert_eq!(chain.comparability_graph().edge_count(), 6); // K4
        let anti = Poset::antichain(4);
        assert_eq!(anti.comparability_graph().edge_count(), 0);
        let d = diamond().comparability_graph();
        assert_eq!(d.edge_count(), 5); // K4 minus one edge
        assert!(!d.has_edge(1, 2));
    }

    #[test]
    fn height_and_width() {
        assert_eq!(Poset::chain(5).height(), 5);
        assert_eq!(Poset::chain(5).width(), 1);
        assert_eq!(Poset::antichain(4).height(), 1);
        assert_eq!(Poset::antichain(4).width(), 4);
        assert_eq!(Poset::antichain(0).height(), 0);
        assert_eq!(Poset::antichain(0).width(), 0);
        assert_eq!(diamond().height(), 3);
        assert_eq!(diamond().width(), 2);
    }

    #[test]
    fn invert_is_involution() {
        let p = diamond();
        assert_eq!(p.invert().invert(), p);
        assert_eq!(p.invert().height(), p.height());
        assert_eq!(p.invert().width(), p.width());
        assert_eq!(
            p.invert().comparability_graph().edges(),
            p.comparability_graph().edges()
        );
    }

    #[test]
    fn disjoint_union_shifts_and_separates() {
        let p = Poset::chain(2).disjoint_union(&Poset::chain(3));
        assert_eq!(p.n(), 5);
        assert!(p.less(1, 0) && p.less(4, 2));
        for a in 0..2 {
            for b in 2..5 {
                assert!(p.incomparable(a, b));
            }
        }
        assert!(!p.is_connected());
    }

    #[test]
    fn cover_round_trip() {
        let p = diamond();
        let pairs: Vec<(usize, usize)> =
            p.cover_pairs().iter().map(|c| (c.upper, c.lower)).collect();
        let q = Poset::from_cover_relations(p.n(), &pairs).unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn chain_family_validation() {
        let p = Poset::chain(2).disjoint_union(&Poset::chain(2));
        let good = ChainFamily {
            chains: vec![vec![1, 0], vec![3, 2]],
        };
        assert!(good.validate(&p).is_ok());

        let not_chain = ChainFamily {
            chains: vec![vec![0, 1]],
        };
        assert_eq!(
            not_chain.validate(&p),
            Err(ChainFamilyError::NotAChain { chain: 0 })
        );

        let overlap = ChainFamily {
            chains: vec![vec![0], vec![0]],
        };
        assert_eq!(
            overlap.validate(&p),
            Err(ChainFamilyError::Overlap { element: 0 })
        );

        let crossing = ChainFamily {
            chains: vec![vec![0], vec![1]],
        };
        assert!(matches!(
            crossing.validate(&p),
            Err(ChainFamilyError::CrossComparable { .. })
        ));
    }

    #[test]
    fn height_times_width_bounds_size() {
        let cases = [
            Poset::chain(6),
            Poset::antichain(6),
            diamond(),
            Poset::chain(3).disjoint_union(&Poset::antichain(3)),
        ];
        for p in cases {
            assert!(p.height() * p.width() >= p.n());
        }
    }
}
