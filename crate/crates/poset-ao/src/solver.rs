//! Exact computation of `ao`: the largest vertex set inducing a disjoint
//! union of cliques (equivalently, `n` minus a minimum cluster vertex
//! deletion set).
//!
//! The solver branches on induced paths on three vertices: a cluster graph
//! is exactly an induced-P3-free graph, so while a P3 exists one of its
//! three vertices must be deleted. Pruning uses a greedily packed family of
//! vertex-disjoint induced P3s (each forces at least one deletion) against
//! the best known solution, which is seeded by a greedy heuristic. A
//! subset-enumeration oracle provides an independent cross-check at small
//! sizes.

use crate::bits::BitSet;
use crate::graph::SimpleGraph;
use crate::poset::{ChainFamily, Poset};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SolverError {
    /// The branch-and-bound search hit the configured node limit. No result
    /// is returned in this case; the solver never approximates.
    NodeLimitExceeded { limit: u64 },
    /// The instance exceeds the brute-force guard.
    TooLarge { n: usize, max: usize },
}

impl std::fmt::Display for SolverError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SolverError::NodeLimitExceeded { limit } => {
                write!(f, "search exceeded the node limit of {limit}")
            }
            SolverError::TooLarge { n, max } => {
                write!(f, "instance has {n} vertices, brute force is capped at {max}")
            }
        }
    }
}

impl std::error::Error for SolverError {}

/// Knobs for the exact solver and the brute-force oracle.
#[derive(Clone, Debug)]
pub struct SolverConfig {
    /// Guard for [`ao_brute`]; at most 24.
    pub max_brute_n: usize,
    /// Branch node budget for [`ao_exact`]. Hitting it is an error, never a
    /// silent approximation.
    pub node_limit: u64,
    /// Forces a sequential, reproducible search. The search is sequential
    /// either way in this implementation, so witnesses are always
    /// deterministic; the flag is part of the configuration contract.
    pub deterministic: bool,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            max_brute_n: 20,
            node_limit: 100_000_000,
            deterministic: true,
        }
    }
}

/// An exact `ao` value together with its certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AoResult {
    pub value: usize,
    /// Vertices inducing a disjoint union of cliques, sorted.
    pub witness: Vec<usize>,
    /// The complementary deletion set, sorted.
    pub deletions: Vec<usize>,
}

impl AoResult {
    /// Re-checks the certificate: the witness induces a cluster graph, has
    /// the claimed size, and partitions the vertices with `deletions`.
    pub fn validate(&self, g: &SimpleGraph) -> bool {
        if self.witness.len() != self.value
            || self.witness.len() + self.deletions.len() != g.n()
        {
            return false;
        }
        let mut seen = vec![false; g.n()];
        for &v in self.witness.iter().chain(&self.deletions) {
            if v >= g.n() || seen[v] {
                return false;
            }
            seen[v] = true;
        }
        is_cluster(&g.induced(&self.witness)).is_none()
    }
}

/// Returns `None` iff every connected component of `g` is a clique;
/// otherwise returns the first induced P3 `(u, v, w)` (edges `uv`, `vw`,
/// non-edge `uw`) in lexicographic order.
pub fn is_cluster(g: &SimpleGraph) -> Option<(usize, usize, usize)> {
    find_p3(g, &BitSet::full(g.n()))
}

fn find_p3(g: &SimpleGraph, mask: &BitSet) -> Option<(usize, usize, usize)> {
    for u in mask.iter() {
        for v in g.neighbors(u).intersection(mask).iter() {
            // w adjacent to v, not adjacent to u, inside the mask
            let mut cand = g.neighbors(v).intersection(mask);
            cand.difference_with(g.neighbors(u));
            for w in cand.iter() {
                if w != u {
                    return Some((u, v, w));
                }
            }
        }
    }
    None
}

/// Greedy vertex-disjoint packing of induced P3s within `mask`. Each packed
/// P3 forces at least one deletion, so the count is a lower bound on the
/// deletions still needed inside `mask`.
fn p3_packing_bound(g: &SimpleGraph, mask: &BitSet) -> usize {
    let mut rest = mask.clone();
    let mut count = 0;
    while let Some((u, v, w)) = find_p3(g, &rest) {
        rest.remove(u);
        rest.remove(v);
        rest.remove(w);
        count += 1;
    }
    count
}

/// Feasible starting solution: repeatedly delete the highest-degree vertex
/// of some induced P3.
fn greedy_cluster_mask(g: &SimpleGraph, mask: &BitSet) -> BitSet {
    let mut cur = mask.clone();
    while let Some((u, v, w)) = find_p3(g, &cur) {
        let deg = |x: usize| g.neighbors(x).intersection_count(&cur);
        let mut victim = u;
        for x in [v, w] {
            if deg(x) > deg(victim) {
                victim = x;
            }
        }
        cur.remove(victim);
    }
    cur
}

struct Search<'a> {
    g: &'a SimpleGraph,
    best_mask: BitSet,
    best_size: usize,
    nodes: u64,
    node_limit: u64,
}

impl Search<'_> {
    fn run(&mut self, mask: BitSet) -> Result<(), SolverError> {
        self.nodes += 1;
        if self.nodes > self.node_limit {
            return Err(SolverError::NodeLimitExceeded {
                limit: self.node_limit,
            });
        }

        let Some((u, v, w)) = find_p3(self.g, &mask) else {
            let size = mask.count();
            if size > self.best_size {
                self.best_size = size;
                self.best_mask = mask;
            }
            return Ok(());
        };

        let size = mask.count();
        // Any solution below this node keeps at most size - packing vertices.
        if size - p3_packing_bound(self.g, &mask) <= self.best_size {
            return Ok(());
        }

        // Highest restricted degree first; ties by index.
        let mut order = [u, v, w];
        order.sort_unstable_by(|&a, &b| {
            let da = self.g.neighbors(a).intersection_count(&mask);
            let db = self.g.neighbors(b).intersection_count(&mask);
            db.cmp(&da).then(a.cmp(&b))
        });
        for x in order {
            if size - 1 <= self.best_size {
                break;
            }
            let mut next = mask.clone();
            next.remove(x);
            self.run(next)?;
        }
        Ok(())
    }
}

/// Exact maximum induced union of cliques, with a witness.
pub fn ao_exact(g: &SimpleGraph, cfg: &SolverConfig) -> Result<AoResult, SolverError> {
    let full = BitSet::full(g.n());
    let start = greedy_cluster_mask(g, &full);
    let mut search = Search {
        g,
        best_size: start.count(),
        best_mask: start,
        nodes: 0,
        node_limit: cfg.node_limit,
    };
    search.run(full)?;

    let witness: Vec<usize> = search.best_mask.iter().collect();
    let deletions: Vec<usize> = (0..g.n()).filter(|&v| !search.best_mask.contains(v)).collect();
    let result = AoResult {
        value: search.best_size,
        witness,
        deletions,
    };
    debug_assert!(result.validate(g));
    Ok(result)
}

/// Independent oracle: enumerates vertex subsets in decreasing size and
/// returns the first cluster-inducing one. Exponential; guarded by
/// `cfg.max_brute_n`.
pub fn ao_brute(g: &SimpleGraph, cfg: &SolverConfig) -> Result<usize, SolverError> {
    let max = cfg.max_brute_n.min(24);
    let n = g.n();
    if n > max {
        return Err(SolverError::TooLarge { n, max });
    }
    if n == 0 {
        return Ok(0);
    }

    // Word-sized adjacency for fast subset tests.
    let adj: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, w| m | 1 << w))
        .collect();
    let closed: Vec<u32> = (0..n).map(|v| adj[v] | 1 << v).collect();

    let is_cluster_mask = |mask: u32| -> bool {
        // Cluster iff every edge joins vertices with equal closed
        // neighborhoods inside the mask.
        let mut rest = mask;
        while rest != 0 {
            let u = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let mut nb = adj[u] & rest; // v > u only, each edge checked once
            while nb != 0 {
                let v = nb.trailing_zeros() as usize;
                nb &= nb - 1;
                if closed[u] & mask != closed[v] & mask {
                    return false;
                }
            }
        }
        true
    };

    for k in (0..=n).rev() {
        // Gosper's hack over k-subsets of n bits.
        if k == 0 {
            return Ok(0);
        }
        let limit = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
        let mut mask = (1u32 << k) - 1;
        loop {
            if is_cluster_mask(mask) {
                return Ok(k);
            }
            if mask == (limit >> (n - k)) << (n - k) {
                break; // last k-subset
            }
            let c = mask & mask.wrapping_neg();
            let r = mask + c;
            mask = (((r ^ mask) >> 2) / c) | r;
        }
    }
    Ok(0)
}

/// `ao` of a poset: the solver runs on the comparability graph and the
/// witness is decomposed into an independent family of chains (one chain
/// per clique component).
pub fn ao_poset(poset: &Poset, cfg: &SolverConfig) -> Result<(AoResult, ChainFamily), SolverError> {
    let g = poset.comparability_graph();
    let result = ao_exact(&g, cfg)?;

    // Clique components of the witness are totally ordered element sets;
    // sort each by the number of elements below to list chains bottom-up.
    let sub = g.induced(&result.witness);
    let (comp, count) = sub.components();
    let mut chains: Vec<Vec<usize>> = vec![Vec::new(); count];
    for (i, &v) in result.witness.iter().enumerate() {
        chains[comp[i]].push(v);
    }
    for chain in &mut chains {
        chain.sort_unstable_by_key(|&v| poset.below(v).count());
    }
    let family = ChainFamily { chains };
    debug_assert!(family.validate(poset).is_ok());
    Ok((result, family))
}

/// `(lo, hi)` with `lo <= ao(P) <= hi`: the width/height lower bounds
/// together with the pigeonhole bound `ceil(sqrt(n))`, against the trivial
/// product upper bound.
pub fn ao_bounds(poset: &Poset) -> (usize, usize) {
    let w = poset.width();
    let h = poset.height();
    let lo = w.max(h).max(ceil_sqrt(poset.n()));
    (lo, w * h)
}

/// Smallest s with s*s >= n.
pub fn ceil_sqrt(n: usize) -> usize {
    let mut s = (n as f64).sqrt() as usize;
    while s * s < n {
        s += 1;
    }
    while s > 0 && (s - 1) * (s - 1) >= n {
        s -= 1;
    }
    s
}

/// Maximum independent set size by include/exclude branching. Exponential;
/// intended for cross-checks on small graphs.
pub fn alpha_brute(g: &SimpleGraph) -> usize {
    fn rec(g: &SimpleGraph, mask: &BitSet) -> usize {
        let Some(v) = mask.first() else { return 0 };
        // include v
        let mut without_nbhd = mask.clone();
        without_nbhd.remove(v);
        without_nbhd.difference_with(g.neighbors(v));
        let take = 1 + rec(g, &without_nbhd);
        // exclude v
        let mut rest = mask.clone();
        rest.remove(v);
        take.max(rec(g, &rest))
    }
    rec(g, &BitSet::full(g.n()))
}

/// Maximum clique size (independent set of the complement).
pub fn omega_brute(g: &SimpleGraph) -> usize {
    alpha_brute(&g.complement())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::Poset;

    fn path(n: usize) -> SimpleGraph {
        SimpleGraph::from_edges(n, &(0..n - 1).map(|i| (i, i + 1)).collect::<Vec<_>>())
    }

    fn cycle(n: usize) -> SimpleGraph {
        let mut edges: Vec<(usize, usize)> = (0..n - 1).map(|i| (i, i + 1)).collect();
        edges.push((n - 1, 0));
        SimpleGraph::from_edges(n, &edges)
    }

    #[test]
    fn cluster_detection() {
        let two_triangles = SimpleGraph::from_edges(
            6,
            &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)],
        );
        assert_eq!(is_cluster(&two_triangles), None);
        assert_eq!(is_cluster(&path(3)), Some((0, 1, 2)));
        assert!(is_cluster(&cycle(5)).is_some());
        assert_eq!(is_cluster(&SimpleGraph::new(0)), None);
    }

    #[test]
    fn exact_on_named_graphs() {
        let cfg = SolverConfig::default();
        let k5 = SimpleGraph::complete(5);
        assert_eq!(ao_exact(&k5, &cfg).unwrap().value, 5);

        let empty7 = SimpleGraph::new(7);
        assert_eq!(ao_exact(&empty7, &cfg).unwrap().value, 7);

        // Three disjoint triangles keep all nine vertices.
        let mut edges = Vec::new();
        for c in 0..3 {
            let b = 3 * c;
            edges.extend_from_slice(&[(b, b + 1), (b + 1, b + 2), (b, b + 2)]);
        }
        let g = SimpleGraph::from_edges(9, &edges);
        let res = ao_exact(&g, &cfg).unwrap();
        assert_eq!(res.value, 9);
        assert!(res.validate(&g));
    }

    #[test]
    fn brute_on_named_graphs() {
        let cfg = SolverConfig::default();
        assert_eq!(ao_brute(&path(4), &cfg).unwrap(), 3);
        assert_eq!(ao_brute(&SimpleGraph::complete(3), &cfg).unwrap(), 3);
        let c5 = cycle(5);
        assert_eq!(
            ao_brute(&c5, &cfg).unwrap(),
            ao_exact(&c5, &cfg).unwrap().value
        );
    }

    #[test]
    fn brute_guard() {
        let cfg = SolverConfig {
            max_brute_n: 4,
            ..SolverConfig::default()
        };
        assert!(matches!(
            ao_brute(&SimpleGraph::new(5), &cfg),
            Err(SolverError::TooLarge { .. })
        ));
    }

    #[test]
    fn node_limit_is_an_error() {
        // Even the root node exceeds a zero budget.
        let cfg = SolverConfig {
            node_limit: 0,
            ..SolverConfig::default()
        };
        assert!(matches!(
            ao_exact(&path(4), &cfg),
            Err(SolverError::NodeLimitExceeded { .. })
        ));
    }

    #[test]
    fn poset_witness_is_a_chain_family() {
        let cfg = SolverConfig::default();
        let (res, family) = ao_poset(&Poset::chain(6), &cfg).unwrap();
        assert_eq!(res.value, 6);
        assert_eq!(family.chains.len(), 1);
        assert!(family.validate(&Poset::chain(6)).is_ok());
    }

    #[test]
    fn poset_value_survives_inversion() {
        let p = Poset::from_cover_relations(5, &[(0, 2), (0, 3), (1, 3), (3, 4)]).unwrap();
        let cfg = SolverConfig::default();
        let a = ao_poset(&p, &cfg).unwrap().0.value;
        let b = ao_poset(&p.invert(), &cfg).unwrap().0.value;
        assert_eq!(a, b);
    }

    #[test]
    fn bounds_bracket_the_value() {
        let cfg = SolverConfig::default();
        let cases = [
            Poset::chain(5),
            Poset::antichain(5),
            Poset::chain(3).disjoint_union(&Poset::antichain(2)),
        ];
        for p in cases {
            let (lo, hi) = ao_bounds(&p);
            let v = ao_poset(&p, &cfg).unwrap().0.value;
            assert!(lo <= v && v <= hi, "bounds ({lo}, {hi}) vs value {v}");
        }
    }

    #[test]
    fn deterministic_witnesses() {
        let g = cycle(6);
        let cfg = SolverConfig::default();
        let a = ao_exact(&g, &cfg).unwrap();
        let b = ao_exact(&g, &cfg).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn ceil_sqrt_values() {
        let expect = [(0, 0), (1, 1), (2, 2), (4, 2), (5, 3), (9, 3), (10, 4), (16, 4)];
        for (n, s) in expect {
            assert_eq!(ceil_sqrt(n), s, "ceil_sqrt({n})");
        }
    }

    #[test]
    fn value_is_additive_over_disjoint_union() {
        let cfg = SolverConfig::default();
        let parts = [path(4), cycle(5), SimpleGraph::complete(3)];
        for a in &parts {
            for b in &parts {
                let whole = a.disjoint_union(b);
                let va = ao_exact(a, &cfg).unwrap().value;
                let vb = ao_exact(b, &cfg).unwrap().value;
                assert_eq!(ao_exact(&whole, &cfg).unwrap().value, va + vb);
            }
        }
    }

    #[test]
    fn alpha_omega_brute() {
        let c5 = cycle(5);
        assert_eq!(alpha_brute(&c5), 2);
        assert_eq!(omega_brute(&c5), 2);
        assert_eq!(alpha_brute(&SimpleGraph::complete(4)), 1);
        assert_eq!(omega_brute(&SimpleGraph::complete(4)), 4);
    }
}
