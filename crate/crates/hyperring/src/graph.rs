//! 3-uniform hypergraphs on labeled vertices `0..n`, with the edge set stored
//! as a bitset indexed by the colexicographic rank of each sorted triple.
//!
//! The colex rank of `{i < j < k}` is `C(k,3) + C(j,2) + i`. It depends only
//! on the triple, not on the ambient vertex count, so induced subgraphs and
//! incremental construction never need re-ranking of existing edges.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::bits::Bitset;
use crate::error::{Error, Result};

#[inline]
pub const fn choose2(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

#[inline]
pub const fn choose3(n: usize) -> usize {
    if n < 3 {
        0
    } else {
        n * (n - 1) * (n - 2) / 6
    }
}

/// Colex rank of the sorted triple `{i < j < k}` among all triples drawn from
/// `0..n`.
pub fn rank_triple(i: usize, j: usize, k: usize, n: usize) -> Result<usize> {
    if !(i < j && j < k) {
        return Err(Error::RepeatedVertex(vec![i, j, k]));
    }
    if k >= n {
        return Err(Error::VertexOutOfRange { vertex: k, n });
    }
    Ok(rank_triple_unchecked(i, j, k))
}

#[inline]
pub(crate) fn rank_triple_unchecked(i: usize, j: usize, k: usize) -> usize {
    choose3(k) + choose2(j) + i
}

/// Inverse of [`rank_triple`].
pub fn unrank_triple(rank: usize, n: usize) -> Result<[usize; 3]> {
    let count = choose3(n);
    if rank >= count {
        return Err(Error::RankOutOfRange { rank, count });
    }
    Ok(unrank_triple_unchecked(rank))
}

pub(crate) fn unrank_triple_unchecked(rank: usize) -> [usize; 3] {
    // Largest k with C(k,3) <= rank, then largest j with C(j,2) <= remainder.
    let mut lo = 2usize;
    let mut hi = 3usize;
    while choose3(hi) <= rank {
        hi *= 2;
    }
    while lo + 1 < hi {
        let mid = (lo + hi) / 2;
        if choose3(mid) <= rank {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let k = lo;
    let rem = rank - choose3(k);
    let mut lo = 1usize;
    let mut hi = k;
    while lo + 1 < hi {
        let mid = (lo + hi) / 2;
        if choose2(mid) <= rem {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let j = lo;
    let i = rem - choose2(j);
    [i, j, k]
}

/// Colex rank of the unordered pair `{i < j}`.
#[inline]
pub fn rank_pair(i: usize, j: usize) -> usize {
    debug_assert!(i < j);
    choose2(j) + i
}

pub fn unrank_pair(rank: usize) -> (usize, usize) {
    let mut lo = 1usize;
    let mut hi = 2usize;
    while choose2(hi) <= rank {
        hi *= 2;
    }
    while lo + 1 < hi {
        let mid = (lo + hi) / 2;
        if choose2(mid) <= rank {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    (rank - choose2(lo), lo)
}

fn sorted3(mut t: [usize; 3]) -> Result<[usize; 3]> {
    t.sort_unstable();
    if t[0] == t[1] || t[1] == t[2] {
        return Err(Error::RepeatedVertex(t.to_vec()));
    }
    Ok(t)
}

/// A 3-uniform hypergraph on `n` labeled vertices.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TripleGraph {
    n: usize,
    edges: Bitset,
    edge_count: usize,
}

impl TripleGraph {
    pub fn new(n: usize) -> Self {
        TripleGraph {
            n,
            edges: Bitset::new(choose3(n)),
            edge_count: 0,
        }
    }

    pub fn complete(n: usize) -> Self {
        Self::from_predicate(n, |_, _, _| true)
    }

    /// Builds a graph by testing every sorted triple in colex order. The
    /// predicate is invoked exactly once per triple, in rank order.
    pub fn from_predicate(n: usize, mut f: impl FnMut(usize, usize, usize) -> bool) -> Self {
        let mut g = TripleGraph::new(n);
        let mut rank = 0usize;
        for k in 2..n {
            for j in 1..k {
                for i in 0..j {
                    if f(i, j, k) {
                        g.edges.set(rank);
                        g.edge_count += 1;
                    }
                    rank += 1;
                }
            }
        }
        g
    }

    pub fn from_edges(n: usize, edges: &[[usize; 3]]) -> Result<Self> {
        let mut g = TripleGraph::new(n);
        for &e in edges {
            if !g.add_edge(e[0], e[1], e[2])? {
                return Err(Error::DuplicateEdge(e.to_vec()));
            }
        }
        Ok(g)
    }

    /// Random 3-graph: every triple is an edge independently with
    /// probability `p`, drawn from a ChaCha stream seeded with `seed`.
    pub fn random(n: usize, p: f64, seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        Self::from_predicate(n, |_, _, _| rng.gen::<f64>() < p)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    /// Inserts `{i,j,k}` (any order); returns false if it was already present.
    pub fn add_edge(&mut self, i: usize, j: usize, k: usize) -> Result<bool> {
        let [a, b, c] = sorted3([i, j, k])?;
        let rank = rank_triple(a, b, c, self.n)?;
        if self.edges.get(rank) {
            return Ok(false);
        }
        self.edges.set(rank);
        self.edge_count += 1;
        Ok(true)
    }

    /// Membership test. Out-of-range or degenerate triples are simply not
    /// edges.
    #[inline]
    pub fn has_edge(&self, i: usize, j: usize, k: usize) -> bool {
        let (a, b, c) = if i < j {
            if j < k {
                (i, j, k)
            } else if i < k {
                (i, k, j)
            } else {
                (k, i, j)
            }
        } else if i < k {
            (j, i, k)
        } else if j < k {
            (j, k, i)
        } else {
            (k, j, i)
        };
        if a == b || b == c || c >= self.n {
            return false;
        }
        self.edges.get(rank_triple_unchecked(a, b, c))
    }

    pub fn has_edge_rank(&self, rank: usize) -> bool {
        self.edges.get(rank)
    }

    /// Removes the edge of the given colex rank if present.
    pub fn remove_edge_rank(&mut self, rank: usize) {
        if self.edges.get(rank) {
            self.edges.clear(rank);
            self.edge_count -= 1;
        }
    }

    /// Sorted edges in colex-rank order.
    pub fn edges(&self) -> Edges<'_> {
        Edges {
            graph: self,
            rank: 0,
            total: choose3(self.n),
            triple: [0, 1, 2],
        }
    }

    /// d(U) for a 1- or 2-element vertex set.
    pub fn degree(&self, u: &[usize]) -> Result<usize> {
        for &v in u {
            if v >= self.n {
                return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
            }
        }
        match u {
            [x] => Ok(self.vertex_degree(*x)),
            [x, y] => {
                if x == y {
                    return Err(Error::RepeatedVertex(vec![*x, *y]));
                }
                Ok(self.codegree(*x, *y))
            }
            _ => Err(Error::UnsupportedDegreeArity(u.len())),
        }
    }

    pub fn vertex_degree(&self, x: usize) -> usize {
        let mut d = 0;
        for j in 0..self.n {
            if j == x {
                continue;
            }
            for k in (j + 1)..self.n {
                if k != x && self.has_edge(x, j, k) {
                    d += 1;
                }
            }
        }
        d
    }

    /// Co-degree d(x,y): the number of edges containing both x and y.
    pub fn codegree(&self, x: usize, y: usize) -> usize {
        let mut d = 0;
        for z in 0..self.n {
            if z != x && z != y && self.has_edge(x, y, z) {
                d += 1;
            }
        }
        d
    }

    /// N(x,y): the vertices z with xyz an edge.
    pub fn co_neighborhood(&self, x: usize, y: usize) -> Vec<usize> {
        (0..self.n)
            .filter(|&z| z != x && z != y && self.has_edge(x, y, z))
            .collect()
    }

    pub fn co_neighborhood_bits(&self, x: usize, y: usize) -> Bitset {
        let mut b = Bitset::new(self.n);
        for z in 0..self.n {
            if z != x && z != y && self.has_edge(x, y, z) {
                b.set(z);
            }
        }
        b
    }

    /// Minimum l-degree for l in {1,2}. `None` when the graph is too small
    /// for the quantity to be defined (n < l + 1).
    pub fn min_l_degree(&self, l: usize) -> Result<Option<usize>> {
        if !(l == 1 || l == 2) {
            return Err(Error::UnsupportedDegreeArity(l));
        }
        if self.n < l + 1 {
            return Ok(None);
        }
        let mut best = usize::MAX;
        if l == 1 {
            for x in 0..self.n {
                best = best.min(self.vertex_degree(x));
            }
        } else {
            for x in 0..self.n {
                for y in (x + 1)..self.n {
                    best = best.min(self.codegree(x, y));
                    if best == 0 {
                        return Ok(Some(0));
                    }
                }
            }
        }
        Ok(Some(best))
    }

    /// The s-blow-up: each vertex v becomes clones `v*s .. v*s+s-1`; edges are
    /// all transversals of the clone classes of an original edge. Clones of
    /// the same vertex never share an edge.
    pub fn blow_up(&self, s: usize) -> Result<TripleGraph> {
        if s == 0 {
            return Err(Error::InvalidParameter("blow-up factor must be >= 1".into()));
        }
        let mut g = TripleGraph::new(self.n * s);
        for [a, b, c] in self.edges() {
            for x in 0..s {
                for y in 0..s {
                    for z in 0..s {
                        // a < b < c keeps the clone triple sorted already
                        let r = rank_triple_unchecked(a * s + x, b * s + y, c * s + z);
                        g.edges.set(r);
                        g.edge_count += 1;
                    }
                }
            }
        }
        Ok(g)
    }

    /// Subgraph induced on `s`, relabeled to `0..|s|-1` preserving order.
    pub fn induced(&self, s: &[usize]) -> Result<TripleGraph> {
        let mut sel = s.to_vec();
        sel.sort_unstable();
        for w in sel.windows(2) {
            if w[0] == w[1] {
                return Err(Error::RepeatedVertex(sel.clone()));
            }
        }
        if let Some(&max) = sel.last() {
            if max >= self.n {
                return Err(Error::VertexOutOfRange { vertex: max, n: self.n });
            }
        }
        let m = sel.len();
        Ok(TripleGraph::from_predicate(m, |i, j, k| {
            self.has_edge(sel[i], sel[j], sel[k])
        }))
    }

    /// e(G) / C(n,3); zero for graphs too small to carry any edge.
    pub fn edge_density(&self) -> f64 {
        let total = choose3(self.n);
        if total == 0 {
            return 0.0;
        }
        self.edge_count as f64 / total as f64
    }
}

impl std::fmt::Debug for TripleGraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "TripleGraph(n={}, m={})", self.n, self.edge_count)
    }
}

pub struct Edges<'a> {
    graph: &'a TripleGraph,
    rank: usize,
    total: usize,
    triple: [usize; 3],
}

impl Iterator for Edges<'_> {
    type Item = [usize; 3];

    fn next(&mut self) -> Option<[usize; 3]> {
        while self.rank < self.total {
            // skip empty words wholesale
            if self.rank & 63 == 0 {
                while self.rank < self.total && self.graph.edges.word(self.rank >> 6) == 0 {
                    self.rank += 64;
                }
                if self.rank >= self.total {
                    return None;
                }
                self.triple = unrank_triple_unchecked(self.rank);
            }
            let hit = self.graph.edges.get(self.rank);
            let out = self.triple;
            self.rank += 1;
            if self.rank < self.total {
                let [i, j, k] = self.triple;
                self.triple = if i + 1 < j {
                    [i + 1, j, k]
                } else if j + 1 < k {
                    [0, j + 1, k]
                } else {
                    [0, 1, k + 1]
                };
            }
            if hit {
                return Some(out);
            }
        }
        None
    }
}

/// A k-uniform hypergraph; only what projective-geometry generation needs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KGraph {
    n: usize,
    k: usize,
    edges: Vec<Vec<usize>>,
}

impl KGraph {
    pub fn from_edges(n: usize, k: usize, edges: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = std::collections::BTreeSet::new();
        for e in &edges {
            if e.len() != k || e.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::InvalidParameter(format!(
                    "edge {e:?} is not a strictly increasing {k}-tuple"
                )));
            }
            if let Some(&max) = e.last() {
                if max >= n {
                    return Err(Error::VertexOutOfRange { vertex: max, n });
                }
            }
            if !seen.insert(e.clone()) {
                return Err(Error::DuplicateEdge(e.clone()));
            }
        }
        Ok(KGraph { n, k, edges })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    /// Number of edges containing both u and v.
    pub fn pair_coverage(&self, u: usize, v: usize) -> usize {
        self.edges
            .iter()
            .filter(|e| e.contains(&u) && e.contains(&v))
            .count()
    }

    pub fn to_triple_graph(&self) -> Result<TripleGraph> {
        if self.k != 3 {
            return Err(Error::InvalidParameter(format!(
                "cannot view a {}-graph as a 3-graph",
                self.k
            )));
        }
        let triples: Vec<[usize; 3]> = self.edges.iter().map(|e| [e[0], e[1], e[2]]).collect();
        TripleGraph::from_edges(self.n, &triples)
    }
}

/// An edge-preserving injection of a pattern's vertices into a host's.
/// Non-edges need not be preserved: this witnesses subgraph containment,
/// not induced containment.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Embedding {
    map: Vec<usize>,
}

impl Embedding {
    pub fn new(map: Vec<usize>) -> Self {
        Embedding { map }
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn apply(&self, pattern_vertex: usize) -> usize {
        self.map[pattern_vertex]
    }

    /// Independent re-check: injective, in range, and every pattern edge maps
    /// onto a host edge.
    pub fn verify(&self, pattern: &TripleGraph, host: &TripleGraph) -> bool {
        if self.map.len() != pattern.n() {
            return false;
        }
        let mut seen = vec![false; host.n()];
        for &v in &self.map {
            if v >= host.n() || seen[v] {
                return false;
            }
            seen[v] = true;
        }
        pattern
            .edges()
            .all(|[a, b, c]| host.has_edge(self.map[a], self.map[b], self.map[c]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn rank_examples() {
        assert_eq!(rank_triple(0, 1, 2, 5).unwrap(), 0);
        assert_eq!(rank_triple(2, 3, 4, 5).unwrap(), 9);
        assert!(rank_triple(0, 1, 5, 5).is_err());
        assert!(rank_triple(1, 1, 2, 5).is_err());
        assert!(unrank_triple(10, 5).is_err());
    }

    #[test]
    fn rank_roundtrip_n8() {
        for r in 0..choose3(8) {
            let [i, j, k] = unrank_triple(r, 8).unwrap();
            assert_eq!(rank_triple(i, j, k, 8).unwrap(), r);
        }
    }

    #[test]
    fn pair_rank_roundtrip() {
        for r in 0..choose2(20) {
            let (i, j) = unrank_pair(r);
            assert_eq!(rank_pair(i, j), r);
        }
    }

    #[test]
    fn degrees_on_complete_and_empty() {
        let k5 = TripleGraph::complete(5);
        assert_eq!(k5.edge_count(), 10);
        for x in 0..5 {
            for y in (x + 1)..5 {
                assert_eq!(k5.codegree(x, y), 3);
            }
        }
        let empty = TripleGraph::new(5);
        assert_eq!(empty.degree(&[0, 1]).unwrap(), 0);
        assert!(empty.degree(&[0, 0]).is_err());
        assert!(empty.degree(&[0, 1, 2]).is_err());
    }

    #[test]
    fn min_degree_undefined_when_too_small() {
        let g = TripleGraph::new(2);
        assert_eq!(g.min_l_degree(2).unwrap(), None);
        assert_eq!(g.min_l_degree(1).unwrap(), Some(0));
        assert!(g.min_l_degree(3).is_err());
        let k6 = TripleGraph::complete(6);
        assert_eq!(k6.min_l_degree(2).unwrap(), Some(4));
    }

    #[test]
    fn tiny_graphs_are_legal() {
        for n in 0..3 {
            let g = TripleGraph::new(n);
            assert_eq!(g.edge_count(), 0);
            assert_eq!(g.edge_density(), 0.0);
        }
    }

    #[test]
    fn blow_up_single_edge() {
        let g = TripleGraph::from_edges(3, &[[0, 1, 2]]).unwrap();
        let b = g.blow_up(2).unwrap();
        assert_eq!(b.n(), 6);
        assert_eq!(b.edge_count(), 8);
        // no edge among clones of fewer than 3 originals
        assert!(!b.has_edge(0, 1, 2));
        assert!(b.has_edge(0, 2, 4));
        let id = g.blow_up(1).unwrap();
        assert_eq!(id, g);
        assert!(g.blow_up(0).is_err());
    }

    #[test]
    fn induced_relabels_in_order() {
        let g = TripleGraph::from_edges(6, &[[1, 3, 5], [0, 1, 2]]).unwrap();
        let h = g.induced(&[1, 3, 5]).unwrap();
        assert_eq!(h.n(), 3);
        assert_eq!(h.edge_count(), 1);
        assert!(h.has_edge(0, 1, 2));
        assert!(g.induced(&[1, 1, 2]).is_err());
        assert!(g.induced(&[4, 5, 6]).is_err());
    }

    #[test]
    fn edges_iterator_matches_membership() {
        let g = TripleGraph::random(9, 0.35, 7);
        let listed: Vec<_> = g.edges().collect();
        assert_eq!(listed.len(), g.edge_count());
        for [i, j, k] in &listed {
            assert!(g.has_edge(*i, *j, *k));
        }
        // colex order
        for w in listed.windows(2) {
            let ra = rank_triple_unchecked(w[0][0], w[0][1], w[0][2]);
            let rb = rank_triple_unchecked(w[1][0], w[1][1], w[1][2]);
            assert!(ra < rb);
        }
    }

    #[test]
    fn kgraph_validation() {
        assert!(KGraph::from_edges(4, 3, vec![vec![0, 1, 2], vec![0, 1, 2]]).is_err());
        assert!(KGraph::from_edges(4, 3, vec![vec![0, 2, 1]]).is_err());
        assert!(KGraph::from_edges(4, 3, vec![vec![0, 1, 4]]).is_err());
        let g = KGraph::from_edges(4, 3, vec![vec![0, 1, 2], vec![1, 2, 3]]).unwrap();
        assert_eq!(g.pair_coverage(1, 2), 2);
        assert_eq!(g.to_triple_graph().unwrap().edge_count(), 2);
    }

    proptest! {
        #[test]
        fn handshake(seed in 0u64..500, n in 3usize..10) {
            let g = TripleGraph::random(n, 0.4, seed);
            let degree_sum: usize = (0..n).map(|x| g.vertex_degree(x)).sum();
            prop_assert_eq!(degree_sum, 3 * g.edge_count());
            let mut cod_sum = 0usize;
            for x in 0..n {
                for y in (x + 1)..n {
                    cod_sum += g.codegree(x, y);
                    prop_assert_eq!(g.codegree(x, y), g.co_neighborhood(x, y).len());
                }
            }
            prop_assert_eq!(cod_sum, 3 * g.edge_count());
        }

        #[test]
        fn rank_bijection(r in 0usize..choose3(40)) {
            let [i, j, k] = unrank_triple(r, 40).unwrap();
            prop_assert!(i < j && j < k && k < 40);
            prop_assert_eq!(rank_triple(i, j, k, 40).unwrap(), r);
        }
    }
}
