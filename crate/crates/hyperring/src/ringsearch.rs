//! Ring-family search via the auxiliary pair digraph.
//!
//! The pair digraph D of a 3-graph G has one node per 2-subset {u,v} of
//! V(G) and an arc ({u,v}, {u',v'}) exactly when uvu' and uvv' are both
//! edges; equivalently, the out-neighbors of {u,v} are the 2-subsets of the
//! co-neighborhood N(u,v). Directed cycles in D are exactly the
//! surjectively-labeled ring members of G, so the minimum-out-degree girth
//! bound turns co-degree lower bounds into short rings.
//!
//! The same device lifted to ordered pairs of disjoint 2-subsets finds
//! 2-blow-ups of rings, which the Fano pipeline consumes.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::collections::VecDeque;

use crate::bits::Bitset;
use crate::error::{Error, Result};
use crate::graph::{choose2, rank_pair, unrank_pair, TripleGraph};

/// A directed graph on nodes `0..n` with sorted out-adjacency lists.
#[derive(Clone, Debug)]
pub struct Digraph {
    adj: Vec<Vec<u32>>,
}

impl Digraph {
    pub fn new(n: usize) -> Self {
        Digraph {
            adj: vec![Vec::new(); n],
        }
    }

    pub fn from_arcs(n: usize, arcs: &[(usize, usize)]) -> Self {
        let mut d = Digraph::new(n);
        for &(u, v) in arcs {
            d.add_arc(u, v);
        }
        d
    }

    /// Random digraph: every ordered pair u != v is an arc independently
    /// with probability `p`.
    pub fn random(n: usize, p: f64, seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut d = Digraph::new(n);
        for u in 0..n {
            for v in 0..n {
                if u != v && rng.gen::<f64>() < p {
                    d.adj[u].push(v as u32);
                }
            }
        }
        d
    }

    pub fn add_arc(&mut self, u: usize, v: usize) {
        let v = v as u32;
        match self.adj[u].binary_search(&v) {
            Ok(_) => {}
            Err(pos) => self.adj[u].insert(pos, v),
        }
    }

    fn push_arc_ascending(&mut self, u: usize, v: u32) {
        debug_assert!(self.adj[u].last().is_none_or(|&last| last < v));
        self.adj[u].push(v);
    }

    pub fn node_count(&self) -> usize {
        self.adj.len()
    }

    pub fn out_degree(&self, u: usize) -> usize {
        self.adj[u].len()
    }

    pub fn out_neighbors(&self, u: usize) -> &[u32] {
        &self.adj[u]
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&(v as u32)).is_ok()
    }

    pub fn min_out_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn is_acyclic(&self) -> bool {
        let n = self.node_count();
        let mut indeg = vec![0usize; n];
        for u in 0..n {
            for &v in &self.adj[u] {
                indeg[v as usize] += 1;
            }
        }
        let mut queue: VecDeque<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
        let mut seen = 0usize;
        while let Some(u) = queue.pop_front() {
            seen += 1;
            for &v in &self.adj[u] {
                indeg[v as usize] -= 1;
                if indeg[v as usize] == 0 {
                    queue.push_back(v as usize);
                }
            }
        }
        seen == n
    }

    fn reverse(&self) -> Digraph {
        let mut r = Digraph::new(self.node_count());
        for u in 0..self.node_count() {
            for &v in &self.adj[u] {
                r.adj[v as usize].push(u as u32);
            }
        }
        for list in &mut r.adj {
            list.sort_unstable();
        }
        r
    }

    /// Length of the shortest cycle through `s` that stays on nodes >= s,
    /// if one of length <= `limit` exists. BFS; the first closing arc seen
    /// closes a minimum-length cycle.
    fn cycle_len_through(&self, s: usize, limit: usize, dist: &mut [u32]) -> Option<usize> {
        for d in dist.iter_mut() {
            *d = u32::MAX;
        }
        dist[s] = 0;
        let mut queue = VecDeque::new();
        queue.push_back(s as u32);
        while let Some(u) = queue.pop_front() {
            let d = dist[u as usize] as usize;
            if d + 1 > limit {
                return None;
            }
            for &v in &self.adj[u as usize] {
                let v = v as usize;
                if v == s {
                    return Some(d + 1);
                }
                if v > s && dist[v] == u32::MAX {
                    dist[v] = (d + 1) as u32;
                    queue.push_back(v as u32);
                }
            }
        }
        None
    }

    /// A minimum-length directed cycle, restricted to length <= `cap` when
    /// given. Among minimum-length cycles the returned one is the
    /// lexicographically smallest node sequence started at its smallest
    /// node.
    pub fn shortest_cycle(&self, cap: Option<usize>) -> Option<DirectedCycle> {
        let n = self.node_count();
        if n == 0 {
            return None;
        }
        let cap = cap.unwrap_or(n);
        let mut dist = vec![u32::MAX; n];
        let mut best_len = usize::MAX;
        let mut best_start = None;
        for s in 0..n {
            let limit = cap.min(best_len.saturating_sub(1));
            if limit < 2 {
                break;
            }
            if let Some(len) = self.cycle_len_through(s, limit, &mut dist) {
                best_len = len;
                best_start = Some(s);
                if len == 2 {
                    break;
                }
            }
        }
        let s = best_start?;
        Some(self.extract_canonical_cycle(s, best_len))
    }

    /// Builds the lex-smallest girth cycle through `s` over nodes >= s.
    ///
    /// On a minimum-length cycle every prefix and suffix from s is a
    /// shortest path (otherwise a shorter closed walk, hence a shorter
    /// cycle, would exist), so a node can sit at position l only if its
    /// BFS distances satisfy dist_from == l and dist_to == len - l; and
    /// any such choice extends to a full simple cycle. Greedy smallest
    /// choice per position is therefore safe and lexicographically minimal.
    fn extract_canonical_cycle(&self, s: usize, len: usize) -> DirectedCycle {
        let n = self.node_count();
        let dist_from = self.bfs_restricted(s, false, n);
        let dist_to = self.bfs_restricted(s, true, n);
        let mut nodes = vec![s as u32];
        let mut cur = s;
        for l in 1..len {
            let next = self.adj[cur]
                .iter()
                .map(|&v| v as usize)
                .find(|&v| {
                    v > s && dist_from[v] as usize == l && dist_to[v] as usize == len - l
                })
                .expect("girth cycle extraction cannot dead-end");
            nodes.push(next as u32);
            cur = next;
        }
        debug_assert!(self.has_arc(cur, s));
        DirectedCycle { nodes }
    }

    fn bfs_restricted(&self, s: usize, reversed: bool, n: usize) -> Vec<u32> {
        let rev;
        let adj = if reversed {
            rev = self.reverse();
            &rev.adj
        } else {
            &self.adj
        };
        let mut dist = vec![u32::MAX; n];
        dist[s] = 0;
        let mut queue = VecDeque::new();
        queue.push_back(s as u32);
        while let Some(u) = queue.pop_front() {
            for &v in &adj[u as usize] {
                let v = v as usize;
                if v > s && dist[v] == u32::MAX {
                    dist[v] = dist[u as usize] + 1;
                    queue.push_back(v as u32);
                }
            }
        }
        dist
    }
}

/// A simple directed cycle, stored as its node sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DirectedCycle {
    pub nodes: Vec<u32>,
}

impl DirectedCycle {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn validate(&self, d: &Digraph) -> Result<()> {
        if self.nodes.len() < 2 {
            return Err(Error::Integrity("cycle shorter than 2".into()));
        }
        let mut sorted = self.nodes.clone();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Integrity("cycle repeats a node".into()));
        }
        for i in 0..self.nodes.len() {
            let u = self.nodes[i] as usize;
            let v = self.nodes[(i + 1) % self.nodes.len()] as usize;
            if !d.has_arc(u, v) {
                return Err(Error::Integrity(format!("missing arc {u} -> {v}")));
            }
        }
        Ok(())
    }
}

/// Minimum-out-degree girth bound check: with r = min out-degree >= 1 an
/// n-node digraph has a cycle of length at most 2n/(r+1).
#[derive(Clone, Debug, PartialEq)]
pub struct CsReport {
    pub node_count: usize,
    pub min_out_degree: usize,
    pub girth: Option<usize>,
    pub bound: Option<usize>,
    pub holds: bool,
}

pub fn verify_cs_bound(d: &Digraph) -> CsReport {
    let n = d.node_count();
    let r = d.min_out_degree();
    let girth = d.shortest_cycle(None).map(|c| c.len());
    if r == 0 {
        return CsReport {
            node_count: n,
            min_out_degree: 0,
            girth,
            bound: None,
            holds: true,
        };
    }
    let bound = 2 * n / (r + 1);
    CsReport {
        node_count: n,
        min_out_degree: r,
        girth,
        bound: Some(bound),
        holds: girth.is_some_and(|g| g <= bound),
    }
}

/// The pair digraph of a 3-graph. Nodes are colex-ranked 2-subsets of the
/// host's vertices.
pub struct PairDigraph {
    n_host: usize,
    graph: Digraph,
}

impl PairDigraph {
    pub fn n_host(&self) -> usize {
        self.n_host
    }

    pub fn digraph(&self) -> &Digraph {
        &self.graph
    }

    pub fn node_pair(&self, node: usize) -> (usize, usize) {
        unrank_pair(node)
    }
}

pub fn build_pair_digraph(g: &TripleGraph) -> PairDigraph {
    let n = g.n();
    let mut d = Digraph::new(choose2(n));
    for j in 1..n {
        for i in 0..j {
            let node = rank_pair(i, j);
            let w = g.co_neighborhood(i, j);
            // out-neighbors are exactly the 2-subsets of N(i,j); with w
            // ascending, colex pair ranks come out ascending too
            for (bi, &b) in w.iter().enumerate() {
                for &a in &w[..bi] {
                    d.push_arc_ascending(node, rank_pair(a, b) as u32);
                }
            }
        }
    }
    PairDigraph { n_host: n, graph: d }
}

/// A ring-family member located in a host: `pairs[i]` carries (x_i, y_i),
/// and `edges` lists the 2t defining host triples in position order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingStarWitness {
    pub t: usize,
    pub pairs: Vec<(usize, usize)>,
    pub edges: Vec<[usize; 3]>,
}

/// Converts a cycle of the pair digraph into the ring member it encodes,
/// verifying every listed triple against the host.
pub fn cycle_to_ring_star(g: &TripleGraph, cycle: &DirectedCycle) -> Result<RingStarWitness> {
    let t = cycle.len();
    if t < 2 {
        return Err(Error::Integrity("ring cycles have length >= 2".into()));
    }
    let pairs: Vec<(usize, usize)> = cycle.nodes.iter().map(|&r| unrank_pair(r as usize)).collect();
    let mut edges = Vec::with_capacity(2 * t);
    for i in 0..t {
        let (x, y) = pairs[i];
        let (nx, ny) = pairs[(i + 1) % t];
        for z in [nx, ny] {
            let mut tri = [x, y, z];
            tri.sort_unstable();
            if !g.has_edge(tri[0], tri[1], tri[2]) {
                return Err(Error::Integrity(format!(
                    "cycle arc at position {i} is not backed by edge {tri:?}"
                )));
            }
            edges.push(tri);
        }
    }
    Ok(RingStarWitness { t, pairs, edges })
}

/// Independent re-check of a ring-star witness against a host.
pub fn verify_ring_star(g: &TripleGraph, w: &RingStarWitness) -> bool {
    if w.t < 2 || w.pairs.len() != w.t || w.edges.len() != 2 * w.t {
        return false;
    }
    let mut expect = Vec::new();
    for i in 0..w.t {
        let (x, y) = w.pairs[i];
        let (nx, ny) = w.pairs[(i + 1) % w.t];
        for z in [nx, ny] {
            if x == y || z == x || z == y {
                return false;
            }
            let mut tri = [x, y, z];
            tri.sort_unstable();
            if !g.has_edge(tri[0], tri[1], tri[2]) {
                return false;
            }
            expect.push(tri);
        }
    }
    expect == w.edges
}

/// Shortest-cycle reduction: a member of the surjective ring family with at
/// most `t_max` positions exists in `g` iff the pair digraph has a directed
/// cycle of length <= t_max; returns the witness for the shortest one.
pub fn find_ring_star(g: &TripleGraph, t_max: usize) -> Option<RingStarWitness> {
    let d = build_pair_digraph(g);
    let cycle = d.digraph().shortest_cycle(Some(t_max))?;
    Some(cycle_to_ring_star(g, &cycle).expect("cycle arcs are backed by host edges"))
}

/// An ordered pair of disjoint 2-subsets: the clone pairs (X_i, Y_i) of one
/// ring position in a 2-blow-up.
pub type PairPairNode = ((usize, usize), (usize, usize));

/// Lazy digraph on ordered pairs of disjoint 2-subsets: there is an arc
/// (A,B) -> (C,D) iff {a,b,c} is a host edge for every a in A, b in B and
/// c in C u D (16 triples). Nodes are never materialized; arc queries run
/// against cached co-neighborhood bitsets.
pub struct PairPairDigraph {
    co_bits: Vec<Bitset>,
}

pub fn build_pairpair_digraph(g: &TripleGraph) -> PairPairDigraph {
    let n = g.n();
    let mut co_bits = Vec::with_capacity(choose2(n));
    for j in 1..n {
        for i in 0..j {
            co_bits.push(g.co_neighborhood_bits(i, j));
        }
    }
    PairPairDigraph { co_bits }
}

impl PairPairDigraph {
    /// Common co-neighborhood of the four cross pairs of (A,B): exactly the
    /// vertices usable in the next ring position.
    pub fn common_core(&self, node: PairPairNode) -> Bitset {
        let ((a0, a1), (b0, b1)) = node;
        let mut w = self.pair_bits(a0, b0).clone();
        w.intersect_with(self.pair_bits(a0, b1));
        w.intersect_with(self.pair_bits(a1, b0));
        w.intersect_with(self.pair_bits(a1, b1));
        w
    }

    pub fn has_arc(&self, from: PairPairNode, to: PairPairNode) -> bool {
        let w = self.common_core(from);
        let ((c0, c1), (d0, d1)) = to;
        w.get(c0) && w.get(c1) && w.get(d0) && w.get(d1)
    }

    fn pair_bits(&self, u: usize, v: usize) -> &Bitset {
        &self.co_bits[rank_pair(u.min(v), u.max(v))]
    }
}

/// A located 2-blow-up of a ring: `positions[i]` holds the clone pairs
/// (X_i, Y_i); all 4t vertices are distinct and `edges` lists the 16t
/// defining host triples.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingBlowupWitness {
    pub t: usize,
    pub positions: Vec<PairPairNode>,
    pub edges: Vec<[usize; 3]>,
}

impl RingBlowupWitness {
    /// The 4t host vertices, in position order.
    pub fn vertices(&self) -> Vec<usize> {
        self.positions
            .iter()
            .flat_map(|&((a0, a1), (b0, b1))| [a0, a1, b0, b1])
            .collect()
    }
}

fn blowup_edges(positions: &[PairPairNode]) -> Vec<[usize; 3]> {
    let t = positions.len();
    let mut edges = Vec::with_capacity(16 * t);
    for i in 0..t {
        let ((a0, a1), (b0, b1)) = positions[i];
        let ((c0, c1), (d0, d1)) = positions[(i + 1) % t];
        for a in [a0, a1] {
            for b in [b0, b1] {
                for c in [c0, c1, d0, d1] {
                    let mut tri = [a, b, c];
                    tri.sort_unstable();
                    edges.push(tri);
                }
            }
        }
    }
    edges
}

/// Independent re-check of a blow-up witness: distinct vertices and all
/// 16t triples present.
pub fn verify_ring_blowup(g: &TripleGraph, w: &RingBlowupWitness) -> bool {
    if w.t < 2 || w.positions.len() != w.t {
        return false;
    }
    let verts = w.vertices();
    let mut sorted = verts.clone();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != 4 * w.t || sorted.last().is_some_and(|&v| v >= g.n()) {
        return false;
    }
    let expect = blowup_edges(&w.positions);
    expect == w.edges && expect.iter().all(|t| g.has_edge(t[0], t[1], t[2]))
}

/// Searches for a 2-blow-up of a ring with at most `t_max` positions and
/// pairwise vertex-disjoint positions. Tries t = 2, 3, ... in order; within
/// one t the witness is the first cycle in lexicographic node order, so the
/// result is deterministic.
pub fn find_ring_blowup(g: &TripleGraph, t_max: usize) -> Option<RingBlowupWitness> {
    if g.n() < 8 {
        return None;
    }
    // A blow-up cycle projects onto a pair-digraph cycle of the same length,
    // so an acyclic (within t_max) pair digraph settles the answer cheaply.
    let pd = build_pair_digraph(g);
    pd.digraph().shortest_cycle(Some(t_max))?;

    let pp = build_pairpair_digraph(g);
    let n = g.n();
    for t in 2..=t_max {
        let mut dfs = BlowupDfs {
            pp: &pp,
            t,
            used: vec![false; n],
            path: Vec::with_capacity(t),
        };
        // start nodes in lex order (a0, a1, b0, b1)
        for a0 in 0..n {
            for a1 in (a0 + 1)..n {
                for b0 in 0..n {
                    if b0 == a0 || b0 == a1 {
                        continue;
                    }
                    for b1 in (b0 + 1)..n {
                        if b1 == a0 || b1 == a1 {
                            continue;
                        }
                        let start = ((a0, a1), (b0, b1));
                        for v in [a0, a1, b0, b1] {
                            dfs.used[v] = true;
                        }
                        dfs.path.push(start);
                        let hit = dfs.extend();
                        if hit {
                            let positions = dfs.path.clone();
                            let edges = blowup_edges(&positions);
                            debug_assert!(edges.iter().all(|t| g.has_edge(t[0], t[1], t[2])));
                            return Some(RingBlowupWitness { t, positions, edges });
                        }
                        dfs.path.pop();
                        for v in [a0, a1, b0, b1] {
                            dfs.used[v] = false;
                        }
                    }
                }
            }
        }
    }
    None
}

struct BlowupDfs<'a> {
    pp: &'a PairPairDigraph,
    t: usize,
    used: Vec<bool>,
    path: Vec<PairPairNode>,
}

impl BlowupDfs<'_> {
    fn extend(&mut self) -> bool {
        let cur = *self.path.last().unwrap();
        if self.path.len() == self.t {
            return self.pp.has_arc(cur, self.path[0]);
        }
        let start = self.path[0];
        let core = self.pp.common_core(cur);
        let avail: Vec<usize> = core.ones().filter(|&v| !self.used[v]).collect();
        if avail.len() < 4 {
            return false;
        }
        for (i0, &c0) in avail.iter().enumerate() {
            for &c1 in &avail[i0 + 1..] {
                for (j0, &d0) in avail.iter().enumerate() {
                    if d0 == c0 || d0 == c1 {
                        continue;
                    }
                    for &d1 in &avail[j0 + 1..] {
                        if d1 == c0 || d1 == c1 {
                            continue;
                        }
                        let node = ((c0, c1), (d0, d1));
                        if node <= start {
                            continue;
                        }
                        for v in [c0, c1, d0, d1] {
                            self.used[v] = true;
                        }
                        self.path.push(node);
                        if self.extend() {
                            return true;
                        }
                        self.path.pop();
                        for v in [c0, c1, d0, d1] {
                            self.used[v] = false;
                        }
                    }
                }
            }
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{build_b, build_g_half, build_ring};

    #[test]
    fn pair_digraph_degrees() {
        // single edge: every pair has co-degree <= 1, so no out-arcs at all
        let single = TripleGraph::from_edges(3, &[[0, 1, 2]]).unwrap();
        let d = build_pair_digraph(&single);
        assert_eq!(d.digraph().min_out_degree(), 0);
        assert_eq!(d.digraph().out_degree(rank_pair(0, 1)), 0);

        // K4^3: co-degree 2 everywhere, so out-degree C(2,2) = 1
        let k4 = TripleGraph::complete(4);
        let d = build_pair_digraph(&k4);
        for node in 0..d.digraph().node_count() {
            assert_eq!(d.digraph().out_degree(node), 1);
        }

        // B(6): a pair inside one part has co-degree 3, out-degree C(3,2)=3
        let b6 = build_b(6);
        let d = build_pair_digraph(&b6);
        assert_eq!(d.digraph().out_degree(rank_pair(0, 1)), 3);
    }

    #[test]
    fn min_out_degree_matches_codegree_formula() {
        for seed in 0..8u64 {
            let g = TripleGraph::random(9, 0.45, seed);
            let d = build_pair_digraph(&g);
            let expect = (0..9)
                .flat_map(|i| ((i + 1)..9).map(move |j| (i, j)))
                .map(|(i, j)| choose2(g.codegree(i, j)))
                .min()
                .unwrap();
            assert_eq!(d.digraph().min_out_degree(), expect);
        }
    }

    #[test]
    fn k4_pair_digraph_girth_two() {
        let k4 = TripleGraph::complete(4);
        let d = build_pair_digraph(&k4);
        let c = d.digraph().shortest_cycle(None).unwrap();
        assert_eq!(c.len(), 2);
        assert_eq!(c.nodes, vec![0, rank_pair(2, 3) as u32]);
        c.validate(d.digraph()).unwrap();
    }

    #[test]
    fn shortest_cycle_basics() {
        let tri = Digraph::from_arcs(3, &[(0, 1), (1, 2), (2, 0)]);
        assert_eq!(tri.shortest_cycle(None).unwrap().len(), 3);
        assert!(tri.shortest_cycle(Some(2)).is_none());

        let dag = Digraph::from_arcs(4, &[(0, 1), (0, 2), (1, 3), (2, 3)]);
        assert!(dag.shortest_cycle(None).is_none());
        assert!(dag.is_acyclic());
    }

    #[test]
    fn canonical_cycle_is_lex_smallest() {
        // two 3-cycles of girth 3: {0,4,5} and {1,2,3}; smallest start is 0
        let d = Digraph::from_arcs(
            6,
            &[(0, 4), (4, 5), (5, 0), (1, 2), (2, 3), (3, 1)],
        );
        let c = d.shortest_cycle(None).unwrap();
        assert_eq!(c.nodes, vec![0, 4, 5]);

        // same girth through node 0 twice: 0->1->5->0 and 0->2->3->0;
        // lex pick must be 0,1,5
        let d2 = Digraph::from_arcs(6, &[(0, 1), (1, 5), (5, 0), (0, 2), (2, 3), (3, 0)]);
        assert_eq!(d2.shortest_cycle(None).unwrap().nodes, vec![0, 1, 5]);
    }

    #[test]
    fn shortest_cycle_matches_exhaustive_on_tiny_digraphs() {
        // all digraphs on 3 labeled nodes (64 arc subsets)
        let arcs: Vec<(usize, usize)> = (0..3)
            .flat_map(|u| (0..3).map(move |v| (u, v)))
            .filter(|&(u, v)| u != v)
            .collect();
        for mask in 0u32..(1 << arcs.len()) {
            let chosen: Vec<(usize, usize)> = arcs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &a)| a)
                .collect();
            let d = Digraph::from_arcs(3, &chosen);
            let got = d.shortest_cycle(None).map(|c| c.len());
            let want = exhaustive_girth(&d);
            assert_eq!(got, want, "mask {mask:b}");
            if let Some(c) = d.shortest_cycle(None) {
                c.validate(&d).unwrap();
            }
        }
    }

    fn exhaustive_girth(d: &Digraph) -> Option<usize> {
        let n = d.node_count();
        let mut best = None;
        // enumerate all simple node sequences
        fn rec(
            d: &Digraph,
            path: &mut Vec<usize>,
            used: &mut Vec<bool>,
            best: &mut Option<usize>,
        ) {
            let last = *path.last().unwrap();
            if path.len() >= 2 && d.has_arc(last, path[0]) {
                let len = path.len();
                if best.is_none() || len < best.unwrap() {
                    *best = Some(len);
                }
            }
            for v in 0..d.node_count() {
                if !used[v] && d.has_arc(last, v) {
                    used[v] = true;
                    path.push(v);
                    rec(d, path, used, best);
                    path.pop();
                    used[v] = false;
                }
            }
        }
        for s in 0..n {
            let mut used = vec![false; n];
            used[s] = true;
            rec(d, &mut vec![s], &mut used, &mut best);
        }
        best
    }

    #[test]
    fn cs_bound_examples() {
        let tri = Digraph::from_arcs(3, &[(0, 1), (1, 2), (2, 0)]);
        let r = verify_cs_bound(&tri);
        assert_eq!((r.min_out_degree, r.girth, r.bound), (1, Some(3), Some(3)));
        assert!(r.holds);

        let mut complete = Digraph::new(4);
        for u in 0..4 {
            for v in 0..4 {
                if u != v {
                    complete.add_arc(u, v);
                }
            }
        }
        let r = verify_cs_bound(&complete);
        assert_eq!((r.min_out_degree, r.girth, r.bound), (3, Some(2), Some(2)));
        assert!(r.holds);

        let dag = Digraph::from_arcs(2, &[(0, 1)]);
        assert!(verify_cs_bound(&dag).holds);
    }

    #[test]
    fn ring_star_on_k4() {
        let k4 = TripleGraph::complete(4);
        let w = find_ring_star(&k4, 9).unwrap();
        assert_eq!(w.t, 2);
        assert!(verify_ring_star(&k4, &w));
    }

    #[test]
    fn g_half_pair_digraph_is_acyclic() {
        for n in [6usize, 12, 20] {
            let g = build_g_half(n);
            let d = build_pair_digraph(&g);
            assert!(d.digraph().is_acyclic(), "n={n}");
            assert!(find_ring_star(&g, 9).is_none());
        }
    }

    #[test]
    fn blowup_witness_on_exact_blowup() {
        let host = build_ring(3).unwrap().blow_up(2).unwrap();
        let w = find_ring_blowup(&host, 9).expect("R3(2) is its own witness");
        assert_eq!(w.t, 3);
        assert!(verify_ring_blowup(&host, &w));
        assert_eq!(w.edges.len(), 16 * 3);
    }

    #[test]
    fn blowup_on_bipartite_has_even_t() {
        let b = build_b(20);
        let w = find_ring_blowup(&b, 9).expect("B(20) holds a blown-up ring");
        assert!(verify_ring_blowup(&b, &w));
        assert_eq!(w.t % 2, 0, "two-colorable hosts force even rings");
    }

    #[test]
    fn blowup_none_on_ring_free_host() {
        assert!(find_ring_blowup(&build_g_half(20), 9).is_none());
    }

    #[test]
    fn witnesses_reverify_on_random_hosts() {
        for seed in 0..6u64 {
            let g = TripleGraph::random(12, 0.5, 1000 + seed);
            if let Some(w) = find_ring_star(&g, 9) {
                assert!(verify_ring_star(&g, &w), "seed {seed}");
            }
            if let Some(w) = find_ring_blowup(&g, 9) {
                assert!(verify_ring_blowup(&g, &w), "seed {seed}");
            }
        }
    }
}
