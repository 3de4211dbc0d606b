//! Property checkers and exhaustive Turán oracles for toy sizes.
//!
//! The exhaustive searches walk the triples in colex-rank order, branching
//! on include/exclude. A forbidden-pattern check runs only when a triple is
//! added and is anchored at that triple: the graph was pattern-free before,
//! so any new copy must use the new edge. Witnesses are the
//! lexicographically smallest extremal graphs encountered, which the
//! include-first rank-order walk visits first.

use crate::embed::{embeds_using_triple, find_embedding};
use crate::error::{Error, Result};
use crate::graph::{choose2, choose3, rank_pair, unrank_triple_unchecked, TripleGraph};

/// Every m-subset of the vertices spans at least one edge. Vacuously true
/// when m exceeds the vertex count.
pub fn has_lm_property(h: &TripleGraph, m: usize) -> bool {
    first_edge_free_subset(h, m).is_none()
}

/// The first m-subset (in ascending bitmask order) spanning no edge, if any.
pub fn first_edge_free_subset(h: &TripleGraph, m: usize) -> Option<Vec<usize>> {
    let l = h.n();
    if m > l {
        return None;
    }
    let edge_masks: Vec<u64> = h
        .edges()
        .map(|[a, b, c]| 1u64 << a | 1u64 << b | 1u64 << c)
        .collect();
    assert!(l <= 63, "subset sweep is for small graphs");
    // Gosper's hack walks the m-subsets of 0..l in ascending mask order
    let mut subset: u64 = (1u64 << m) - 1;
    let limit: u64 = if m == 0 { 0 } else { ((1u64 << m) - 1) << (l - m) };
    loop {
        if !edge_masks.iter().any(|&e| e & subset == e) {
            return Some((0..l).filter(|&v| subset >> v & 1 == 1).collect());
        }
        if subset >= limit || m == 0 {
            return None;
        }
        let c = subset & subset.wrapping_neg();
        let r = subset + c;
        subset = (((r ^ subset) >> 2) / c) | r;
    }
}

/// A maximum-cardinality vertex set spanning no edge, lexicographically
/// smallest among those of maximum size. Exhaustive with pruning.
pub fn max_edge_free_set(h: &TripleGraph) -> Vec<usize> {
    let n = h.n();
    assert!(n <= 63, "edge-free search is for small graphs");
    // For vertex v, the pair masks that complete an edge at v.
    let mut closers: Vec<Vec<u64>> = vec![Vec::new(); n];
    for [a, b, c] in h.edges() {
        closers[c].push(1u64 << a | 1u64 << b);
        closers[b].push(1u64 << a | 1u64 << c);
        closers[a].push(1u64 << b | 1u64 << c);
    }
    let mut best_mask = 0u64;
    let mut best_size = 0usize;
    fn rec(
        v: usize,
        n: usize,
        chosen: u64,
        size: usize,
        closers: &[Vec<u64>],
        best_mask: &mut u64,
        best_size: &mut usize,
    ) {
        if size + (n - v) <= *best_size {
            return;
        }
        if v == n {
            if size > *best_size {
                *best_size = size;
                *best_mask = chosen;
            }
            return;
        }
        if !closers[v].iter().any(|&pair| pair & chosen == pair) {
            rec(v + 1, n, chosen | 1u64 << v, size + 1, closers, best_mask, best_size);
        }
        rec(v + 1, n, chosen, size, closers, best_mask, best_size);
    }
    rec(0, n, 0, 0, &closers, &mut best_mask, &mut best_size);
    (0..n).filter(|&v| best_mask >> v & 1 == 1).collect()
}

/// True when the graph has more than 3 vertices and every pair of vertices
/// lies in some edge.
pub fn covers_pairs(h: &TripleGraph) -> bool {
    h.n() >= 4 && h.min_l_degree(2).ok().flatten().is_some_and(|d| d >= 1)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExMode {
    Edges,
    MinCodegree,
}

impl ExMode {
    pub fn as_str(&self) -> &'static str {
        match self {
            ExMode::Edges => "edges",
            ExMode::MinCodegree => "min-codegree",
        }
    }
}

/// Result of an exhaustive extremal search.
#[derive(Clone, Debug)]
pub struct TuranResult {
    pub n: usize,
    pub mode: ExMode,
    pub family: Vec<TripleGraph>,
    pub value: usize,
    pub witness: TripleGraph,
    pub nodes_explored: u64,
}

const DEFAULT_CAP: usize = 6;

fn brute_cap() -> usize {
    std::env::var("HYPERRING_BRUTE_CAP")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_CAP)
}

/// ex(n, family): the maximum edge count of a family-free graph on n
/// vertices, with an attaining witness.
pub fn brute_ex(n: usize, family: &[TripleGraph]) -> Result<TuranResult> {
    brute_search(n, family, ExMode::Edges)
}

/// The co-degree analogue: maximize the minimum co-degree over family-free
/// graphs on n vertices.
pub fn brute_ex2(n: usize, family: &[TripleGraph]) -> Result<TuranResult> {
    brute_search(n, family, ExMode::MinCodegree)
}

fn brute_search(n: usize, family: &[TripleGraph], mode: ExMode) -> Result<TuranResult> {
    let cap = brute_cap();
    if n > cap {
        return Err(Error::SearchCap { n, cap });
    }
    let total = choose3(n);
    let pair_count = choose2(n);
    // pairs covered by each triple rank, and how many later triples cover
    // each pair (for the co-degree bound)
    let mut triple_pairs = Vec::with_capacity(total);
    let mut remaining = vec![0u32; pair_count];
    for r in 0..total {
        let [i, j, k] = unrank_triple_unchecked(r);
        let ps = [rank_pair(i, j), rank_pair(i, k), rank_pair(j, k)];
        for &p in &ps {
            remaining[p] += 1;
        }
        triple_pairs.push(ps);
    }

    let mut search = BruteSearch {
        family,
        mode,
        total,
        graph: TripleGraph::new(n),
        cods: vec![0u32; pair_count],
        remaining,
        triple_pairs,
        best_value: None,
        best_witness: None,
        nodes: 0,
    };
    search.run(0, 0);
    Ok(TuranResult {
        n,
        mode,
        family: family.to_vec(),
        value: search.best_value.expect("search visits at least one leaf"),
        witness: search.best_witness.unwrap(),
        nodes_explored: search.nodes,
    })
}

struct BruteSearch<'a> {
    family: &'a [TripleGraph],
    mode: ExMode,
    total: usize,
    graph: TripleGraph,
    cods: Vec<u32>,
    remaining: Vec<u32>,
    triple_pairs: Vec<[usize; 3]>,
    best_value: Option<usize>,
    best_witness: Option<TripleGraph>,
    nodes: u64,
}

impl BruteSearch<'_> {
    fn bound(&self, edges_so_far: usize, rank: usize) -> usize {
        match self.mode {
            ExMode::Edges => edges_so_far + (self.total - rank),
            ExMode::MinCodegree => self
                .cods
                .iter()
                .zip(&self.remaining)
                .map(|(&c, &r)| (c + r) as usize)
                .min()
                .unwrap_or(0),
        }
    }

    fn leaf_value(&self) -> usize {
        match self.mode {
            ExMode::Edges => self.graph.edge_count(),
            ExMode::MinCodegree => self.cods.iter().map(|&c| c as usize).min().unwrap_or(0),
        }
    }

    fn run(&mut self, rank: usize, edges_so_far: usize) {
        self.nodes += 1;
        if let Some(best) = self.best_value {
            if self.bound(edges_so_far, rank) <= best {
                return;
            }
        }
        if rank == self.total {
            let value = self.leaf_value();
            if self.best_value.is_none_or(|b| value > b) {
                self.best_value = Some(value);
                self.best_witness = Some(self.graph.clone());
            }
            return;
        }

        let [i, j, k] = unrank_triple_unchecked(rank);
        let pairs = self.triple_pairs[rank];

        // include branch first: attainers of equal value seen in lex order
        self.graph.add_edge(i, j, k).unwrap();
        let creates_member = self
            .family
            .iter()
            .any(|p| embeds_using_triple(p, &self.graph, [i, j, k]));
        if !creates_member {
            for &p in &pairs {
                self.cods[p] += 1;
                self.remaining[p] -= 1;
            }
            self.run(rank + 1, edges_so_far + 1);
            for &p in &pairs {
                self.cods[p] -= 1;
                self.remaining[p] += 1;
            }
        }
        self.graph.remove_edge_rank(rank);

        for &p in &pairs {
            self.remaining[p] -= 1;
        }
        self.run(rank + 1, edges_so_far);
        for &p in &pairs {
            self.remaining[p] += 1;
        }
    }
}

/// Index of the first family pattern embedding into `g`, if any.
pub fn contains_member(g: &TripleGraph, family: &[TripleGraph]) -> Option<usize> {
    family.iter().position(|p| find_embedding(p, g).is_some())
}

/// K_4^3 with one edge removed.
pub fn k4_minus_edge() -> TripleGraph {
    TripleGraph::from_edges(4, &[[0, 1, 2], [0, 1, 3], [0, 2, 3]]).unwrap()
}
