//! Brute-force reference implementations.
//!
//! Everything in this module trades time for obviousness and stays
//! independent of the search code it is used to cross-check. Inputs are
//! expected to be tiny.

use std::collections::HashSet;

use crate::graph::{choose3, Embedding, TripleGraph};

/// Embedding search by flat enumeration of all injections, in lexicographic
/// order of the image tuple.
pub fn find_embedding_exhaustive(pattern: &TripleGraph, host: &TripleGraph) -> Option<Embedding> {
    if pattern.n() > host.n() {
        return None;
    }
    let edges: Vec<[usize; 3]> = pattern.edges().collect();
    let mut map = vec![usize::MAX; pattern.n()];
    let mut used = vec![false; host.n()];
    fn rec(
        pos: usize,
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
        host: &TripleGraph,
        edges: &[[usize; 3]],
    ) -> bool {
        if pos == map.len() {
            return true;
        }
        'next: for hv in 0..host.n() {
            if used[hv] {
                continue;
            }
            map[pos] = hv;
            // all pattern edges whose vertices are mapped so far
            for e in edges {
                if e.iter().all(|&v| v <= pos) && !host.has_edge(map[e[0]], map[e[1]], map[e[2]]) {
                    continue 'next;
                }
            }
            used[hv] = true;
            if rec(pos + 1, map, used, host, edges) {
                return true;
            }
            used[hv] = false;
        }
        map[pos] = usize::MAX;
        false
    }
    if rec(0, &mut map, &mut used, host, &edges) {
        Some(Embedding::new(map))
    } else {
        None
    }
}

/// Decodes a graph from the low `C(n,3)` bits of `mask` (bit r = triple of
/// colex rank r).
pub fn graph_from_mask(n: usize, mask: u64) -> TripleGraph {
    let mut rank = 0usize;
    TripleGraph::from_predicate(n, |_, _, _| {
        let hit = mask >> rank & 1 == 1;
        rank += 1;
        hit
    })
}

fn family_free(g: &TripleGraph, family: &[TripleGraph]) -> bool {
    family
        .iter()
        .all(|p| find_embedding_exhaustive(p, g).is_none())
}

/// Maximum edge count over all family-free graphs on `n` vertices, by
/// enumerating every one of the 2^C(n,3) graphs. Requires C(n,3) <= 40.
pub fn max_edges_flat(n: usize, family: &[TripleGraph]) -> usize {
    let total = choose3(n);
    assert!(total <= 40, "flat enumeration is for toy sizes only");
    let mut best = 0usize;
    for mask in 0u64..(1u64 << total) {
        let m = mask.count_ones() as usize;
        if m <= best {
            continue;
        }
        let g = graph_from_mask(n, mask);
        if family_free(&g, family) {
            best = m;
        }
    }
    best
}

/// Maximum minimum co-degree over all family-free graphs on `n` vertices,
/// by flat enumeration.
pub fn max_min_codegree_flat(n: usize, family: &[TripleGraph]) -> usize {
    let total = choose3(n);
    assert!(total <= 40, "flat enumeration is for toy sizes only");
    let mut best = 0usize;
    for mask in 0u64..(1u64 << total) {
        let g = graph_from_mask(n, mask);
        let d = g.min_l_degree(2).unwrap().unwrap_or(0);
        if d > best && family_free(&g, family) {
            best = d;
        }
    }
    best
}

/// All distinct members of the surjectively-labeled ring families with
/// 2 <= t <= t_max, each with vertices numbered by first appearance of
/// their label block.
///
/// A labeling of the 2t slots x0,y0,...,x_{t-1},y_{t-1} onto a vertex set
/// is exactly a set partition of the slots, enumerated here as restricted
/// growth strings. Labelings that would put a repeated vertex inside one
/// of the 2t defining triples are not members and are skipped.
pub fn ring_star_members(t_max: usize) -> Vec<TripleGraph> {
    let mut out = Vec::new();
    let mut seen: HashSet<(usize, Vec<[usize; 3]>)> = HashSet::new();
    for t in 2..=t_max {
        let slots = 2 * t;
        let mut rgs = vec![0usize; slots];
        loop {
            if let Some(g) = ring_star_from_labeling(t, &rgs) {
                let key = (g.n(), g.edges().collect::<Vec<_>>());
                if seen.insert(key) {
                    out.push(g);
                }
            }
            // next restricted growth string
            let mut pos = slots;
            loop {
                if pos == 1 {
                    pos = 0;
                    break;
                }
                pos -= 1;
                let cap = rgs[..pos].iter().copied().max().unwrap_or(0) + 1;
                if rgs[pos] < cap {
                    rgs[pos] += 1;
                    for v in rgs[pos + 1..].iter_mut() {
                        *v = 0;
                    }
                    break;
                }
            }
            if pos == 0 {
                break;
            }
        }
    }
    out
}

fn ring_star_from_labeling(t: usize, labeling: &[usize]) -> Option<TripleGraph> {
    let n = labeling.iter().copied().max().unwrap_or(0) + 1;
    let mut g = TripleGraph::new(n);
    for i in 0..t {
        let x = labeling[2 * i];
        let y = labeling[2 * i + 1];
        let nx = labeling[2 * ((i + 1) % t)];
        let ny = labeling[2 * ((i + 1) % t) + 1];
        for z in [nx, ny] {
            if x == y || x == z || y == z {
                return None;
            }
            g.add_edge(x, y, z).ok()?;
        }
    }
    Some(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mask_decoding() {
        let g = graph_from_mask(4, 0b1011);
        assert_eq!(g.edge_count(), 3);
        assert!(g.has_edge(0, 1, 2));
        assert!(!g.has_edge(0, 2, 3));
    }

    #[test]
    fn ring_star_family_counts() {
        let members = ring_star_members(2);
        // every valid labeling of R2 collapses to K4^3 itself
        assert_eq!(members.len(), 1);
        assert_eq!(members[0].n(), 4);
        assert_eq!(members[0].edge_count(), 4);

        let upto3 = ring_star_members(3);
        assert!(upto3.len() > 1);
        for g in &upto3 {
            assert!(g.n() <= 6);
        }
    }

    #[test]
    fn flat_turan_with_empty_family() {
        assert_eq!(max_edges_flat(4, &[]), 4);
        assert_eq!(max_min_codegree_flat(4, &[]), 2);
    }
}
