//! Backtracking subgraph-embedding search.
//!
//! Pattern vertices are assigned in descending-degree order (ties broken by
//! ascending index) and host candidates are tried in ascending index order,
//! so the first embedding found is the lexicographically smallest one under
//! that fixed ordering. Candidates are pruned by degree compatibility, by
//! co-degree compatibility on every mapped pattern pair, and by intersecting
//! the host co-neighborhoods of already-mapped pattern edges.

use crate::bits::Bitset;
use crate::graph::{choose2, rank_pair, Embedding, TripleGraph};

/// Finds an edge-preserving injection of `pattern` into `host`, or `None`.
///
/// Deterministic: repeated calls return the identical witness.
pub fn find_embedding(pattern: &TripleGraph, host: &TripleGraph) -> Option<Embedding> {
    if pattern.n() > host.n() || pattern.edge_count() > host.edge_count() {
        return None;
    }
    let mut s = Searcher::new(pattern, host, Vec::new());
    if s.extend(0) {
        let map = s.map.iter().map(|m| m.unwrap()).collect();
        Some(Embedding::new(map))
    } else {
        None
    }
}

/// True iff some embedding of `pattern` into `host` maps an edge of the
/// pattern onto the host triple `anchor`. Used by the exhaustive Turán
/// search, where a freshly added edge is the only place a new forbidden
/// copy can appear.
pub(crate) fn embeds_using_triple(
    pattern: &TripleGraph,
    host: &TripleGraph,
    anchor: [usize; 3],
) -> bool {
    if pattern.n() > host.n() {
        return false;
    }
    let perms: [[usize; 3]; 6] = [
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ];
    let pattern_edges: Vec<[usize; 3]> = pattern.edges().collect();
    for pe in &pattern_edges {
        for perm in &perms {
            let assignment: Vec<(usize, usize)> = (0..3)
                .map(|idx| (pe[idx], anchor[perm[idx]]))
                .collect();
            let mut s = Searcher::new(pattern, host, assignment);
            if s.seed_ok && s.extend(0) {
                return true;
            }
        }
    }
    false
}

struct Searcher<'a> {
    host: &'a TripleGraph,
    order: Vec<usize>,
    // other two vertices of each pattern edge at v
    pattern_edge_partners: Vec<Vec<(usize, usize)>>,
    // (other vertex, required codegree) for every positive pattern pair at v
    pattern_pair_needs: Vec<Vec<(usize, usize)>>,
    pattern_deg: Vec<usize>,
    host_deg: Vec<usize>,
    co_memo: Vec<Option<Bitset>>,
    map: Vec<Option<usize>>,
    used: Vec<bool>,
    seed_ok: bool,
}

impl<'a> Searcher<'a> {
    fn new(
        pattern: &'a TripleGraph,
        host: &'a TripleGraph,
        pre_assigned: Vec<(usize, usize)>,
    ) -> Self {
        let pn = pattern.n();
        let pattern_deg: Vec<usize> = (0..pn).map(|v| pattern.vertex_degree(v)).collect();
        let mut order: Vec<usize> = (0..pn).collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(pattern_deg[v]), v));

        let mut pattern_edge_partners = vec![Vec::new(); pn];
        for [a, b, c] in pattern.edges() {
            pattern_edge_partners[a].push((b, c));
            pattern_edge_partners[b].push((a, c));
            pattern_edge_partners[c].push((a, b));
        }
        let mut pattern_pair_needs = vec![Vec::new(); pn];
        for v in 0..pn {
            for u in 0..pn {
                if u == v {
                    continue;
                }
                let c = pattern.codegree(u, v);
                if c > 0 {
                    pattern_pair_needs[v].push((u, c));
                }
            }
        }

        let host_deg: Vec<usize> = (0..host.n()).map(|v| host.vertex_degree(v)).collect();
        let mut s = Searcher {
            host,
            order,
            pattern_edge_partners,
            pattern_pair_needs,
            pattern_deg,
            host_deg,
            co_memo: vec![None; choose2(host.n())],
            map: vec![None; pn],
            used: vec![false; host.n()],
            seed_ok: true,
        };
        for &(pv, hv) in &pre_assigned {
            if s.used[hv] || s.map[pv].is_some() || !s.admissible(pv, hv) {
                s.seed_ok = false;
                break;
            }
            s.map[pv] = Some(hv);
            s.used[hv] = true;
        }
        s
    }

    fn co_bits(&mut self, u: usize, v: usize) -> &Bitset {
        let r = rank_pair(u.min(v), u.max(v));
        if self.co_memo[r].is_none() {
            self.co_memo[r] = Some(self.host.co_neighborhood_bits(u, v));
        }
        self.co_memo[r].as_ref().unwrap()
    }

    /// Degree, pair-codegree, and mapped-edge checks for assigning host
    /// vertex `hv` to pattern vertex `pv`.
    fn admissible(&mut self, pv: usize, hv: usize) -> bool {
        if self.host_deg[hv] < self.pattern_deg[pv] {
            return false;
        }
        for idx in 0..self.pattern_pair_needs[pv].len() {
            let (q, need) = self.pattern_pair_needs[pv][idx];
            if let Some(mq) = self.map[q] {
                if self.co_bits(hv, mq).count_ones() < need {
                    return false;
                }
            }
        }
        for idx in 0..self.pattern_edge_partners[pv].len() {
            let (q, r) = self.pattern_edge_partners[pv][idx];
            if let (Some(mq), Some(mr)) = (self.map[q], self.map[r]) {
                if !self.host.has_edge(hv, mq, mr) {
                    return false;
                }
            }
        }
        true
    }

    fn extend(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let pv = self.order[depth];
        if self.map[pv].is_some() {
            return self.extend(depth + 1);
        }

        // Intersect host co-neighborhoods over pattern edges at pv whose
        // other two ends are already mapped; this is usually the whole prune.
        let mut cand: Option<Bitset> = None;
        for idx in 0..self.pattern_edge_partners[pv].len() {
            let (q, r) = self.pattern_edge_partners[pv][idx];
            if let (Some(mq), Some(mr)) = (self.map[q], self.map[r]) {
                let bits = self.co_bits(mq, mr).clone();
                match cand.as_mut() {
                    None => cand = Some(bits),
                    Some(c) => {
                        c.intersect_with(&bits);
                        if c.is_empty() {
                            return false;
                        }
                    }
                }
            }
        }

        match cand {
            Some(bits) => {
                for hv in bits.ones() {
                    if !self.used[hv] && self.admissible(pv, hv) {
                        self.map[pv] = Some(hv);
                        self.used[hv] = true;
                        if self.extend(depth + 1) {
                            return true;
                        }
                        self.map[pv] = None;
                        self.used[hv] = false;
                    }
                }
            }
            None => {
                for hv in 0..self.host.n() {
                    if !self.used[hv] && self.admissible(pv, hv) {
                        self.map[pv] = Some(hv);
                        self.used[hv] = true;
                        if self.extend(depth + 1) {
                            return true;
                        }
                        self.map[pv] = None;
                        self.used[hv] = false;
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
    use crate::constructions::{build_b, build_fano};

    #[test]
    fn identity_embedding_of_fano_into_itself() {
        let f = build_fano();
        let e = find_embedding(&f, &f).expect("F embeds in itself");
        assert_eq!(e.map(), &[0, 1, 2, 3, 4, 5, 6]);
        assert!(e.verify(&f, &f));
    }

    #[test]
    fn pattern_larger_than_host_is_none() {
        let f = build_fano();
        let small = TripleGraph::complete(5);
        assert!(find_embedding(&f, &small).is_none());
    }

    #[test]
    fn fano_not_in_balanced_bipartite() {
        let f = build_fano();
        assert!(find_embedding(&f, &build_b(12)).is_none());
        assert!(find_embedding(&f, &TripleGraph::complete(7)).is_some());
    }

    #[test]
    fn deterministic_witness() {
        let g = TripleGraph::random(10, 0.5, 99);
        let p = TripleGraph::complete(4);
        let a = find_embedding(&p, &g);
        let b = find_embedding(&p, &g);
        assert_eq!(a, b);
    }

    #[test]
    fn anchored_search_sees_only_copies_through_the_anchor() {
        // host: K4 on {0,1,2,3} plus an isolated edge {4,5,6}
        let mut host = TripleGraph::complete(4);
        let mut g = TripleGraph::new(7);
        for [a, b, c] in host.edges() {
            g.add_edge(a, b, c).unwrap();
        }
        g.add_edge(4, 5, 6).unwrap();
        host = g;
        let k4 = TripleGraph::complete(4);
        assert!(embeds_using_triple(&k4, &host, [0, 1, 2]));
        assert!(!embeds_using_triple(&k4, &host, [4, 5, 6]));
    }
}
