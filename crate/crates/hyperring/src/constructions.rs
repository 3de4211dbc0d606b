//! Generators for the named graph families: the Fano plane and its
//! complete-3-partite superset, balanced bipartite 3-graphs, rings and
//! their surjective relabelings, the half-graph-style construction, the
//! three-part Turán construction, the iterated odd-ring-free construction,
//! and projective planes over prime fields.
//!
//! Every generator is a pure function of its size parameters.

use crate::error::{Error, Result};
use crate::graph::{choose2, choose3, KGraph, TripleGraph};

/// The Fano plane as a 3-graph: vertices (a, x, y, z, x', y', z') mapped to
/// 0..6, edges axx', ayy', azz', xyz', xy'z, x'yz, x'y'z'.
pub fn build_fano() -> TripleGraph {
    TripleGraph::from_edges(
        7,
        &[
            [0, 1, 4],
            [0, 2, 5],
            [0, 3, 6],
            [1, 2, 6],
            [1, 3, 5],
            [2, 3, 4],
            [4, 5, 6],
        ],
    )
    .unwrap()
}

/// The complete 3-partite 3-graph on pairs {x,x'}, {y,y'}, {z,z'} plus a hub
/// vertex u with edges uxx', uyy', uzz'. Vertices (u, x, y, z, x', y', z')
/// are 0..6, matching [`build_fano`]'s layout, so the Fano plane sits inside
/// under the identity map.
pub fn build_fstar() -> TripleGraph {
    let mut g = TripleGraph::new(7);
    let pairs = [(1usize, 4usize), (2, 5), (3, 6)];
    for &x in &[pairs[0].0, pairs[0].1] {
        for &y in &[pairs[1].0, pairs[1].1] {
            for &z in &[pairs[2].0, pairs[2].1] {
                g.add_edge(x, y, z).unwrap();
            }
        }
    }
    for &(v, v2) in &pairs {
        g.add_edge(0, v, v2).unwrap();
    }
    g
}

/// Balanced complete bipartite 3-graph B(n): the first ceil(n/2) vertices
/// form one part and all triples meeting both parts are edges.
pub fn build_b(n: usize) -> TripleGraph {
    let a = n.div_ceil(2);
    TripleGraph::from_predicate(n, |i, _, k| i < a && k >= a)
}

/// Closed-form e(B(n)).
pub fn b_edge_count(n: usize) -> usize {
    choose3(n) - choose3(n / 2) - choose3(n.div_ceil(2))
}

/// The ring on 2t vertices: x_i -> 2i, y_i -> 2i+1, with edges
/// {x_i, y_i, x_{i+1}} and {x_i, y_i, y_{i+1}} taken cyclically.
/// For t = 2 the edge set collapses to the 4 triples of K_4^3.
pub fn build_ring(t: usize) -> Result<TripleGraph> {
    if t < 2 {
        return Err(Error::InvalidParameter(format!("ring needs t >= 2, got {t}")));
    }
    let labeling: Vec<usize> = (0..2 * t).collect();
    build_ring_star(t, &labeling)
}

/// A surjectively labeled ring member: `labeling[2i]` and `labeling[2i+1]`
/// are the host vertices carrying x_i and y_i. The labeling must be onto
/// 0..max+1 and must not place a repeated vertex inside any of the 2t
/// defining triples.
pub fn build_ring_star(t: usize, labeling: &[usize]) -> Result<TripleGraph> {
    if t < 2 {
        return Err(Error::InvalidParameter(format!("ring needs t >= 2, got {t}")));
    }
    if labeling.len() != 2 * t {
        return Err(Error::InvalidLabeling(format!(
            "expected {} labels, got {}",
            2 * t,
            labeling.len()
        )));
    }
    let n = labeling.iter().copied().max().unwrap() + 1;
    if n > 2 * t {
        return Err(Error::InvalidLabeling(format!(
            "labels reach {} but at most {} vertices are allowed",
            n - 1,
            2 * t
        )));
    }
    let mut present = vec![false; n];
    for &v in labeling {
        present[v] = true;
    }
    if let Some(miss) = present.iter().position(|p| !p) {
        return Err(Error::InvalidLabeling(format!(
            "not surjective: vertex {miss} unused"
        )));
    }
    let mut g = TripleGraph::new(n);
    for i in 0..t {
        let x = labeling[2 * i];
        let y = labeling[2 * i + 1];
        for z in [labeling[2 * ((i + 1) % t)], labeling[2 * ((i + 1) % t) + 1]] {
            if x == y || x == z || y == z {
                return Err(Error::InvalidLabeling(format!(
                    "triple at position {i} has a repeated vertex"
                )));
            }
            g.add_edge(x, y, z)?;
        }
    }
    Ok(g)
}

/// The half-graph-style ring-free construction: A = a_1..a_{floor(n/2)} on
/// indices 0.., B = b_1..b_{ceil(n/2)} following, with edges {a_i, b_j, a_k}
/// and {a_i, b_j, b_k} whenever i, j < k (subscripts 1-based).
pub fn build_g_half(n: usize) -> TripleGraph {
    let na = n / 2;
    TripleGraph::from_predicate(n, |u, v, w| {
        // sorted u < v < w with A occupying the low indices
        if w < na {
            false // all inside A
        } else if v < na {
            // {a,a,b}: k is the larger A-subscript (v+1), j the B-subscript
            w - na + 1 < v + 1
        } else if u < na {
            // {a,b,b}: k is the larger B-subscript (w-na+1), i the A-subscript
            u + 1 < w - na + 1
        } else {
            false // all inside B
        }
    })
}

/// Turán's construction T(n): three near-equal parts V1, V2, V3 (larger
/// parts first); edges are all transversals plus every pair inside V_i
/// with one vertex of V_{i+1} (indices mod 3).
pub fn build_turan_t(n: usize) -> TripleGraph {
    let q = n / 3;
    let r = n % 3;
    let s0 = q + usize::from(r > 0);
    let s1 = q + usize::from(r > 1);
    let part = move |v: usize| {
        if v < s0 {
            0u8
        } else if v < s0 + s1 {
            1
        } else {
            2
        }
    };
    TripleGraph::from_predicate(n, |i, j, k| {
        matches!(
            (part(i), part(j), part(k)),
            (0, 1, 2) | (0, 0, 1) | (1, 1, 2) | (0, 2, 2)
        )
    })
}

/// Part sizes used by [`build_s`]: V2 and V3 together take the nearest
/// integer to alpha*n (ties rounding up) and V1 takes the rest, with
/// |V2| >= |V3|.
pub fn s_part_sizes(n: usize, alpha: f64) -> (usize, usize, usize) {
    let rest = ((alpha * n as f64 + 0.5).floor() as usize).min(n);
    let v2 = rest.div_ceil(2);
    (n - rest, v2, rest - v2)
}

/// The odd-ring-free construction S(n): edges are every pair inside V1 with
/// one vertex outside, plus all V1 x V2 x V3 transversals. With depth > 0
/// the same construction is repeated inside V2 and inside V3; recursion
/// stops when a part has fewer than 3 vertices.
pub fn build_s(n: usize, alpha: f64, depth: usize) -> Result<TripleGraph> {
    check_alpha(alpha)?;
    let mut g = TripleGraph::new(n);
    add_s_edges(&mut g, 0, n, alpha, depth);
    Ok(g)
}

fn check_alpha(alpha: f64) -> Result<()> {
    if !(alpha > 0.0 && alpha < 1.0) {
        return Err(Error::InvalidParameter(format!(
            "alpha must lie in (0,1), got {alpha}"
        )));
    }
    Ok(())
}

fn add_s_edges(g: &mut TripleGraph, lo: usize, len: usize, alpha: f64, depth: usize) {
    if len < 3 {
        return;
    }
    let (v1, v2, v3) = s_part_sizes(len, alpha);
    let b1 = lo + v1;
    let b2 = b1 + v2;
    for u in lo..b1 {
        for v in (u + 1)..b1 {
            for x in b1..(lo + len) {
                g.add_edge(u, v, x).unwrap();
            }
        }
    }
    for a in lo..b1 {
        for b in b1..b2 {
            for c in b2..(lo + len) {
                g.add_edge(a, b, c).unwrap();
            }
        }
    }
    if depth > 0 {
        add_s_edges(g, b1, v2, alpha, depth - 1);
        add_s_edges(g, b2, v3, alpha, depth - 1);
    }
}

/// e(S(n)) computed by the same recursion without materializing the graph;
/// lets density checks run at sizes whose edge bitset would not fit.
pub fn s_edge_count(n: usize, alpha: f64, depth: usize) -> Result<u64> {
    check_alpha(alpha)?;
    Ok(s_count_rec(n, alpha, depth))
}

fn s_count_rec(n: usize, alpha: f64, depth: usize) -> u64 {
    if n < 3 {
        return 0;
    }
    let (v1, v2, v3) = s_part_sizes(n, alpha);
    let mut c = choose2(v1) as u64 * (v2 + v3) as u64 + (v1 * v2 * v3) as u64;
    if depth > 0 {
        c += s_count_rec(v2, alpha, depth - 1) + s_count_rec(v3, alpha, depth - 1);
    }
    c
}

/// e(S(n)) / C(n,3).
pub fn s_density(n: usize, alpha: f64, depth: usize) -> Result<f64> {
    Ok(s_edge_count(n, alpha, depth)? as f64 / choose3(n) as f64)
}

/// Q3: the ring R3 with the two back edges x1 y1 x0 and x1 y1 y0 added.
pub fn build_q3() -> TripleGraph {
    let mut g = build_ring(3).unwrap();
    g.add_edge(2, 3, 0).unwrap();
    g.add_edge(2, 3, 1).unwrap();
    g
}

/// The projective plane of order q (q prime) as a (q+1)-graph: vertices are
/// the 1-dimensional subspaces of F_q^3, edges the 2-dimensional subspaces.
pub fn build_pg2(q: usize) -> Result<KGraph> {
    if !is_prime(q) {
        return Err(Error::InvalidParameter(format!(
            "pg2 requires a prime order, got {q}"
        )));
    }
    // Canonical representative of each projective point: first nonzero
    // coordinate scaled to 1. Enumeration order fixes the vertex numbering.
    let mut points: Vec<[usize; 3]> = Vec::new();
    let mut index = std::collections::HashMap::new();
    for x in 0..q {
        for y in 0..q {
            for z in 0..q {
                if x == 0 && y == 0 && z == 0 {
                    continue;
                }
                let p = normalize([x, y, z], q);
                if !index.contains_key(&p) {
                    index.insert(p, points.len());
                    points.push(p);
                }
            }
        }
    }
    let n = q * q + q + 1;
    debug_assert_eq!(points.len(), n);

    let mut lines = Vec::with_capacity(n);
    let mut seen_coeffs = std::collections::HashSet::new();
    for a in 0..q {
        for b in 0..q {
            for c in 0..q {
                if a == 0 && b == 0 && c == 0 {
                    continue;
                }
                let coeff = normalize([a, b, c], q);
                if !seen_coeffs.insert(coeff) {
                    continue;
                }
                let mut line: Vec<usize> = points
                    .iter()
                    .enumerate()
                    .filter(|(_, p)| (coeff[0] * p[0] + coeff[1] * p[1] + coeff[2] * p[2]) % q == 0)
                    .map(|(i, _)| i)
                    .collect();
                line.sort_unstable();
                debug_assert_eq!(line.len(), q + 1);
                lines.push(line);
            }
        }
    }
    KGraph::from_edges(n, q + 1, lines)
}

fn normalize(v: [usize; 3], q: usize) -> [usize; 3] {
    let lead = v.iter().copied().find(|&c| c != 0).unwrap();
    let inv = mod_pow(lead, q - 2, q);
    [v[0] * inv % q, v[1] * inv % q, v[2] * inv % q]
}

fn mod_pow(mut base: usize, mut exp: usize, m: usize) -> usize {
    let mut acc = 1usize;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc
}

fn is_prime(q: usize) -> bool {
    if q < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= q {
        if q % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Which named construction to generate, with its parameters.
#[derive(Clone, Debug, PartialEq)]
pub struct ConstructionSpec {
    pub kind: ConstructionKind,
    pub n: Option<usize>,
    pub t: Option<usize>,
    pub q: Option<usize>,
    pub alpha: Option<f64>,
    pub depth: Option<usize>,
    pub labeling: Option<Vec<usize>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConstructionKind {
    Fano,
    FStar,
    B,
    GHalf,
    TuranT,
    SIter,
    Ring,
    RingStar,
    Q3,
    Pg2,
    Complete,
}

impl std::str::FromStr for ConstructionKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.to_ascii_lowercase().as_str() {
            "fano" => Self::Fano,
            "fstar" | "f-star" => Self::FStar,
            "b" => Self::B,
            "g-half" | "ghalf" => Self::GHalf,
            "turan" | "t" => Self::TuranT,
            "s" | "s-iter" => Self::SIter,
            "ring" => Self::Ring,
            "ring-star" => Self::RingStar,
            "q3" => Self::Q3,
            "pg2" => Self::Pg2,
            "complete" => Self::Complete,
            other => {
                return Err(Error::InvalidParameter(format!(
                    "unknown construction kind `{other}`"
                )))
            }
        })
    }
}

#[derive(Clone, Debug)]
pub enum Generated {
    Triple(TripleGraph),
    Uniform(KGraph),
}

impl ConstructionSpec {
    pub fn new(kind: ConstructionKind) -> Self {
        ConstructionSpec {
            kind,
            n: None,
            t: None,
            q: None,
            alpha: None,
            depth: None,
            labeling: None,
        }
    }

    fn need_n(&self) -> Result<usize> {
        self.n
            .ok_or_else(|| Error::InvalidParameter("this kind requires --n".into()))
    }

    fn need_t(&self) -> Result<usize> {
        self.t
            .ok_or_else(|| Error::InvalidParameter("this kind requires --t".into()))
    }

    pub fn build(&self) -> Result<Generated> {
        use ConstructionKind::*;
        Ok(match self.kind {
            Fano => Generated::Triple(build_fano()),
            FStar => Generated::Triple(build_fstar()),
            B => Generated::Triple(build_b(self.need_n()?)),
            GHalf => Generated::Triple(build_g_half(self.need_n()?)),
            TuranT => Generated::Triple(build_turan_t(self.need_n()?)),
            SIter => {
                let alpha = self
                    .alpha
                    .ok_or_else(|| Error::InvalidParameter("s requires --alpha".into()))?;
                Generated::Triple(build_s(self.need_n()?, alpha, self.depth.unwrap_or(0))?)
            }
            Ring => Generated::Triple(build_ring(self.need_t()?)?),
            RingStar => {
                let lab = self
                    .labeling
                    .as_deref()
                    .ok_or_else(|| Error::InvalidParameter("ring-star requires --labeling".into()))?;
                Generated::Triple(build_ring_star(self.need_t()?, lab)?)
            }
            Q3 => Generated::Triple(build_q3()),
            Pg2 => {
                let q = self
                    .q
                    .ok_or_else(|| Error::InvalidParameter("pg2 requires --q".into()))?;
                Generated::Uniform(build_pg2(q)?)
            }
            Complete => Generated::Triple(TripleGraph::complete(self.need_n()?)),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embed::find_embedding;

    #[test]
    fn fano_shape() {
        let f = build_fano();
        assert_eq!((f.n(), f.edge_count()), (7, 7));
        for v in 0..7 {
            assert_eq!(f.vertex_degree(v), 3);
        }
        for x in 0..7 {
            for y in (x + 1)..7 {
                assert!(f.codegree(x, y) >= 1);
            }
        }
        assert_eq!(f.min_l_degree(1).unwrap(), Some(3));
    }

    #[test]
    fn fano_is_pg2_of_order_two() {
        let f = build_fano();
        let pg = build_pg2(2).unwrap().to_triple_graph().unwrap();
        assert_eq!(pg.n(), 7);
        assert_eq!(pg.edge_count(), 7);
        assert!(find_embedding(&f, &pg).is_some());
        assert!(find_embedding(&pg, &f).is_some());
    }

    #[test]
    fn fstar_shape() {
        let g = build_fstar();
        assert_eq!((g.n(), g.edge_count()), (7, 11));
        assert_eq!(g.vertex_degree(0), 3);
        assert!(find_embedding(&build_fano(), &g).is_some());
    }

    #[test]
    fn b_counts_and_codegree() {
        assert_eq!(build_b(6).edge_count(), 18);
        assert_eq!(build_b(3).edge_count(), 1);
        for n in 3..=200 {
            if n <= 40 || n % 17 == 0 {
                assert_eq!(build_b(n).edge_count(), b_edge_count(n), "n={n}");
            }
        }
        assert_eq!(build_b(10).min_l_degree(2).unwrap(), Some(5));
    }

    #[test]
    fn rings() {
        assert!(build_ring(1).is_err());
        let r2 = build_ring(2).unwrap();
        assert_eq!((r2.n(), r2.edge_count()), (4, 4));
        assert_eq!(r2, TripleGraph::complete(4));
        for t in 3..=12 {
            let r = build_ring(t).unwrap();
            assert_eq!((r.n(), r.edge_count()), (2 * t, 2 * t), "t={t}");
            for v in 0..r.n() {
                assert_eq!(r.vertex_degree(v), 3, "t={t} v={v}");
            }
        }
    }

    #[test]
    fn ring_star_labelings() {
        // sharing across non-adjacent positions is legal: x2 = x0 for t = 4
        let g = build_ring_star(4, &[0, 1, 2, 3, 0, 4, 5, 6]).unwrap();
        assert_eq!(g.n(), 7);
        assert_eq!(g.edge_count(), 8);
        // sharing across adjacent positions collapses a defining triple
        assert!(build_ring_star(3, &[0, 1, 0, 2, 3, 4]).is_err());
        assert!(build_ring_star(3, &[0, 1, 1, 2, 3, 4]).is_err());
        // not surjective onto 0..=5
        assert!(build_ring_star(3, &[0, 1, 2, 3, 5, 5]).is_err());
        assert!(build_ring_star(3, &[0, 1, 2, 3]).is_err());
    }

    #[test]
    fn g_half_small_counts() {
        assert_eq!(build_g_half(4).edge_count(), 2);
        assert_eq!(build_g_half(3).edge_count(), 1);
        let g4 = build_g_half(4);
        assert!(g4.has_edge(0, 1, 2)); // {a1, a2, b1}
        assert!(g4.has_edge(0, 2, 3)); // {a1, b1, b2}
    }

    #[test]
    fn g_half_count_matches_direct_loop() {
        for n in [10usize, 33, 64, 100] {
            let g = build_g_half(n);
            let na = n / 2;
            let nb = n - na;
            let mut count = 0usize;
            // {a_i, b_j, a_k}, i,j < k
            for k in 1..=na {
                for i in 1..k {
                    for j in 1..k.min(nb + 1) {
                        let _ = (i, j);
                        count += 1;
                    }
                }
            }
            // {a_i, b_j, b_k}, i,j < k
            for k in 1..=nb {
                for j in 1..k {
                    for i in 1..k.min(na + 1) {
                        let _ = (i, j);
                        count += 1;
                    }
                }
            }
            assert_eq!(g.edge_count(), count, "n={n}");
        }
    }

    #[test]
    fn turan_construction() {
        assert_eq!(build_turan_t(6).edge_count(), 14);
        let t9 = build_turan_t(9);
        assert!(find_embedding(&TripleGraph::complete(4), &t9).is_none());
    }

    #[test]
    fn s_construction_small() {
        let g = build_s(3, 1.0 / 3.0, 0).unwrap();
        assert_eq!(g.edge_count(), 1);
        assert!(build_s(10, 0.0, 0).is_err());
        assert!(build_s(10, 1.0, 0).is_err());
    }

    #[test]
    fn s_count_matches_builder() {
        for &n in &[10usize, 37, 80, 120] {
            for &alpha in &[0.40, 0.4226, 0.4386, 0.46] {
                for depth in 0..=3 {
                    let g = build_s(n, alpha, depth).unwrap();
                    let c = s_edge_count(n, alpha, depth).unwrap();
                    assert_eq!(g.edge_count() as u64, c, "n={n} alpha={alpha} d={depth}");
                }
            }
        }
    }

    #[test]
    fn s_count_monotone_in_depth() {
        for depth in 0..6 {
            let lo = s_edge_count(500, 0.4386, depth).unwrap();
            let hi = s_edge_count(500, 0.4386, depth + 1).unwrap();
            assert!(lo <= hi);
        }
    }

    #[test]
    fn q3_and_its_blowup() {
        let q3 = build_q3();
        assert_eq!((q3.n(), q3.edge_count()), (6, 8));
        let r3 = build_ring(3).unwrap();
        assert!(find_embedding(&r3, &q3).is_some());
        // odd rings land in the 2-blow-up
        let host = q3.blow_up(2).unwrap();
        let r5 = build_ring(5).unwrap();
        let e = find_embedding(&r5, &host).expect("R5 embeds in Q3(2)");
        assert!(e.verify(&r5, &host));
    }

    #[test]
    fn pg2_shapes_and_coverage() {
        assert!(build_pg2(4).is_err());
        assert!(build_pg2(6).is_err());
        for q in [2usize, 3, 5, 7] {
            let pg = build_pg2(q).unwrap();
            let n = q * q + q + 1;
            assert_eq!((pg.n(), pg.k(), pg.edge_count()), (n, q + 1, n), "q={q}");
            for u in 0..n {
                for v in (u + 1)..n {
                    assert_eq!(pg.pair_coverage(u, v), 1, "q={q} pair ({u},{v})");
                }
            }
        }
    }

    #[test]
    fn spec_plumbing() {
        let mut spec = ConstructionSpec::new(ConstructionKind::B);
        assert!(spec.build().is_err());
        spec.n = Some(6);
        match spec.build().unwrap() {
            Generated::Triple(g) => assert_eq!(g.edge_count(), 18),
            _ => panic!("expected a 3-graph"),
        }
        assert!("turan".parse::<ConstructionKind>().is_ok());
        assert!("nope".parse::<ConstructionKind>().is_err());
    }
}
