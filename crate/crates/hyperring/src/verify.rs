//! A registry of desk-scale checkable claims, run as one pass/fail battery.
//!
//! Reports are deterministic: randomized hosts derive from the single seed
//! recorded in the report, claims run in parallel but results are ordered
//! by claim id, and no wall-clock data is included, so re-running with the
//! same seed yields byte-identical JSON.

use std::path::PathBuf;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::constructions::{
    build_b, build_fano, build_g_half, build_ring, build_s, build_turan_t, s_density,
    s_edge_count,
};
use crate::density::{codegree_bound_rings, optimize_alpha, s_base_density, s_iterated_density,
    turan_bound_rings};
use crate::embed::find_embedding;
use crate::error::Result;
use crate::extremal::{brute_ex, has_lm_property, k4_minus_edge};
use crate::fanofinder::{find_fano, verify_fstar, FanoOutcome};
use crate::graph::{choose3, TripleGraph};
use crate::io::read_triple_graph;
use crate::oracle;
use crate::ringsearch::{
    build_pair_digraph, find_ring_blowup, find_ring_star, verify_cs_bound, verify_ring_blowup,
    Digraph,
};

pub const DEFAULT_SEED: u64 = 0x9E37_79B9_7F4A_7C15;

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    /// Run only these claim ids; everything else is reported as skipped.
    pub only: Option<Vec<String>>,
    /// Skip claims marked slow (the embedding-heavy parity checks).
    pub skip_slow: bool,
    pub seed: u64,
    /// Additional `.3g` hosts exercised by the pipeline-consistency claim.
    pub extra_hosts: Vec<PathBuf>,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            only: None,
            skip_slow: false,
            seed: DEFAULT_SEED,
            extra_hosts: Vec::new(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ClaimStatus {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClaimResult {
    pub claim_id: String,
    pub statement: String,
    pub status: ClaimStatus,
    pub details: Value,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub seed: u64,
    pub results: Vec<ClaimResult>,
}

impl VerifyReport {
    pub fn any_failed(&self) -> bool {
        self.results.iter().any(|r| r.status == ClaimStatus::Fail)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

struct Ctx {
    seed: u64,
    extra_hosts: Vec<(String, TripleGraph)>,
}

struct Eval {
    pass: bool,
    details: Value,
}

struct ClaimSpec {
    id: &'static str,
    statement: &'static str,
    slow: bool,
    run: fn(&Ctx) -> Eval,
}

fn specs() -> Vec<ClaimSpec> {
    vec![
        ClaimSpec {
            id: "c01-ring-lm-property",
            statement: "rings on 2t vertices force an edge in every t+1 vertices but in no smaller count, t = 2..8",
            slow: false,
            run: claim_ring_lm,
        },
        ClaimSpec {
            id: "c02-fano-free-bipartite",
            statement: "the balanced bipartite construction is Fano-free (n = 7..14) with minimum co-degree floor(n/2) (n = 4..200)",
            slow: false,
            run: claim_fano_free_bipartite,
        },
        ClaimSpec {
            id: "c03-ghalf-ring-free",
            statement: "the half-graph construction has an acyclic pair digraph for n = 4..24, hence no ring members",
            slow: false,
            run: claim_ghalf_ring_free,
        },
        ClaimSpec {
            id: "c04-turan-ring-parity",
            statement: "the three-part Turan construction contains R3 (n = 6,9,12) but no R2 or R4 (n = 8..12)",
            slow: true,
            run: claim_turan_ring_parity,
        },
        ClaimSpec {
            id: "c05-s-ring-parity",
            statement: "the odd-ring-free construction at n = 30 contains R2 but no R3 or R5 at depths 0 and 1",
            slow: true,
            run: claim_s_ring_parity,
        },
        ClaimSpec {
            id: "c06-chvatal-szemeredi",
            statement: "the minimum-out-degree girth bound holds on all 4096 labeled 4-node digraphs and 1000 seeded random digraphs up to 60 nodes",
            slow: false,
            run: claim_cs_bound,
        },
        ClaimSpec {
            id: "c07-density-limits",
            statement: "generator densities approach 3/4 (bipartite), 1/2 (half-graph) and 5/9 (three-part) within 2e-3 near n = 1000",
            slow: false,
            run: claim_density_limits,
        },
        ClaimSpec {
            id: "c08-s-optimization",
            statement: "base optimum 0.577350 at alpha 0.42265, iterated optimum 0.588863 at 0.438558, closed form within 0.01 of the generator",
            slow: false,
            run: claim_s_optimization,
        },
        ClaimSpec {
            id: "c09-fano-pipeline",
            statement: "Fano pipeline succeeds verified on K12, fails staged on B(50), and agrees with the embedding oracle on 20 seeded dense hosts",
            slow: false,
            run: claim_fano_pipeline,
        },
        ClaimSpec {
            id: "c10-ring-blowup-search",
            statement: "blow-up search finds a verified t = 3 witness inside R3(2) and nothing inside the half-graph construction at n = 20",
            slow: false,
            run: claim_ring_blowup,
        },
        ClaimSpec {
            id: "c11-brute-ex-oracle",
            statement: "exhaustive Turan search matches flat enumeration at n = 4,5 and closed forms on empty families up to n = 6",
            slow: false,
            run: claim_brute_ex,
        },
        ClaimSpec {
            id: "c12-bound-constants",
            statement: "sqrt(2/9) = sqrt(2)/3 < 1/2, sqrt(2/8) = 1/2 exactly, and the ring Turan bound tends to 1/2",
            slow: false,
            run: claim_bound_constants,
        },
    ]
}

pub fn claim_ids() -> Vec<&'static str> {
    specs().iter().map(|s| s.id).collect()
}

/// Runs the registry. Claims excluded by the config are reported as
/// skipped with a reason; nothing is silently dropped.
pub fn run_all(cfg: &VerifyConfig) -> Result<VerifyReport> {
    let mut extra_hosts = Vec::new();
    for path in &cfg.extra_hosts {
        let g = read_triple_graph(path)?;
        extra_hosts.push((path.display().to_string(), g));
    }
    let ctx = Ctx {
        seed: cfg.seed,
        extra_hosts,
    };
    let all = specs();
    let mut results: Vec<ClaimResult> = Vec::with_capacity(all.len());
    std::thread::scope(|scope| {
        let mut running = Vec::new();
        for spec in &all {
            let skip_reason = if let Some(only) = &cfg.only {
                if only.iter().any(|id| id == spec.id) {
                    None
                } else {
                    Some("not selected")
                }
            } else if cfg.skip_slow && spec.slow {
                Some("slow claim skipped")
            } else {
                None
            };
            match skip_reason {
                Some(reason) => results.push(ClaimResult {
                    claim_id: spec.id.to_string(),
                    statement: spec.statement.to_string(),
                    status: ClaimStatus::Skipped,
                    details: json!({ "reason": reason }),
                }),
                None => {
                    let ctx = &ctx;
                    running.push((spec, scope.spawn(move || {
                        std::panic::catch_unwind(std::panic::AssertUnwindSafe(|| (spec.run)(ctx)))
                    })));
                }
            }
        }
        for (spec, handle) in running {
            let eval = match handle.join().expect("claim thread") {
                Ok(eval) => eval,
                Err(panic) => Eval {
                    pass: false,
                    details: json!({ "panic": panic_message(&panic) }),
                },
            };
            results.push(ClaimResult {
                claim_id: spec.id.to_string(),
                statement: spec.statement.to_string(),
                status: if eval.pass {
                    ClaimStatus::Pass
                } else {
                    ClaimStatus::Fail
                },
                details: eval.details,
            });
        }
    });
    results.sort_by(|a, b| a.claim_id.cmp(&b.claim_id));
    Ok(VerifyReport {
        seed: cfg.seed,
        results,
    })
}

/// Runs one claim by id.
pub fn run_single(id: &str, cfg: &VerifyConfig) -> Result<Option<ClaimResult>> {
    let cfg = VerifyConfig {
        only: Some(vec![id.to_string()]),
        skip_slow: false,
        ..cfg.clone()
    };
    let report = run_all(&cfg)?;
    Ok(report
        .results
        .into_iter()
        .find(|r| r.claim_id == id && r.status != ClaimStatus::Skipped))
}

fn panic_message(panic: &Box<dyn std::any::Any + Send>) -> String {
    if let Some(s) = panic.downcast_ref::<&str>() {
        s.to_string()
    } else if let Some(s) = panic.downcast_ref::<String>() {
        s.clone()
    } else {
        "opaque panic payload".to_string()
    }
}

fn claim_ring_lm(_: &Ctx) -> Eval {
    let mut rows = Vec::new();
    let mut pass = true;
    for t in 2..=8usize {
        let r = build_ring(t).unwrap();
        let at_succ = has_lm_property(&r, t + 1);
        let at_t = has_lm_property(&r, t);
        pass &= at_succ && !at_t;
        rows.push(json!({ "t": t, "every_t_plus_1_spans_edge": at_succ, "every_t_spans_edge": at_t }));
    }
    Eval {
        pass,
        details: json!({ "rings": rows }),
    }
}

fn claim_fano_free_bipartite(_: &Ctx) -> Eval {
    let fano = build_fano();
    let mut embed_ok = true;
    for n in 7..=14 {
        embed_ok &= find_embedding(&fano, &build_b(n)).is_none();
    }
    let mut codegree_ok = true;
    let mut first_bad = Value::Null;
    for n in 4..=200usize {
        let d = build_b(n).min_l_degree(2).unwrap().unwrap();
        if d != n / 2 {
            codegree_ok = false;
            if first_bad.is_null() {
                first_bad = json!({ "n": n, "min_codegree": d, "expected": n / 2 });
            }
        }
    }
    Eval {
        pass: embed_ok && codegree_ok,
        details: json!({
            "fano_free_for_n_7_to_14": embed_ok,
            "min_codegree_matches_floor_half": codegree_ok,
            "first_mismatch": first_bad,
        }),
    }
}

fn claim_ghalf_ring_free(_: &Ctx) -> Eval {
    let mut pass = true;
    let mut rows = Vec::new();
    for n in 4..=24usize {
        let g = build_g_half(n);
        let acyclic = build_pair_digraph(&g).digraph().is_acyclic();
        let no_ring = find_ring_star(&g, 9).is_none();
        pass &= acyclic && no_ring;
        rows.push(json!({ "n": n, "pair_digraph_acyclic": acyclic, "ring_found": !no_ring }));
    }
    Eval {
        pass,
        details: json!({ "hosts": rows }),
    }
}

fn claim_turan_ring_parity(_: &Ctx) -> Eval {
    let r2 = build_ring(2).unwrap();
    let r3 = build_ring(3).unwrap();
    let r4 = build_ring(4).unwrap();
    let mut pass = true;
    let mut absent = Vec::new();
    for n in 8..=12usize {
        let host = build_turan_t(n);
        let no_r2 = find_embedding(&r2, &host).is_none();
        let no_r4 = find_embedding(&r4, &host).is_none();
        pass &= no_r2 && no_r4;
        absent.push(json!({ "n": n, "r2_found": !no_r2, "r4_found": !no_r4 }));
    }
    let mut present = Vec::new();
    for n in [6usize, 9, 12] {
        let host = build_turan_t(n);
        let hit = find_embedding(&r3, &host);
        let ok = hit.as_ref().is_some_and(|e| e.verify(&r3, &host));
        pass &= ok;
        present.push(json!({ "n": n, "r3_found_verified": ok }));
    }
    Eval {
        pass,
        details: json!({ "even_rings_absent": absent, "r3_present": present }),
    }
}

fn claim_s_ring_parity(_: &Ctx) -> Eval {
    let alpha = 0.4226;
    let r2 = build_ring(2).unwrap();
    let r3 = build_ring(3).unwrap();
    let r5 = build_ring(5).unwrap();
    let mut pass = true;
    let mut rows = Vec::new();
    for depth in 0..=1usize {
        let host = build_s(30, alpha, depth).unwrap();
        let no_r3 = find_embedding(&r3, &host).is_none();
        let no_r5 = find_embedding(&r5, &host).is_none();
        pass &= no_r3 && no_r5;
        rows.push(json!({ "depth": depth, "r3_found": !no_r3, "r5_found": !no_r5 }));
    }
    let host0 = build_s(30, alpha, 0).unwrap();
    let r2_hit = find_embedding(&r2, &host0);
    let r2_ok = r2_hit.as_ref().is_some_and(|e| e.verify(&r2, &host0));
    pass &= r2_ok;
    Eval {
        pass,
        details: json!({ "odd_rings": rows, "r2_found_verified_depth0": r2_ok }),
    }
}

fn claim_cs_bound(ctx: &Ctx) -> Eval {
    // every digraph on 4 labeled nodes: 12 possible arcs
    let arcs: Vec<(usize, usize)> = (0..4)
        .flat_map(|u| (0..4).map(move |v| (u, v)))
        .filter(|&(u, v)| u != v)
        .collect();
    let mut exhaustive_checked = 0usize;
    let mut violations = 0usize;
    for mask in 0u32..(1 << 12) {
        let chosen: Vec<(usize, usize)> = arcs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &a)| a)
            .collect();
        let d = Digraph::from_arcs(4, &chosen);
        if d.min_out_degree() >= 1 {
            exhaustive_checked += 1;
            if !verify_cs_bound(&d).holds {
                violations += 1;
            }
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(ctx.seed);
    let mut random_checked = 0usize;
    for _ in 0..1000 {
        let n = rng.gen_range(2..=60usize);
        let p = rng.gen_range(0.02..0.95f64);
        let d = Digraph::random(n, p, rng.gen());
        random_checked += 1;
        if !verify_cs_bound(&d).holds {
            violations += 1;
        }
    }
    Eval {
        pass: violations == 0,
        details: json!({
            "exhaustive_4_node_digraphs_with_positive_outdegree": exhaustive_checked,
            "random_digraphs": random_checked,
            "violations": violations,
        }),
    }
}

fn claim_density_limits(_: &Ctx) -> Eval {
    let b = build_b(1000).edge_density();
    let g = build_g_half(1000).edge_density();
    let t = build_turan_t(999).edge_density();
    let gap_b = (b - 0.75).abs();
    let gap_g = (g - 0.5).abs();
    let gap_t = (t - 5.0 / 9.0).abs();
    Eval {
        pass: gap_b < 2e-3 && gap_g < 2e-3 && gap_t < 2e-3,
        details: json!({
            "bipartite_n1000": { "density": b, "gap": gap_b },
            "half_graph_n1000": { "density": g, "gap": gap_g },
            "three_part_n999": { "density": t, "gap": gap_t },
        }),
    }
}

fn claim_s_optimization(_: &Ctx) -> Eval {
    let (base_x, base_v) = optimize_alpha(s_base_density, 0.01, 0.99, 1e-7);
    let base_ok = (base_v - 0.577350).abs() <= 1e-4 && (base_x - 0.42265).abs() <= 1e-3;

    let (iter_x, iter_v) = optimize_alpha(s_iterated_density, 0.01, 0.99, 1e-7);
    let iter_ok = (iter_v - 0.588863).abs() <= 5e-4 && (iter_x - 0.438558).abs() <= 2e-3;

    let mut agreement = Vec::new();
    let mut agree_ok = true;
    for &alpha in &[0.40, 0.4226, 0.4386, 0.46] {
        // the counting recursion stands in for the materialized generator
        // at n = 3000; their equality is checked at a buildable size
        let linked = build_s(120, alpha, 2).unwrap().edge_count() as u64
            == s_edge_count(120, alpha, 2).unwrap();
        let gen = s_density(3000, alpha, 6).unwrap();
        let closed = s_iterated_density(alpha);
        let gap = (gen - closed).abs();
        agree_ok &= linked && gap <= 0.01;
        agreement.push(json!({
            "alpha": alpha,
            "generator_density_n3000_depth6": gen,
            "closed_form": closed,
            "gap": gap,
            "count_recursion_matches_builder_at_n120": linked,
        }));
    }
    Eval {
        pass: base_ok && iter_ok && agree_ok,
        details: json!({
            "base": { "argmax": base_x, "max": base_v, "ok": base_ok },
            "iterated": { "argmax": iter_x, "max": iter_v, "ok": iter_ok },
            "closed_form_vs_generator": agreement,
        }),
    }
}

fn host_consistency(g: &TripleGraph, fano: &TripleGraph, require_agreement: bool) -> (bool, Value) {
    let oracle_found = find_embedding(fano, g).is_some();
    match find_fano(g) {
        Err(e) => (false, json!({ "error": e.to_string() })),
        Ok(FanoOutcome::Found { fstar, embedding }) => {
            let sound = verify_fstar(g, &fstar) && embedding.verify(fano, g);
            (
                sound && oracle_found,
                json!({ "pipeline": "found", "witness_verified": sound, "oracle_found": oracle_found }),
            )
        }
        Ok(FanoOutcome::Failed { stage }) => {
            let ok = !require_agreement || !oracle_found;
            (
                ok,
                json!({ "pipeline": "failed", "stage": stage.as_str(), "oracle_found": oracle_found }),
            )
        }
    }
}

fn claim_fano_pipeline(ctx: &Ctx) -> Eval {
    let fano = build_fano();
    let mut pass = true;

    let k12 = TripleGraph::complete(12);
    let k12_ok = match find_fano(&k12) {
        Ok(FanoOutcome::Found { fstar, embedding }) => {
            verify_fstar(&k12, &fstar) && embedding.verify(&fano, &k12)
        }
        _ => false,
    };
    pass &= k12_ok;

    let b50 = build_b(50);
    let (b50_ok, b50_stage) = match find_fano(&b50) {
        Ok(FanoOutcome::Failed { stage }) => (true, stage.as_str().to_string()),
        _ => (false, "unexpected-success".to_string()),
    };
    pass &= b50_ok;

    let mut hosts = Vec::new();
    for i in 0..20u64 {
        let g = TripleGraph::random(40, 0.85, ctx.seed.wrapping_add(1 + i));
        let (ok, detail) = host_consistency(&g, &fano, true);
        pass &= ok;
        hosts.push(json!({ "host": format!("random(40, 0.85, seed+{})", 1 + i), "ok": ok, "outcome": detail }));
    }

    let mut extra = Vec::new();
    for (name, g) in &ctx.extra_hosts {
        // user-supplied hosts assert only soundness, not completeness
        let (ok, detail) = host_consistency(g, &fano, false);
        pass &= ok;
        extra.push(json!({ "host": name, "ok": ok, "outcome": detail }));
    }

    Eval {
        pass,
        details: json!({
            "complete_12": k12_ok,
            "bipartite_50": { "ok": b50_ok, "stage": b50_stage },
            "random_hosts": hosts,
            "extra_hosts": extra,
        }),
    }
}

fn claim_ring_blowup(_: &Ctx) -> Eval {
    let host = build_ring(3).unwrap().blow_up(2).unwrap();
    let found = find_ring_blowup(&host, 9);
    let blowup_ok = found
        .as_ref()
        .is_some_and(|w| w.t == 3 && verify_ring_blowup(&host, w));

    let none_ok = find_ring_blowup(&build_g_half(20), 9).is_none();
    Eval {
        pass: blowup_ok && none_ok,
        details: json!({
            "r3_blowup_t": found.map(|w| w.t),
            "r3_blowup_verified": blowup_ok,
            "half_graph_20_empty": none_ok,
        }),
    }
}

fn claim_brute_ex(_: &Ctx) -> Eval {
    let k4 = TripleGraph::complete(4);
    let k4e = k4_minus_edge();
    let mut pass = true;
    let mut rows = Vec::new();
    for n in [4usize, 5] {
        for (name, fam) in [("k4", vec![k4.clone()]), ("k4-minus-edge", vec![k4e.clone()])] {
            let brute = brute_ex(n, &fam).unwrap();
            let flat = oracle::max_edges_flat(n, &fam);
            pass &= brute.value == flat;
            rows.push(json!({
                "n": n,
                "family": name,
                "branch_and_bound": brute.value,
                "flat_enumeration": flat,
                "nodes_explored": brute.nodes_explored,
            }));
        }
    }
    let k4_at_4 = brute_ex(4, &[k4.clone()]).unwrap().value;
    pass &= k4_at_4 == 3;
    let mut empty_ok = true;
    for n in 3..=6usize {
        empty_ok &= brute_ex(n, &[]).unwrap().value == choose3(n);
    }
    pass &= empty_ok;
    Eval {
        pass,
        details: json!({
            "cross_checks": rows,
            "ex_4_no_k4": k4_at_4,
            "empty_family_matches_binomial_up_to_6": empty_ok,
        }),
    }
}

fn claim_bound_constants(_: &Ctx) -> Eval {
    let c9 = codegree_bound_rings(9).unwrap();
    let c8 = codegree_bound_rings(8).unwrap();
    let c9_ok = (c9 - 2f64.sqrt() / 3.0).abs() < 1e-15 && c9 < 0.5;
    let c8_ok = c8 == 0.5;
    let t2001 = turan_bound_rings(2001).unwrap();
    let t_ok = (t2001 - 0.5).abs() < 1e-3;
    Eval {
        pass: c9_ok && c8_ok && t_ok,
        details: json!({
            "codegree_bound_t9": c9,
            "codegree_bound_t8": c8,
            "turan_bound_t2001": t2001,
        }),
    }
}
