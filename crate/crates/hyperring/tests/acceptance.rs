//! The acceptance battery: every registered claim must pass at its pinned
//! tolerance. One line per claim is printed so a full run reads as a
//! checklist (`cargo test --test acceptance -- --nocapture`).

use hyperring::verify::{run_single, ClaimStatus, VerifyConfig};

fn check(id: &str) {
    let result = run_single(id, &VerifyConfig::default())
        .expect("claim ran")
        .expect("claim id registered");
    let tag = match result.status {
        ClaimStatus::Pass => "PASS",
        ClaimStatus::Fail => "FAIL",
        ClaimStatus::Skipped => "SKIP",
    };
    println!("[{tag}] {id}: {}", result.statement);
    if result.status != ClaimStatus::Pass {
        panic!("{id} failed: {}", serde_json::to_string_pretty(&result.details).unwrap());
    }
}

#[test]
fn c01_ring_lm_property() {
    check("c01-ring-lm-property");
}

#[test]
fn c02_fano_free_bipartite() {
    check("c02-fano-free-bipartite");
}

#[test]
fn c03_ghalf_ring_free() {
    check("c03-ghalf-ring-free");
}

#[test]
fn c04_turan_ring_parity() {
    check("c04-turan-ring-parity");
}

#[test]
fn c05_s_ring_parity() {
    check("c05-s-ring-parity");
}

#[test]
fn c06_chvatal_szemeredi() {
    check("c06-chvatal-szemeredi");
}

#[test]
fn c07_density_limits() {
    check("c07-density-limits");
}

#[test]
fn c08_s_optimization() {
    check("c08-s-optimization");
}

#[test]
fn c09_fano_pipeline() {
    check("c09-fano-pipeline");
}

#[test]
fn c10_ring_blowup_search() {
    check("c10-ring-blowup-search");
}

#[test]
fn c11_brute_ex_oracle() {
    check("c11-brute-ex-oracle");
}

#[test]
fn c12_bound_constants() {
    check("c12-bound-constants");
}
