//! Closed-form densities, numeric optimization of the three-part
//! construction, and convergence sweeps of the generators against their
//! limits.
//!
//! Known bounds on the single-ring Turán density, by t mod 6
//! (lower bounds from the constructions here; upper bounds from
//! semidefinite flag computations, quoted as reference constants only):
//!
//! | t mod 6 | lower    | upper    |
//! |---------|----------|----------|
//! | 0       | 1/2      | 0.512303 |
//! | 1       | 0.588863 | 0.594312 |
//! | 2       | 5/9      | 0.561666 |
//! | 3       | 0.588863 | 0.594258 |
//! | 4       | 5/9      | 0.561666 |
//! | 5       | 0.588863 | 0.594312 |

use crate::constructions::{build_b, build_g_half, build_turan_t, ConstructionKind};
use crate::error::{Error, Result};
use crate::graph::TripleGraph;

/// Density of the three-part construction before iterating, with alpha the
/// fraction of vertices outside the pair-part: 3a(a^2/2 - 3a/2 + 1).
pub fn s_base_density(alpha: f64) -> f64 {
    3.0 * alpha * (alpha * alpha / 2.0 - 1.5 * alpha + 1.0)
}

/// Density after iterating inside the two small parts. Each level adds two
/// copies scaled by (alpha/2)^3, a geometric series with ratio alpha^3/4.
pub fn s_iterated_density(alpha: f64) -> f64 {
    s_base_density(alpha) / (1.0 - alpha.powi(3) / 4.0)
}

/// Maximizes `f` on [lo, hi]: golden-section search down to width `tol`,
/// refined by a fine grid sweep around the landing point. Deterministic;
/// ties in the sweep resolve to the smallest argument.
pub fn optimize_alpha(f: impl Fn(f64) -> f64, lo: f64, hi: f64, tol: f64) -> (f64, f64) {
    assert!(lo < hi && tol > 0.0);
    const INV_PHI: f64 = 0.618_033_988_749_894_9;
    let mut a = lo;
    let mut b = hi;
    let mut x1 = b - INV_PHI * (b - a);
    let mut x2 = a + INV_PHI * (b - a);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    while b - a > tol {
        if f1 >= f2 {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - INV_PHI * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + INV_PHI * (b - a);
            f2 = f(x2);
        }
    }
    let center = 0.5 * (a + b);
    let mut best_x = center.clamp(lo, hi);
    let mut best_f = f(best_x);
    let step = tol / 100.0;
    for i in -200i64..=200 {
        let x = center + i as f64 * step;
        if x < lo || x > hi {
            continue;
        }
        let fx = f(x);
        if fx > best_f {
            best_f = fx;
            best_x = x;
        }
    }
    (best_x, best_f)
}

/// Co-degree density upper bound for the ring family up to t: sqrt(2/t).
pub fn codegree_bound_rings(t: usize) -> Result<f64> {
    if t < 2 {
        return Err(Error::InvalidParameter(format!(
            "ring families start at t = 2, got {t}"
        )));
    }
    Ok((2.0 / t as f64).sqrt())
}

/// Turán density upper bound for the ring family up to t: 1/2 + 1/(t-1).
/// Undefined at t = 2, where the formula degenerates.
pub fn turan_bound_rings(t: usize) -> Option<f64> {
    if t < 3 {
        return None;
    }
    Some(0.5 + 1.0 / (t - 1) as f64)
}

/// Generator densities over a list of sizes, compared against the
/// construction's limiting density.
#[derive(Clone, Debug)]
pub struct DensityReport {
    pub construction: String,
    pub n_values: Vec<usize>,
    pub densities: Vec<f64>,
    pub limit_claim: f64,
    pub max_abs_gap: f64,
}

/// Runs the generator for each n and reports the worst gap to the limit.
/// Supported kinds: the bipartite construction (limit 3/4), the half-graph
/// construction (limit 1/2) and the three-part Turán construction (5/9).
pub fn density_sweep(kind: ConstructionKind, n_values: &[usize]) -> Result<DensityReport> {
    let (name, limit, gen): (&str, f64, fn(usize) -> TripleGraph) = match kind {
        ConstructionKind::B => ("b", 0.75, build_b),
        ConstructionKind::GHalf => ("g-half", 0.5, build_g_half),
        ConstructionKind::TuranT => ("turan", 5.0 / 9.0, build_turan_t),
        other => {
            return Err(Error::InvalidParameter(format!(
                "density sweep not defined for {other:?}"
            )))
        }
    };
    let densities: Vec<f64> = n_values.iter().map(|&n| gen(n).edge_density()).collect();
    let max_abs_gap = densities
        .iter()
        .map(|d| (d - limit).abs())
        .fold(0.0, f64::max);
    Ok(DensityReport {
        construction: name.to_string(),
        n_values: n_values.to_vec(),
        densities,
        limit_claim: limit,
        max_abs_gap,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::s_density;

    const SQRT3_OVER_3: f64 = 0.577_350_269_189_625_8;

    #[test]
    fn base_density_values() {
        assert!((s_base_density(1.0 - SQRT3_OVER_3) - SQRT3_OVER_3).abs() < 1e-12);
        assert_eq!(s_base_density(0.0), 0.0);
        assert!(s_base_density(1.0).abs() < 1e-12);
    }

    #[test]
    fn iterated_density_values() {
        assert!(s_iterated_density(1.0).abs() < 1e-12);
        let v = s_iterated_density(0.438558);
        assert!((v - 0.588863).abs() < 5e-4, "got {v}");
        for alpha in [0.1, 0.3, 0.42, 0.6, 0.9] {
            assert!(s_iterated_density(alpha) >= s_base_density(alpha));
        }
    }

    #[test]
    fn iterated_closed_form_matches_generator() {
        for &alpha in &[0.40, 0.4226, 0.4386, 0.46] {
            let gen = s_density(3000, alpha, 6).unwrap();
            let closed = s_iterated_density(alpha);
            assert!(
                (gen - closed).abs() <= 0.01,
                "alpha={alpha}: generator {gen} vs closed form {closed}"
            );
        }
    }

    #[test]
    fn optimizer_finds_known_optima() {
        let (x, v) = optimize_alpha(s_base_density, 0.01, 0.99, 1e-7);
        assert!((x - 0.4226497).abs() < 1e-4);
        assert!((v - SQRT3_OVER_3).abs() < 1e-6);

        let (x, v) = optimize_alpha(s_iterated_density, 0.01, 0.99, 1e-7);
        assert!((x - 0.438558).abs() < 2e-3, "argmax {x}");
        assert!((v - 0.588863).abs() < 5e-4, "max {v}");

        let (_, v) = optimize_alpha(|_| 2.5, 0.0, 1.0, 1e-6);
        assert_eq!(v, 2.5);
    }

    #[test]
    fn optimizer_is_tolerance_stable() {
        let mut tol = 1e-4;
        let (mut prev, _) = optimize_alpha(s_iterated_density, 0.01, 0.99, tol);
        for _ in 0..6 {
            let (x, _) = optimize_alpha(s_iterated_density, 0.01, 0.99, tol / 2.0);
            assert!((x - prev).abs() <= tol, "tol={tol}: {prev} -> {x}");
            prev = x;
            tol /= 2.0;
        }
    }

    #[test]
    fn bound_constants() {
        assert!(codegree_bound_rings(1).is_err());
        assert_eq!(codegree_bound_rings(8).unwrap(), 0.5);
        let t9 = codegree_bound_rings(9).unwrap();
        assert!((t9 - 2f64.sqrt() / 3.0).abs() < 1e-15);
        assert!(t9 < 0.5);
        assert_eq!(codegree_bound_rings(2).unwrap(), 1.0);

        assert_eq!(turan_bound_rings(2), None);
        assert_eq!(turan_bound_rings(3), Some(1.0));
        assert!((turan_bound_rings(2001).unwrap() - 0.5).abs() < 1e-3);
    }

    #[test]
    fn sweeps_converge() {
        let ns: Vec<usize> = (1..=10).map(|i| 100 * i).collect();
        let b = density_sweep(ConstructionKind::B, &ns).unwrap();
        let g = density_sweep(ConstructionKind::GHalf, &ns).unwrap();
        for (i, &n) in ns.iter().enumerate() {
            assert!((b.densities[i] - 0.75).abs() <= 3.0 / n as f64, "B at n={n}");
            assert!((g.densities[i] - 0.5).abs() <= 3.0 / n as f64, "G at n={n}");
        }
        assert!(density_sweep(ConstructionKind::Fano, &ns).is_err());
    }
}
