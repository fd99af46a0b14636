//! Aggregated constant reports and a named self-check suite.
//!
//! [`build_report`] bundles every quantity the crate computes for one norm
//! into a single structure, convenient for serialization by downstream
//! tooling. [`run_checks`] evaluates a battery of named invariants —
//! identities the underlying theory guarantees regardless of the norm — and
//! reports each with its residual and the tolerance it was held to. The
//! battery includes agreement between the fast solvers and the independent
//! brute-force evaluators in [`crate::oracle`], so a silent regression in
//! either route surfaces as a failed named check.

use crate::config::Params;
use crate::constants::{beta, beta_lambda, james, james_attainment, james_generalized, schaffer};
use crate::constants::AttainmentPair;
use crate::error::Result;
use crate::iso::{angular_distance, arc, defect, is_approx_orthogonal, min_feasible_epsilon, partner};
use crate::modulus::{delta, james_from_delta, rho, rho_prime, schaffer_from_rho};
use crate::norm::NormModel;
use crate::oracle::{self, GridSpec};
use crate::rng::SplitMix64;
use crate::vec2::TAU;
use alloc::vec::Vec;
use core::f64::consts::SQRT_2;

/// Tolerance for identities that hold to rounding error (gauge symmetry,
/// homogeneity, triangle inequality, sphere membership).
const EXACT_TOL: f64 = 1e-12;
/// Tolerance on the defect at a solved partner.
const DEFECT_TOL: f64 = 1e-8;
/// Tolerance on the halving identity `beta(1/2, x) = beta(x) / 2`.
const HALVING_TOL: f64 = 1e-10;
/// Slack on the theoretical ranges of the two constants.
const RANGE_TOL: f64 = 1e-6;
/// Agreement required between a constant computed by sphere scan and the
/// same constant recovered from its modulus equation.
const CROSS_ROUTE_TOL: f64 = 2e-3;
/// Slack on modulus ordering and monotonicity comparisons.
const MODULUS_ORDER_TOL: f64 = 1e-6;
/// Slack on the `0 ≤ ρ'(ε) ≤ ε` range.
const RHO_PRIME_RANGE_TOL: f64 = 1e-9;
/// Brute-force oracle agreement at the reference grid size; scaled inversely
/// when the checks run the oracle on a smaller grid.
const ORACLE_BASE_TOL: f64 = 5e-3;
const ORACLE_BASE_GRID: usize = 4096;
/// Grid the self-checks run the oracle at (full reference resolution is left
/// to the dedicated test suites; the checks favor interactive latency).
const ORACLE_CHECK_GRID: usize = 1024;
/// A membership mismatch between the arc and the defining inequality is
/// only excusable this close (in radians) to an arc endpoint.
const ARC_ANGLE_SLACK: f64 = 1e-6;

/// Outcome of one named invariant check.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    /// Worst observed deviation (`NaN` when the computation itself failed).
    pub residual: f64,
    /// The bound `residual` was compared against.
    pub tolerance: f64,
}

impl CheckResult {
    fn bounded(name: &'static str, residual: f64, tolerance: f64) -> Self {
        CheckResult {
            name,
            passed: residual.is_finite() && residual <= tolerance,
            residual,
            tolerance,
        }
    }

    fn failed(name: &'static str, tolerance: f64) -> Self {
        CheckResult {
            name,
            passed: false,
            residual: f64::NAN,
            tolerance,
        }
    }
}

/// One row of the modulus curve in a [`ConstantsReport`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModulusSample {
    pub epsilon: f64,
    pub delta: f64,
    pub rho: f64,
    pub rho_prime: f64,
}

/// Everything the crate computes for one norm, in one structure.
#[derive(Debug, Clone, PartialEq)]
pub struct ConstantsReport {
    pub james: f64,
    pub schaffer: f64,
    /// James constant recovered from `ε = 2 − 2δ(ε)` (independent route).
    pub james_from_delta: f64,
    /// Schäffer constant recovered from `ε = 2 − 2ρ(ε)`.
    pub schaffer_from_rho: f64,
    /// `(λ, J(λ))` rows for the requested weights.
    pub generalized_james: Vec<(f64, f64)>,
    /// Modulus curve rows for the requested ε grid.
    pub curve: Vec<ModulusSample>,
    /// Unit pairs realizing the James constant.
    pub attainment: Vec<AttainmentPair>,
}

/// Tolerance used when collecting James attainment pairs for a report.
const ATTAINMENT_TOL: f64 = 1e-9;

/// Compute a full [`ConstantsReport`].
pub fn build_report(
    norm: &NormModel,
    lambdas: &[f64],
    eps_grid: &[f64],
    params: &Params,
) -> Result<ConstantsReport> {
    let mut generalized = Vec::with_capacity(lambdas.len());
    for &l in lambdas {
        generalized.push((l, james_generalized(norm, l, params)?));
    }
    let mut curve = Vec::with_capacity(eps_grid.len());
    for &e in eps_grid {
        curve.push(ModulusSample {
            epsilon: e,
            delta: delta(norm, e, params)?,
            rho: rho(norm, e, params)?,
            rho_prime: rho_prime(norm, e, params)?,
        });
    }
    Ok(ConstantsReport {
        james: james(norm, params)?,
        schaffer: schaffer(norm, params)?,
        james_from_delta: james_from_delta(norm, params)?,
        schaffer_from_rho: schaffer_from_rho(norm, params)?,
        generalized_james: generalized,
        curve,
        attainment: james_attainment(norm, ATTAINMENT_TOL, params)?,
    })
}

/// Run the named invariant battery on one norm. Deterministic in `seed`.
pub fn run_checks(norm: &NormModel, seed: u64, params: &Params) -> Vec<CheckResult> {
    let mut rng = SplitMix64::new(seed);
    let mut out = Vec::new();

    // Gauge identities on random vectors.
    let mut sym = 0.0f64;
    let mut hom = 0.0f64;
    let mut tri = 0.0f64;
    for _ in 0..64 {
        let u = crate::vec2::Vec2::new(rng.range(-2.0, 2.0), rng.range(-2.0, 2.0));
        let v = crate::vec2::Vec2::new(rng.range(-2.0, 2.0), rng.range(-2.0, 2.0));
        let t = rng.range(-3.0, 3.0);
        sym = sym.max((norm.gauge(u) - norm.gauge(-u)).abs());
        hom = hom.max((norm.gauge(t * u) - t.abs() * norm.gauge(u)).abs());
        tri = tri.max(norm.gauge(u + v) - norm.gauge(u) - norm.gauge(v));
    }
    out.push(CheckResult::bounded("gauge-symmetry", sym, EXACT_TOL));
    out.push(CheckResult::bounded("gauge-homogeneity", hom, EXACT_TOL));
    out.push(CheckResult::bounded("triangle-inequality", tri, EXACT_TOL));

    let mut on_sphere = 0.0f64;
    for _ in 0..64 {
        let p = norm.sphere_point(rng.range(0.0, TAU));
        on_sphere = on_sphere.max((norm.gauge(p) - 1.0).abs());
    }
    out.push(CheckResult::bounded("sphere-point-on-sphere", on_sphere, EXACT_TOL));

    // Partner solver: residual defect and orientation on random inputs.
    let mut worst_defect = 0.0f64;
    let mut min_cross = f64::INFINITY;
    let mut solver_failed = false;
    for _ in 0..16 {
        let x = norm.sphere_point(rng.range(0.0, TAU));
        for r in [0.5, 1.0, 2.0] {
            match partner(norm, x, r, params) {
                Ok(res) => {
                    worst_defect = worst_defect.max(defect(norm, x, res.primary).abs());
                    min_cross = min_cross.min(x.cross(res.primary));
                }
                Err(_) => solver_failed = true,
            }
        }
    }
    if solver_failed {
        out.push(CheckResult::failed("partner-defect", DEFECT_TOL));
        out.push(CheckResult::failed("partner-orientation", 0.0));
    } else {
        out.push(CheckResult::bounded("partner-defect", worst_defect, DEFECT_TOL));
        out.push(CheckResult {
            name: "partner-orientation",
            passed: min_cross > 0.0,
            residual: (-min_cross).max(0.0),
            tolerance: 0.0,
        });
    }

    // Halving identity for the convex-weight functional.
    let mut halving = 0.0f64;
    let mut halving_failed = false;
    for _ in 0..8 {
        let x = norm.sphere_point(rng.range(0.0, TAU));
        match (beta_lambda(norm, x, 0.5, params), beta(norm, x, params)) {
            (Ok(h), Ok(b)) => halving = halving.max((h - 0.5 * b).abs()),
            _ => halving_failed = true,
        }
    }
    out.push(if halving_failed {
        CheckResult::failed("beta-lambda-halving", HALVING_TOL)
    } else {
        CheckResult::bounded("beta-lambda-halving", halving, HALVING_TOL)
    });

    // Constants: theoretical ranges, ordering, and the modulus routes.
    let j = james(norm, params);
    let s = schaffer(norm, params);
    match (&j, &s) {
        (Ok(j), Ok(s)) => {
            let out_of_range = (SQRT_2 - j).max(j - 2.0).max(0.0);
            out.push(CheckResult::bounded("james-range", out_of_range, RANGE_TOL));
            let out_of_range = (1.0 - s).max(s - SQRT_2).max(0.0);
            out.push(CheckResult::bounded("schaffer-range", out_of_range, RANGE_TOL));
            out.push(CheckResult::bounded(
                "schaffer-le-james",
                (s - j).max(0.0),
                RANGE_TOL,
            ));
            match james_from_delta(norm, params) {
                Ok(jd) => out.push(CheckResult::bounded(
                    "james-modulus-route",
                    (jd - j).abs(),
                    CROSS_ROUTE_TOL,
                )),
                Err(_) => out.push(CheckResult::failed("james-modulus-route", CROSS_ROUTE_TOL)),
            }
            match schaffer_from_rho(norm, params) {
                Ok(sr) => out.push(CheckResult::bounded(
                    "schaffer-modulus-route",
                    (sr - s).abs(),
                    CROSS_ROUTE_TOL,
                )),
                Err(_) => out.push(CheckResult::failed(
                    "schaffer-modulus-route",
                    CROSS_ROUTE_TOL,
                )),
            }
        }
        _ => {
            for name in [
                "james-range",
                "schaffer-range",
                "schaffer-le-james",
                "james-modulus-route",
                "schaffer-modulus-route",
            ] {
                out.push(CheckResult::failed(name, RANGE_TOL));
            }
        }
    }

    // Modulus curve: monotonicity of δ, ordering ρ ≥ δ, range of ρ'.
    let eps_grid = [0.2, 0.6, 1.0, 1.4, 1.8];
    let mut monotone = 0.0f64;
    let mut ordering = 0.0f64;
    let mut prime_range = 0.0f64;
    let mut modulus_failed = false;
    let mut prev_delta = f64::NEG_INFINITY;
    for &e in &eps_grid {
        match (delta(norm, e, params), rho(norm, e, params)) {
            (Ok(d), Ok(r)) => {
                monotone = monotone.max(prev_delta - d);
                ordering = ordering.max(d - r);
                prev_delta = d;
            }
            _ => modulus_failed = true,
        }
    }
    for e in [0.25, 0.75, 1.25] {
        match rho_prime(norm, e, params) {
            Ok(rp) => prime_range = prime_range.max((-rp).max(rp - e)),
            Err(_) => modulus_failed = true,
        }
    }
    if modulus_failed {
        out.push(CheckResult::failed("delta-monotone", MODULUS_ORDER_TOL));
        out.push(CheckResult::failed("rho-dominates-delta", MODULUS_ORDER_TOL));
        out.push(CheckResult::failed("rho-prime-range", RHO_PRIME_RANGE_TOL));
    } else {
        out.push(CheckResult::bounded("delta-monotone", monotone, MODULUS_ORDER_TOL));
        out.push(CheckResult::bounded(
            "rho-dominates-delta",
            ordering,
            MODULUS_ORDER_TOL,
        ));
        out.push(CheckResult::bounded(
            "rho-prime-range",
            prime_range,
            RHO_PRIME_RANGE_TOL,
        ));
    }

    // Minimal feasible tolerance stays strictly below 1 for independent pairs.
    let mut worst_feasible = 0.0f64;
    let mut feasible_failed = false;
    for _ in 0..16 {
        let x = norm.sphere_point(rng.range(0.0, TAU));
        let mut y = norm.sphere_point(rng.range(0.0, TAU));
        if x.cross(y).abs() < 1e-6 {
            y = norm.sphere_point(y.angle() + 0.7);
        }
        match min_feasible_epsilon(norm, x, y) {
            Ok(e) => worst_feasible = worst_feasible.max(e),
            Err(_) => feasible_failed = true,
        }
    }
    out.push(CheckResult {
        name: "min-epsilon-below-one",
        passed: !feasible_failed && worst_feasible < 1.0,
        residual: worst_feasible,
        tolerance: 1.0,
    });

    // The approximate-orthogonality arc agrees with the defining inequality.
    let mut mismatches = 0usize;
    let mut arc_failed = false;
    for _ in 0..8 {
        let x = norm.sphere_point(rng.range(0.0, TAU));
        for eps in [0.1, 0.5] {
            let a = match arc(norm, x, eps, params) {
                Ok(a) => a,
                Err(_) => {
                    arc_failed = true;
                    continue;
                }
            };
            let endpoint_angles = [
                a.endpoint_toward_x.angle(),
                a.endpoint_toward_neg_x.angle(),
                (-a.endpoint_toward_x).angle(),
                (-a.endpoint_toward_neg_x).angle(),
            ];
            for k in 0..256 {
                let theta = TAU * k as f64 / 256.0;
                let z = norm.sphere_point(theta);
                let by_def = match is_approx_orthogonal(norm, x, z, eps) {
                    Ok(b) => b,
                    Err(_) => {
                        arc_failed = true;
                        continue;
                    }
                };
                if by_def != a.contains(z) {
                    let near_endpoint = endpoint_angles
                        .iter()
                        .any(|&b| angular_distance(theta, b) <= ARC_ANGLE_SLACK);
                    if !near_endpoint {
                        mismatches += 1;
                    }
                }
            }
        }
    }
    out.push(CheckResult {
        name: "arc-matches-definition",
        passed: !arc_failed && mismatches == 0,
        residual: mismatches as f64,
        tolerance: 0.0,
    });

    // Independent brute-force routes.
    let grid = GridSpec::new(ORACLE_CHECK_GRID);
    let oracle_tol = ORACLE_BASE_TOL * ORACLE_BASE_GRID as f64 / ORACLE_CHECK_GRID as f64;
    match (&j, oracle::james(norm, &grid)) {
        (Ok(j), jo) => out.push(CheckResult::bounded(
            "oracle-james-agreement",
            (jo - j).abs(),
            oracle_tol,
        )),
        _ => out.push(CheckResult::failed("oracle-james-agreement", oracle_tol)),
    }
    match (&s, oracle::schaffer(norm, &grid)) {
        (Ok(s), so) => out.push(CheckResult::bounded(
            "oracle-schaffer-agreement",
            (so - s).abs(),
            oracle_tol,
        )),
        _ => out.push(CheckResult::failed("oracle-schaffer-agreement", oracle_tol)),
    }
    match (delta(norm, 1.0, params), oracle::delta(norm, 1.0, &grid)) {
        (Ok(d), doracle) => out.push(CheckResult::bounded(
            "oracle-delta-agreement",
            (doracle - d).abs(),
            oracle_tol,
        )),
        _ => out.push(CheckResult::failed("oracle-delta-agreement", oracle_tol)),
    }
    match (rho(norm, 1.0, params), oracle::rho(norm, 1.0, &grid)) {
        (Ok(r), roracle) => out.push(CheckResult::bounded(
            "oracle-rho-agreement",
            (roracle - r).abs(),
            oracle_tol,
        )),
        _ => out.push(CheckResult::failed("oracle-rho-agreement", oracle_tol)),
    }

    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_checks_pass_on_reference_norms() {
        let params = Params::default();
        for norm in [NormModel::hexagon(), NormModel::euclidean()] {
            let results = run_checks(&norm, 0x5eed, &params);
            for r in &results {
                assert!(
                    r.passed,
                    "{} failed: residual {} vs tolerance {}",
                    r.name, r.residual, r.tolerance
                );
            }
            assert!(results.len() >= 15);
        }
    }

    #[test]
    fn checks_are_deterministic_in_the_seed() {
        let params = Params::default();
        let norm = NormModel::hexagon();
        let a = run_checks(&norm, 7, &params);
        let b = run_checks(&norm, 7, &params);
        assert_eq!(a, b);
    }

    #[test]
    fn report_bundles_consistent_values() {
        let params = Params::coarse();
        let norm = NormModel::euclidean();
        let report = build_report(&norm, &[0.3, 0.5], &[0.5, 1.0, 1.5], &params).unwrap();
        let sqrt2 = core::f64::consts::SQRT_2;
        assert!((report.james - sqrt2).abs() < 1e-4);
        assert!((report.schaffer - sqrt2).abs() < 1e-4);
        assert!((report.james_from_delta - sqrt2).abs() < 5e-3);
        assert!((report.schaffer_from_rho - sqrt2).abs() < 5e-3);
        assert_eq!(report.generalized_james.len(), 2);
        let (l, j_half) = report.generalized_james[1];
        assert_eq!(l, 0.5);
        assert!((j_half - sqrt2 / 2.0).abs() < 1e-4);
        assert_eq!(report.curve.len(), 3);
        for row in &report.curve {
            let want = 1.0 - (1.0 - row.epsilon * row.epsilon / 4.0).sqrt();
            assert!((row.delta - want).abs() < 1e-4);
            assert!(row.rho >= row.delta - 1e-9);
            assert!(row.rho_prime >= 0.0 && row.rho_prime <= row.epsilon + 1e-9);
        }
        assert!(!report.attainment.is_empty());
    }
}
