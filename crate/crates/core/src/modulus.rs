//! Convexity and smoothness moduli of the norm, and the sphere constants
//! recovered from them.
//!
//! For `ε ∈ [0, 2]`:
//! * modulus of convexity
//!   `δ(ε) = inf { 1 − ‖x+y‖/2 : ‖x‖ = ‖y‖ = 1, ‖x−y‖ ≥ ε }`,
//! * its companion
//!   `ρ(ε) = sup { 1 − ‖x+y‖/2 : ‖x‖ = ‖y‖ = 1, ‖x−y‖ ≤ ε }`,
//! * and for `ε ≥ 0` the modulus of smoothness
//!   `ρ'(ε) = sup { (‖x+εy‖ + ‖x−εy‖)/2 − 1 : ‖x‖ = ‖y‖ = 1 }`,
//!   which always lies in `[0, ε]`.
//!
//! The optimizations reduce to one-dimensional searches: fix `x` on the
//! sphere and walk `y` counterclockwise from `x` to `−x`. Along that walk
//! the distance `‖x − y‖` grows monotonically from 0 to 2 while `‖x + y‖`
//! shrinks from 2 to 0, so for fixed `x` the best admissible `y` sits at a
//! distance crossing: the *first* point with `‖x−y‖ ≥ ε` for `δ` (it
//! maximizes `‖x+y‖` over the feasible set) and the *last* point with
//! `‖x−y‖ ≤ ε` for `ρ` (it minimizes `‖x+y‖`). Restricting `x` to a half
//! sphere loses nothing: the objective and constraint are invariant under
//! negating both vectors, and scanning `x` over the whole sphere with `y`
//! confined to one side covers every unordered pair.
//!
//! The James constant solves `ε = 2 − 2δ(ε)` (largest such `ε`), and the
//! Schäffer constant solves `ε = 2 − 2ρ(ε)` (smallest such `ε`); both are
//! recovered here directly from the moduli as an independent cross-check on
//! the sphere-scan computations in [`crate::constants`].

use crate::config::Params;
use crate::constants::AttainmentPair;
use crate::error::{Error, Result};
use crate::iso::defect;
use crate::norm::NormModel;
use crate::solve::{cyclic_sweep_max, cyclic_sweep_min, golden_max, golden_min, predicate_boundary};
use crate::vec2::Vec2;
use alloc::vec::Vec;
use core::f64::consts::PI;

/// Slack added to the distance threshold when locating a crossing of
/// `θ ↦ ‖x − y(θ)‖`. On polygonal spheres that function can sit *exactly at*
/// the threshold along a whole sub-arc; rounding then makes the raw
/// comparison flicker across the arc and a bisection could stop anywhere
/// inside it. The slack keeps the whole arc robustly on one side, so the
/// crossing found is the arc's far end — the end the optimization wants.
/// The induced distance bias is of the same order and far below all
/// reported tolerances.
const DISTANCE_BAND: f64 = 1e-12;

/// Largest admissible argument for the two diameter moduli.
const EPS_MAX: f64 = 2.0;

/// How close to a bracket endpoint the constant-from-modulus solvers
/// resolve the crossing of `ε ↦ 2 − 2·modulus(ε)` with `ε`.
const CROSSING_TOL: f64 = 1e-5;

fn check_eps_range(eps: f64) -> Result<f64> {
    if !(0.0..=EPS_MAX).contains(&eps) {
        return Err(Error::InvalidEpsilon(eps));
    }
    Ok(eps)
}

/// For unit `x = sphere(theta_x)`, the first `θ ∈ [θx, θx+π]` with
/// `‖x − y(θ)‖ ≥ eps`, together with the objective `1 − ‖x+y‖/2` there.
fn first_crossing_value(norm: &NormModel, theta_x: f64, eps: f64, params: &Params) -> (f64, Vec2) {
    let x = norm.sphere_point(theta_x);
    let g = |theta: f64| norm.gauge(x - norm.sphere_point(theta));
    let (lo, hi) = (theta_x, theta_x + PI);
    let p = |theta: f64| g(theta) >= eps - DISTANCE_BAND;
    let theta = if p(lo) {
        lo // eps ≈ 0: the whole walk is admissible and y = x is optimal.
    } else if !p(hi) {
        hi // unreachable for eps ≤ 2; kept as a safe fallback.
    } else {
        predicate_boundary(lo, hi, params.angle_tol, params.max_iter, p)
    };
    let y = norm.sphere_point(theta);
    (1.0 - norm.gauge(x + y) / 2.0, y)
}

/// For unit `x = sphere(theta_x)`, the last `θ ∈ [θx, θx+π]` with
/// `‖x − y(θ)‖ ≤ eps`, together with the objective `1 − ‖x+y‖/2` there.
fn last_crossing_value(norm: &NormModel, theta_x: f64, eps: f64, params: &Params) -> (f64, Vec2) {
    let x = norm.sphere_point(theta_x);
    let g = |theta: f64| norm.gauge(x - norm.sphere_point(theta));
    let (lo, hi) = (theta_x, theta_x + PI);
    let q = |theta: f64| g(theta) <= eps + DISTANCE_BAND;
    let theta = if q(hi) {
        hi // eps ≈ 2: everything is admissible and y = -x is optimal.
    } else {
        predicate_boundary(lo, hi, params.angle_tol, params.max_iter, q)
    };
    let y = norm.sphere_point(theta);
    (1.0 - norm.gauge(x + y) / 2.0, y)
}

/// Modulus of convexity `δ(eps)` for `eps ∈ [0, 2]`.
pub fn delta(norm: &NormModel, eps: f64, params: &Params) -> Result<f64> {
    let eps = check_eps_range(eps)?;
    let f = |theta_x: f64| first_crossing_value(norm, theta_x, eps, params).0;
    let (_, v) = cyclic_sweep_min(0.0, PI, params.modulus_grid, params.refine_iters, f);
    Ok(v.max(0.0))
}

/// Companion modulus `ρ(eps)` for `eps ∈ [0, 2]`. Always `≥ δ(eps)`.
pub fn rho(norm: &NormModel, eps: f64, params: &Params) -> Result<f64> {
    let eps = check_eps_range(eps)?;
    let f = |theta_x: f64| last_crossing_value(norm, theta_x, eps, params).0;
    let (_, v) = cyclic_sweep_max(0.0, PI, params.modulus_grid, params.refine_iters, f);
    Ok(v.max(0.0))
}

/// Modulus of smoothness `ρ'(eps)` for `eps ≥ 0`; lies in `[0, eps]`.
pub fn rho_prime(norm: &NormModel, eps: f64, params: &Params) -> Result<f64> {
    if !(eps >= 0.0) || !eps.is_finite() {
        return Err(Error::InvalidEpsilon(eps));
    }
    if eps == 0.0 {
        return Ok(0.0);
    }
    let h = |tx: f64, ty: f64| {
        let x = norm.sphere_point(tx);
        let ey = eps * norm.sphere_point(ty);
        (norm.gauge(x + ey) + norm.gauge(x - ey)) / 2.0 - 1.0
    };

    // Both arguments may be restricted to a half sphere: negating either
    // vector permutes the two gauge terms.
    let n = params.pair_grid.max(4);
    let step = PI / n as f64;
    let mut cells: Vec<(f64, usize, usize)> = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let v = h(step * i as f64, step * j as f64);
            if cells.len() < 4 {
                cells.push((v, i, j));
                cells.sort_by(|a, b| b.0.total_cmp(&a.0));
            } else if v > cells[3].0 {
                // Keep the four best cells that are pairwise well separated,
                // so distinct basins all get refined.
                let sep = 2isize;
                let near = cells.iter().position(|&(_, ci, cj)| {
                    (ci as isize - i as isize).abs() <= sep
                        && (cj as isize - j as isize).abs() <= sep
                });
                match near {
                    Some(k) if cells[k].0 < v => {
                        cells[k] = (v, i, j);
                        cells.sort_by(|a, b| b.0.total_cmp(&a.0));
                    }
                    Some(_) => {}
                    None => {
                        cells[3] = (v, i, j);
                        cells.sort_by(|a, b| b.0.total_cmp(&a.0));
                    }
                }
            }
        }
    }

    let mut best = cells.first().map_or(0.0, |c| c.0);
    for &(_, i, j) in &cells {
        let (mut tx, mut ty) = (step * i as f64, step * j as f64);
        for _ in 0..3 {
            let (nx, _) = golden_max(tx - step, tx + step, params.refine_iters, |t| h(t, ty));
            tx = nx;
            let (ny, v) = golden_max(ty - step, ty + step, params.refine_iters, |t| h(tx, t));
            ty = ny;
            best = best.max(v);
        }
    }
    Ok(best.clamp(0.0, eps))
}

/// The James constant as the largest solution of `ε = 2 − 2δ(ε)`,
/// computed purely from the modulus of convexity.
pub fn james_from_delta(norm: &NormModel, params: &Params) -> Result<f64> {
    let lo = core::f64::consts::SQRT_2 - 0.01;
    let hi = EPS_MAX;
    let h = |e: f64| -> Result<f64> { Ok(2.0 - 2.0 * delta(norm, e, params)? - e) };

    if h(hi)? > -1e-9 {
        // δ(2) ≈ 0: the sphere contains a diameter-length segment pair and
        // the equation is solved by the endpoint itself.
        return Ok(hi);
    }
    let n = params.bracket_grid.max(2);
    let mut values = Vec::with_capacity(n + 1);
    for i in 0..=n {
        let e = lo + (hi - lo) * i as f64 / n as f64;
        values.push((e, h(e)?));
    }
    // h decreases; bracket its last sign change and bisect.
    let mut bracket = None;
    for w in values.windows(2) {
        if w[0].1 > 0.0 && w[1].1 <= 0.0 {
            bracket = Some((w[0].0, w[1].0));
        }
    }
    let Some((a, b)) = bracket else {
        return Ok(if values[0].1 <= 0.0 { lo } else { hi });
    };
    let root = predicate_boundary(a, b, CROSSING_TOL, params.max_iter, |e| {
        h(e).map_or(false, |v| v > 0.0)
    });
    Ok(root)
}

/// The Schäffer constant as the smallest solution of `ε = 2 − 2ρ(ε)`,
/// computed purely from the companion modulus.
pub fn schaffer_from_rho(norm: &NormModel, params: &Params) -> Result<f64> {
    let lo = 0.95;
    let hi = 1.45;
    let g = |e: f64| -> Result<f64> { Ok(e - (2.0 - 2.0 * rho(norm, e, params)?)) };

    if g(lo)? > 0.0 {
        return Ok(lo);
    }
    let n = params.bracket_grid.max(2);
    let mut bracket = None;
    let mut prev = (lo, g(lo)?);
    for i in 1..=n {
        let e = lo + (hi - lo) * i as f64 / n as f64;
        let v = g(e)?;
        if prev.1 <= 0.0 && v > 0.0 {
            bracket = Some((prev.0, e));
            break;
        }
        prev = (e, v);
    }
    let Some((a, b)) = bracket else {
        return Ok(hi);
    };
    let root = predicate_boundary(a, b, CROSSING_TOL, params.max_iter, |e| {
        g(e).map_or(false, |v| v <= 0.0)
    });
    Ok(root)
}

/// Tolerance at which the per-pair minimal approximation parameter derived
/// from the modulus value stays meaningful; see [`delta_attainment`].
fn approx_epsilon_from_delta(delta_value: f64, eps: f64) -> f64 {
    let one_minus = 1.0 - delta_value;
    (one_minus * one_minus - eps * eps / 4.0).abs()
}

/// Unit pairs realizing the modulus of convexity at `eps` to within `tol`.
///
/// Each returned pair satisfies `‖x − y‖ ≈ eps` and `1 − ‖x+y‖/2 ≈ δ(eps)`,
/// and its `approx_epsilon` field carries
/// `ε₀ = |(1 − δ(eps))² − (eps/2)²|`, the smallest tolerance at which such
/// an extremal pair is approximately isosceles-orthogonal.
pub fn delta_attainment(
    norm: &NormModel,
    eps: f64,
    tol: f64,
    params: &Params,
) -> Result<Vec<AttainmentPair>> {
    let eps = check_eps_range(eps)?;
    let f = |theta_x: f64| first_crossing_value(norm, theta_x, eps, params).0;

    let n = params.modulus_grid.max(4);
    let step = PI / n as f64;
    let grid: Vec<f64> = (0..n).map(|i| f(step * i as f64)).collect();
    let (_, global) = cyclic_sweep_min(0.0, PI, n, params.refine_iters, f);

    // Refine every cell that could hide a near-minimizer: those already
    // within the reporting band, plus every local minimum (a sharp dip can
    // sit between grid points with both neighbors above the band).
    let mut candidates: Vec<(f64, usize)> = (0..n)
        .filter(|&i| {
            let prev = grid[(i + n - 1) % n];
            let next = grid[(i + 1) % n];
            grid[i] <= global + tol || (grid[i] <= prev && grid[i] <= next)
        })
        .map(|i| (grid[i], i))
        .collect();
    candidates.sort_by(|a, b| a.0.total_cmp(&b.0));
    candidates.truncate(256);

    let mut located: Vec<(f64, f64)> = Vec::new();
    for &(_, i) in &candidates {
        let center = step * i as f64;
        let (t, v) = golden_min(center - step, center + step, params.refine_iters, f);
        if v <= global + tol {
            // Directions are listed modulo a half turn: θ and θ + π give the
            // same unordered pair up to negating both vectors.
            located.push((crate::vec2::wrap_half_turn(t), v));
        }
    }
    located.sort_by(|a, b| a.0.total_cmp(&b.0));
    located.dedup_by(|a, b| (a.0 - b.0).abs() < 1e-6);
    if located.len() > 1 && located[0].0 + PI - located[located.len() - 1].0 < 1e-6 {
        located.pop();
    }

    let eps0 = approx_epsilon_from_delta(global, eps);
    let pairs = located
        .into_iter()
        .map(|(theta, value)| {
            let x = norm.sphere_point(theta);
            let (_, y) = first_crossing_value(norm, theta, eps, params);
            AttainmentPair {
                x,
                y,
                value,
                defect: defect(norm, x, y),
                approx_epsilon: Some(eps0),
            }
        })
        .collect();
    Ok(pairs)
}
