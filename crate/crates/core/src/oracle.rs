//! Brute-force grid oracles.
//!
//! Each oracle evaluates its defining sup/inf literally over a direction
//! grid, then runs a dumb local refinement around the best grid cells.
//! They are deliberately independent of the bisection/sweep fast paths —
//! the only shared code is the norm evaluation itself — so agreement between
//! the two routes is meaningful evidence, not a tautology.
//!
//! Symmetry reductions used (and nothing else): the objectives are invariant
//! under `x ↦ -x` combined with `y ↦ -y`, the James/Schäffer objectives
//! additionally under `y ↦ -y` alone and under swapping `x` and `y`, so grids
//! cover half spheres and ordered pairs where the invariance allows. The
//! refined value is still a literal evaluation of the definition at sampled
//! pairs.
//!
//! Accuracy is calibrated for norms whose boundary is reasonably round
//! (max/min distance from the origin within a small factor); at the default
//! resolution the two routes agree to about `5e-3`, see the agreement tests.

use alloc::vec::Vec;

use crate::norm::NormModel;
use crate::vec2::{Vec2, TAU};

/// Resolution of a grid oracle.
#[derive(Debug, Clone, PartialEq)]
pub struct GridSpec {
    /// Number of direction samples on the full circle.
    pub directions: usize,
    /// Local refinement passes around the best grid cells (0 = raw grid).
    pub refine_rounds: usize,
}

impl Default for GridSpec {
    fn default() -> Self {
        GridSpec {
            directions: 4096,
            refine_rounds: 1,
        }
    }
}

impl GridSpec {
    pub fn new(directions: usize) -> Self {
        GridSpec {
            directions: directions.max(8),
            ..GridSpec::default()
        }
    }
}

/// Keeps the best few well-separated grid cells, so refinement can chase
/// every near-optimal basin instead of only the single best cell.
struct TopCells {
    /// (score, i, j); score is the objective negated when minimizing.
    cells: Vec<(f64, usize, usize)>,
    capacity: usize,
    separation: usize,
}

impl TopCells {
    fn new(capacity: usize, separation: usize) -> Self {
        TopCells {
            cells: Vec::with_capacity(capacity + 1),
            capacity,
            separation,
        }
    }

    fn offer(&mut self, score: f64, i: usize, j: usize) {
        for c in self.cells.iter_mut() {
            if c.1.abs_diff(i) <= self.separation && c.2.abs_diff(j) <= self.separation {
                if score > c.0 {
                    *c = (score, i, j);
                }
                return;
            }
        }
        self.cells.push((score, i, j));
        self.cells
            .sort_by(|a, b| b.0.partial_cmp(&a.0).unwrap_or(core::cmp::Ordering::Equal));
        self.cells.truncate(self.capacity);
    }
}

/// min{‖x+y‖, ‖x-y‖} — the quantity whose sup over unit pairs is the James
/// constant.
#[inline]
fn james_objective(norm: &NormModel, x: Vec2, y: Vec2) -> f64 {
    norm.gauge(x + y).min(norm.gauge(x - y))
}

/// max{‖x+y‖, ‖x-y‖} — the quantity whose inf over unit pairs is the
/// Schäffer constant.
#[inline]
fn schaffer_objective(norm: &NormModel, x: Vec2, y: Vec2) -> f64 {
    norm.gauge(x + y).max(norm.gauge(x - y))
}

fn refine_pair<F>(norm: &NormModel, f: &F, sign: f64, t0: f64, u0: f64, w0: f64, rounds: usize) -> f64
where
    F: Fn(&NormModel, Vec2, Vec2) -> f64,
{
    let (mut t, mut u, mut w) = (t0, u0, w0);
    let mut best = sign * f(norm, norm.sphere_point(t), norm.sphere_point(u));
    for _ in 0..rounds {
        let (mut bt, mut bu) = (t, u);
        for a in 0..9 {
            let ta = t + w * ((a as f64) - 4.0) / 4.0;
            let x = norm.sphere_point(ta);
            for b in 0..9 {
                let ub = u + w * ((b as f64) - 4.0) / 4.0;
                let v = sign * f(norm, x, norm.sphere_point(ub));
                if v > best {
                    best = v;
                    bt = ta;
                    bu = ub;
                }
            }
        }
        t = bt;
        u = bu;
        w /= 4.0;
    }
    sign * best
}

/// Grid estimate of the James constant: literal max of
/// min{‖x+y‖, ‖x-y‖} over sampled unit pairs, plus refinement.
pub fn james(norm: &NormModel, grid: &GridSpec) -> f64 {
    extremal_pair_scan(norm, grid, &james_objective, 1.0)
}

/// Grid estimate of the Schäffer constant: literal min of
/// max{‖x+y‖, ‖x-y‖} over sampled unit pairs, plus refinement.
pub fn schaffer(norm: &NormModel, grid: &GridSpec) -> f64 {
    extremal_pair_scan(norm, grid, &schaffer_objective, -1.0)
}

fn extremal_pair_scan<F>(norm: &NormModel, grid: &GridSpec, f: &F, sign: f64) -> f64
where
    F: Fn(&NormModel, Vec2, Vec2) -> f64,
{
    let half = (grid.directions / 2).max(4);
    let step = TAU / (grid.directions.max(8) as f64);
    let pts: Vec<Vec2> = (0..half).map(|j| norm.sphere_point(step * j as f64)).collect();

    let mut best = f64::NEG_INFINITY;
    let mut top = TopCells::new(8, 2);
    for i in 0..half {
        let x = pts[i];
        // Both objectives are symmetric under swapping x and y, so ordered
        // pairs suffice.
        for (j, &y) in pts.iter().enumerate().skip(i) {
            let v = sign * f(norm, x, y);
            if v > best {
                best = v;
            }
            top.offer(v, i, j);
        }
    }

    if grid.refine_rounds > 0 {
        let cells: Vec<(usize, usize)> = top.cells.iter().map(|c| (c.1, c.2)).collect();
        for (i, j) in cells {
            let obj = refine_pair(
                norm,
                f,
                sign,
                step * i as f64,
                step * j as f64,
                step,
                grid.refine_rounds,
            );
            if sign * obj > best {
                best = sign * obj;
            }
        }
    }
    sign * best
}

/// Grid solve of the partner problem: among directions strictly between x
/// and -x (counterclockwise), the sampled y on the radius-r sphere with the
/// smallest |‖x+y‖ - ‖x-y‖|, refined locally.
pub fn partner(norm: &NormModel, x: Vec2, r: f64, grid: &GridSpec) -> Vec2 {
    let theta_x = x.angle();
    let n = grid.directions.max(8);
    let pi = core::f64::consts::PI;
    let defect_at = |theta: f64| -> (f64, Vec2) {
        let y = norm.sphere_point(theta) * r;
        ((norm.gauge(x + y) - norm.gauge(x - y)).abs(), y)
    };

    let mut best = f64::INFINITY;
    let mut best_theta = theta_x + pi / 2.0;
    for j in 0..n {
        // Half-open offsets keep y strictly between x and -x.
        let theta = theta_x + pi * (j as f64 + 0.5) / (n as f64);
        let (d, _) = defect_at(theta);
        if d < best {
            best = d;
            best_theta = theta;
        }
    }

    let mut w = pi / (n as f64);
    for _ in 0..grid.refine_rounds {
        let mut bt = best_theta;
        for k in 0..17 {
            let t = best_theta + w * ((k as f64) - 8.0) / 8.0;
            if t <= theta_x || t >= theta_x + pi {
                continue;
            }
            let (d, _) = defect_at(t);
            if d < best {
                best = d;
                bt = t;
            }
        }
        best_theta = bt;
        w /= 8.0;
    }
    defect_at(best_theta).1
}

/// Literal grid inf of `1 - ‖x+y‖/2` over sampled unit pairs with
/// `‖x-y‖ ≥ eps`. Returns +∞ if no sampled pair is feasible.
pub fn delta(norm: &NormModel, eps: f64, grid: &GridSpec) -> f64 {
    constrained_scan(norm, grid, eps, true)
}

/// Literal grid sup of `1 - ‖x+y‖/2` over sampled unit pairs with
/// `‖x-y‖ ≤ eps`. Returns -∞ if no sampled pair is feasible.
pub fn rho(norm: &NormModel, eps: f64, grid: &GridSpec) -> f64 {
    constrained_scan(norm, grid, eps, false)
}

fn constrained_scan(norm: &NormModel, grid: &GridSpec, eps: f64, lower_bound: bool) -> f64 {
    // `lower_bound`: feasibility is ‖x-y‖ ≥ eps and we take the inf;
    // otherwise feasibility is ‖x-y‖ ≤ eps and we take the sup.
    let n = grid.directions.max(8);
    let half = n / 2;
    let step = TAU / (n as f64);
    let xs: Vec<Vec2> = (0..half).map(|j| norm.sphere_point(step * j as f64)).collect();
    let ys: Vec<Vec2> = (0..n).map(|j| norm.sphere_point(step * j as f64)).collect();

    let feasible = |d: f64| if lower_bound { d >= eps } else { d <= eps };
    let sign = if lower_bound { -1.0 } else { 1.0 };

    let mut best = f64::NEG_INFINITY;
    let mut top = TopCells::new(4, 2);
    for i in 0..half {
        let x = xs[i];
        for (j, &y) in ys.iter().enumerate() {
            if !feasible(norm.gauge(x - y)) {
                continue;
            }
            let v = sign * (1.0 - norm.gauge(x + y) / 2.0);
            if v > best {
                best = v;
            }
            top.offer(v, i, j);
        }
    }
    if best == f64::NEG_INFINITY {
        return sign * f64::NEG_INFINITY;
    }

    for round_cell in top.cells.clone() {
        let (mut t, mut u) = (step * round_cell.1 as f64, step * round_cell.2 as f64);
        let mut w = step;
        for _ in 0..grid.refine_rounds {
            let (mut bt, mut bu) = (t, u);
            for a in 0..9 {
                let ta = t + w * ((a as f64) - 4.0) / 4.0;
                let x = norm.sphere_point(ta);
                for b in 0..9 {
                    let ub = u + w * ((b as f64) - 4.0) / 4.0;
                    let y = norm.sphere_point(ub);
                    if !feasible(norm.gauge(x - y)) {
                        continue;
                    }
                    let v = sign * (1.0 - norm.gauge(x + y) / 2.0);
                    if v > best {
                        best = v;
                        bt = ta;
                        bu = ub;
                    }
                }
            }
            t = bt;
            u = bu;
            w /= 4.0;
        }
    }
    sign * best
}
