//! Solver and sweep configuration.
//!
//! Every tolerance and grid size used by the solvers lives here, with the
//! defaults the test suite is calibrated against. Tolerances are absolute and
//! assume inputs of order one (unit-sphere data); callers working at wildly
//! different scales should rescale first.

/// Tunable knobs for the bisection solvers and the sweep-based constants.
#[derive(Debug, Clone, PartialEq)]
pub struct Params {
    /// Bisection stops when the angular bracket is narrower than this (radians).
    pub angle_tol: f64,
    /// Absolute tolerance used when comparing norm values (defect ≈ 0 tests,
    /// plateau probes).
    pub value_tol: f64,
    /// A zero-defect plateau is only reported when it is wider than this
    /// (radians); narrower brackets are indistinguishable from a simple root.
    pub plateau_min_width: f64,
    /// Directions sampled over a half sphere by the β/James sweeps on
    /// non-polyhedral norms.
    pub sweep_grid: usize,
    /// Samples per edge for the Schäffer minimization on polygons.
    pub edge_samples: usize,
    /// Directions sampled over a half sphere by the δ/ρ modulus sweeps.
    pub modulus_grid: usize,
    /// Per-axis directions for the two-parameter ρ′ sweep.
    pub pair_grid: usize,
    /// Golden-section steps used when refining around the best grid cells.
    pub refine_iters: usize,
    /// Initial ε-grid resolution for the James/Schäffer bracketing solvers
    /// built on the moduli.
    pub bracket_grid: usize,
    /// Hard cap on bisection iterations (reached only on broken input).
    pub max_iter: usize,
}

impl Default for Params {
    fn default() -> Self {
        Params {
            angle_tol: 1e-12,
            value_tol: 1e-10,
            plateau_min_width: 1e-8,
            sweep_grid: 4096,
            edge_samples: 64,
            modulus_grid: 512,
            pair_grid: 256,
            refine_iters: 80,
            bracket_grid: 32,
            max_iter: 200,
        }
    }
}

impl Params {
    /// Defaults with a coarser sweep, for callers that trade accuracy for
    /// speed (curve plotting, large batch runs).
    pub fn coarse() -> Self {
        Params {
            sweep_grid: 512,
            modulus_grid: 128,
            pair_grid: 96,
            ..Params::default()
        }
    }
}
