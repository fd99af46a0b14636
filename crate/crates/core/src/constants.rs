//! Best-approximation functionals and the two extremal constants they
//! induce on the unit sphere.
//!
//! For a unit vector `x`, pairing it with its unit isosceles-orthogonal
//! partner `y` makes the two diagonal lengths `‖x + y‖` and `‖x − y‖`
//! equal; that common value realizes `sup_y min{‖x+y‖, ‖x−y‖}` (written
//! `beta(x)`) and `inf_y max{‖x+y‖, ‖x−y‖}` (`alpha(x)`), and the two
//! functionals agree. Maximizing `beta` over the sphere gives the James
//! constant of the norm, in `[√2, 2]`; minimizing it gives the Schäffer
//! constant, in `[1, √2]`, and the two are linked by duality in the plane.
//!
//! For polygonal norms `beta` is maximized at a vertex of the unit sphere,
//! so the James constant reduces to a finite scan over vertices, while the
//! minimum is searched along each edge. Smooth norms use a dense angular
//! sweep with local refinement.

use crate::config::Params;
use crate::error::{Error, Result};
use crate::iso::{defect, partner};
use crate::norm::NormModel;
use crate::solve::{cyclic_sweep_max, cyclic_sweep_min, segment_sweep_min};
use crate::vec2::Vec2;
use alloc::vec::Vec;
use core::f64::consts::PI;

/// `beta(x) = sup { min(‖x+y‖, ‖x−y‖) : ‖y‖ = 1 }` for unit `x`; attained
/// at the isosceles-orthogonal partner of `x`, where the two diagonals are
/// equal. The input is normalized first.
pub fn beta(norm: &NormModel, x: Vec2, params: &Params) -> Result<f64> {
    let x = norm.normalize(x)?;
    let y = partner(norm, x, 1.0, params)?.primary;
    Ok(norm.gauge(x + y).min(norm.gauge(x - y)))
}

/// `alpha(x) = inf { max(‖x+y‖, ‖x−y‖) : ‖y‖ = 1 }` for unit `x`; attained
/// at the same partner as [`beta`], and equal to it.
pub fn alpha(norm: &NormModel, x: Vec2, params: &Params) -> Result<f64> {
    let x = norm.normalize(x)?;
    let y = partner(norm, x, 1.0, params)?.primary;
    Ok(norm.gauge(x + y).max(norm.gauge(x - y)))
}

/// Convex-weight variant of [`beta`]:
/// `beta(λ, x) = sup { min(‖λx + (1−λ)y‖, ‖λx − (1−λ)y‖) : ‖y‖ = 1 }`
/// for `λ ∈ (0, 1)`. Scaling shows the supremum is reached at the partner
/// of `x` at radius `(1−λ)/λ`, so `beta(1/2, x) = beta(x)/2`.
pub fn beta_lambda(norm: &NormModel, x: Vec2, lambda: f64, params: &Params) -> Result<f64> {
    if !(lambda > 0.0 && lambda < 1.0) {
        return Err(Error::InvalidLambda(lambda));
    }
    let x = norm.normalize(x)?;
    let r = (1.0 - lambda) / lambda;
    let y = partner(norm, x, r, params)?.primary;
    let a = lambda * norm.gauge(x + y);
    let b = lambda * norm.gauge(x - y);
    Ok(a.min(b))
}

/// James constant `J = sup { beta(x) : ‖x‖ = 1 }`, in `[√2, 2]`.
///
/// `J = 2` characterizes spheres with a segment parallel to a diameter at
/// distance matching it (e.g. the supremum norm); `J = √2` holds for the
/// Euclidean norm but not only for it.
pub fn james(norm: &NormModel, params: &Params) -> Result<f64> {
    match norm {
        NormModel::Polygon(poly) => {
            let mut best = f64::NEG_INFINITY;
            for &v in poly.half_vertices() {
                best = best.max(beta(norm, v, params)?);
            }
            Ok(best)
        }
        NormModel::Lp(_) => {
            let f = |theta: f64| beta(norm, norm.sphere_point(theta), params).unwrap_or(f64::NAN);
            let (_, v) = cyclic_sweep_max(0.0, PI, params.sweep_grid, params.refine_iters, f);
            Ok(v)
        }
    }
}

/// Schäffer constant `S = inf { beta(x) : ‖x‖ = 1 }`, in `[1, √2]`.
pub fn schaffer(norm: &NormModel, params: &Params) -> Result<f64> {
    match norm {
        NormModel::Polygon(poly) => {
            // The minimizer need not be a vertex: search along every edge of
            // the unit sphere (each point of an edge is already unit).
            let vs = poly.vertices();
            let m = vs.len();
            let mut best = f64::INFINITY;
            for k in 0..m / 2 {
                let (a, b) = (vs[k], vs[(k + 1) % m]);
                let f = |t: f64| {
                    let x = (1.0 - t) * a + t * b;
                    beta(norm, x, params).unwrap_or(f64::NAN)
                };
                let (_, v) =
                    segment_sweep_min(0.0, 1.0, params.edge_samples, params.refine_iters, f);
                best = best.min(v);
            }
            Ok(best)
        }
        NormModel::Lp(_) => {
            let f = |theta: f64| beta(norm, norm.sphere_point(theta), params).unwrap_or(f64::NAN);
            let (_, v) = cyclic_sweep_min(0.0, PI, params.sweep_grid, params.refine_iters, f);
            Ok(v)
        }
    }
}

/// Generalized James constant `J(λ) = sup { beta(λ, x) : ‖x‖ = 1 }`.
///
/// Unlike [`james`], the vertex reduction is not available for general `λ`
/// (the radius-`(1−λ)/λ` partner construction need not peak at a vertex),
/// so every norm is handled by a dense sweep.
pub fn james_generalized(norm: &NormModel, lambda: f64, params: &Params) -> Result<f64> {
    if !(lambda > 0.0 && lambda < 1.0) {
        return Err(Error::InvalidLambda(lambda));
    }
    let f = |theta: f64| {
        beta_lambda(norm, norm.sphere_point(theta), lambda, params).unwrap_or(f64::NAN)
    };
    let (_, v) = cyclic_sweep_max(0.0, PI, params.sweep_grid, params.refine_iters, f);
    Ok(v)
}

/// A unit pair witnessing an extremal or near-extremal value of a
/// sphere functional, with diagnostics.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AttainmentPair {
    /// Unit vector the functional was evaluated at.
    pub x: Vec2,
    /// Its isosceles-orthogonal unit partner (counterclockwise side).
    pub y: Vec2,
    /// The functional value at `x`.
    pub value: f64,
    /// Residual orthogonality defect `‖x+y‖ − ‖x−y‖` (should be ≈ 0).
    pub defect: f64,
    /// For distance-constrained witnesses: the smallest tolerance at which
    /// the pair is approximately orthogonal. `None` where not applicable.
    pub approx_epsilon: Option<f64>,
}

/// All unit pairs realizing the James constant to within `tol`.
///
/// For polygonal norms these are the sphere vertices whose `beta` value is
/// within `tol` of the maximum. For smooth norms the sweep grid is
/// filtered the same way; if no grid point qualifies (an isolated sharp
/// maximum between grid points), the refined maximizer alone is returned.
pub fn james_attainment(norm: &NormModel, tol: f64, params: &Params) -> Result<Vec<AttainmentPair>> {
    let make = |x: Vec2, value: f64| -> Result<AttainmentPair> {
        let y = partner(norm, x, 1.0, params)?.primary;
        Ok(AttainmentPair {
            x,
            y,
            value,
            defect: defect(norm, x, y),
            approx_epsilon: None,
        })
    };

    match norm {
        NormModel::Polygon(poly) => {
            let values: Vec<(Vec2, f64)> = poly
                .half_vertices()
                .iter()
                .map(|&v| Ok((v, beta(norm, v, params)?)))
                .collect::<Result<_>>()?;
            let j = values.iter().fold(f64::NEG_INFINITY, |m, &(_, v)| m.max(v));
            values
                .into_iter()
                .filter(|&(_, v)| v >= j - tol)
                .map(|(x, v)| make(x, v))
                .collect()
        }
        NormModel::Lp(_) => {
            let f = |theta: f64| beta(norm, norm.sphere_point(theta), params).unwrap_or(f64::NAN);
            let n = params.sweep_grid;
            let samples: Vec<(f64, f64)> = (0..n)
                .map(|i| {
                    let theta = PI * i as f64 / n as f64;
                    (theta, f(theta))
                })
                .collect();
            let (best_theta, j) = cyclic_sweep_max(0.0, PI, n, params.refine_iters, f);
            let mut out = Vec::new();
            for &(theta, v) in &samples {
                if v >= j - tol {
                    out.push(make(norm.sphere_point(theta), v)?);
                }
            }
            if out.is_empty() {
                out.push(make(norm.sphere_point(best_theta), j)?);
            }
            Ok(out)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::iso::min_feasible_epsilon;
    use crate::norm::NormModel;

    const TOL: f64 = 1e-9;
    const SWEEP_TOL: f64 = 1e-6;
    const SQRT2: f64 = core::f64::consts::SQRT_2;

    fn p() -> Params {
        Params::default()
    }

    #[test]
    fn hexagon_vertex_betas_match_closed_form() {
        let norm = NormModel::hexagon();
        let cases = [
            (Vec2::new(1.0, -1.0), 22.0 / 13.0),
            (Vec2::new(1.0, 1.0), 22.0 / 17.0),
            (Vec2::new(0.5, 2.0), 11.0 / 7.0),
        ];
        for (x, want) in cases {
            let got = beta(&norm, x, &p()).unwrap();
            assert!((got - want).abs() < TOL, "beta({x:?}) = {got}, want {want}");
        }
    }

    #[test]
    fn alpha_equals_beta_at_the_partner() {
        for norm in [
            NormModel::hexagon(),
            NormModel::octagon(),
            NormModel::euclidean(),
            NormModel::lp(1.5).unwrap(),
        ] {
            for k in 0..8 {
                let x = norm.sphere_point(0.37 + 0.71 * k as f64);
                let a = alpha(&norm, x, &p()).unwrap();
                let b = beta(&norm, x, &p()).unwrap();
                assert!((a - b).abs() < 1e-8, "alpha {a} vs beta {b}");
            }
        }
    }

    #[test]
    fn hexagon_james_is_attained_at_first_vertex() {
        let norm = NormModel::hexagon();
        let j = james(&norm, &p()).unwrap();
        assert!((j - 22.0 / 13.0).abs() < TOL, "got {j}");
    }

    #[test]
    fn square_constants_match_closed_form() {
        let norm = NormModel::square();
        assert!((james(&norm, &p()).unwrap() - 2.0).abs() < TOL);
        assert!((schaffer(&norm, &p()).unwrap() - 1.0).abs() < TOL);
        assert!((beta(&norm, Vec2::new(1.0, 0.0), &p()).unwrap() - 1.0).abs() < TOL);
        assert!((beta(&norm, Vec2::new(1.0, 1.0), &p()).unwrap() - 2.0).abs() < TOL);
    }

    #[test]
    fn euclidean_constants_are_sqrt_two() {
        let norm = NormModel::euclidean();
        assert!((james(&norm, &p()).unwrap() - SQRT2).abs() < SWEEP_TOL);
        assert!((schaffer(&norm, &p()).unwrap() - SQRT2).abs() < SWEEP_TOL);
    }

    #[test]
    fn octagon_james_is_sqrt_two_without_being_euclidean() {
        let norm = NormModel::octagon();
        let j = james(&norm, &p()).unwrap();
        assert!((j - SQRT2).abs() < TOL, "got {j}");
    }

    #[test]
    fn beta_lambda_at_one_half_is_half_beta() {
        for norm in [
            NormModel::hexagon(),
            NormModel::square(),
            NormModel::lp(3.0).unwrap(),
        ] {
            for k in 0..6 {
                let x = norm.sphere_point(0.2 + 0.9 * k as f64);
                let half = beta_lambda(&norm, x, 0.5, &p()).unwrap();
                let full = beta(&norm, x, &p()).unwrap();
                assert!((half - 0.5 * full).abs() < 1e-10);
            }
        }
    }

    #[test]
    fn euclidean_beta_lambda_matches_closed_form() {
        // For the Euclidean norm beta(λ, x) = √(λ² + (1−λ)²) independent of x.
        let norm = NormModel::euclidean();
        let x = Vec2::new(0.6, 0.8);
        for lambda in [0.2f64, 0.35, 0.5, 0.7, 0.9] {
            let want = (lambda * lambda + (1.0 - lambda) * (1.0 - lambda)).sqrt();
            let got = beta_lambda(&norm, x, lambda, &p()).unwrap();
            assert!((got - want).abs() < 1e-9, "lambda {lambda}: {got} vs {want}");
        }
    }

    #[test]
    fn james_generalized_agrees_with_james_at_one_half() {
        for norm in [NormModel::hexagon(), NormModel::euclidean()] {
            let j = james(&norm, &p()).unwrap();
            let j_half = james_generalized(&norm, 0.5, &p()).unwrap();
            assert!((j_half - 0.5 * j).abs() < SWEEP_TOL, "{j_half} vs {j}/2");
        }
    }

    #[test]
    fn lambda_validation() {
        let norm = NormModel::euclidean();
        let x = Vec2::new(1.0, 0.0);
        for lambda in [0.0, 1.0, -0.3, 1.7, f64::NAN] {
            assert!(matches!(
                beta_lambda(&norm, x, lambda, &p()),
                Err(Error::InvalidLambda(_))
            ));
            assert!(matches!(
                james_generalized(&norm, lambda, &p()),
                Err(Error::InvalidLambda(_))
            ));
        }
    }

    #[test]
    fn hexagon_attainment_is_the_extreme_vertex_pair() {
        let norm = NormModel::hexagon();
        let pairs = james_attainment(&norm, 1e-6, &p()).unwrap();
        assert_eq!(pairs.len(), 1);
        let pair = &pairs[0];
        assert!((pair.x - Vec2::new(1.0, -1.0)).hypot() < 1e-12);
        assert!((pair.y - Vec2::new(9.0 / 13.0, 21.0 / 13.0)).hypot() < TOL);
        assert!((pair.value - 22.0 / 13.0).abs() < TOL);
        assert!(pair.defect.abs() < TOL);
    }

    #[test]
    fn square_attainment_lists_both_diagonal_vertices() {
        let norm = NormModel::square();
        let pairs = james_attainment(&norm, 1e-6, &p()).unwrap();
        assert_eq!(pairs.len(), 2);
        for pair in &pairs {
            assert!((pair.value - 2.0).abs() < TOL);
            assert!(pair.defect.abs() < TOL);
        }
    }

    #[test]
    fn euclidean_attainment_covers_the_whole_sphere_grid() {
        let mut params = p();
        params.sweep_grid = 256;
        let norm = NormModel::euclidean();
        let pairs = james_attainment(&norm, 1e-6, &params).unwrap();
        assert_eq!(pairs.len(), 256, "every grid point attains √2");
        for pair in pairs.iter().step_by(37) {
            assert!((pair.value - SQRT2).abs() < 1e-7);
            assert!(pair.defect.abs() < 1e-8);
        }
    }

    #[test]
    fn min_feasible_epsilon_of_adjacent_hexagon_vertices() {
        // ‖x+y‖ = 2 and ‖x−y‖ = 6/5 for this vertex pair, giving the exact
        // minimal tolerance |4 − 36/25| / 4 = 16/25.
        let norm = NormModel::hexagon();
        let eps = min_feasible_epsilon(&norm, Vec2::new(1.0, -1.0), Vec2::new(1.0, 1.0)).unwrap();
        assert!((eps - 16.0 / 25.0).abs() < 1e-12);
    }
}
