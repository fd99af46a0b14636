//! Isosceles orthogonality: `x` is isosceles-orthogonal to `y` when
//! `‖x + y‖ = ‖x − y‖`, i.e. the two diagonals of the parallelogram spanned
//! by `x` and `y` have equal length.
//!
//! This module provides the orthogonality defect, the approximate relation
//! `|‖x+y‖² − ‖x−y‖²| ≤ 4ε‖x‖‖y‖`, a solver for the orthogonal partner of a
//! vector at a prescribed radius, and the connected arc of unit vectors that
//! are approximately orthogonal to a given vector.
//!
//! The partner solver rests on a monotonicity fact: walking the sphere of
//! radius `r` counterclockwise from the direction of `x` to the direction of
//! `−x`, the distance `‖x − y(θ)‖` never decreases and `‖x + y(θ)‖` never
//! increases, so the defect `‖x+y‖ − ‖x−y‖` starts at `2·min(‖x‖, r) > 0`,
//! ends negative, and crosses zero on every such half-turn. For `r ≤ ‖x‖`
//! the crossing is unique; for `r > ‖x‖` on a polygonal norm the defect can
//! vanish on a whole sub-arc, which the solver detects and reports.

use crate::config::Params;
use crate::error::{Error, Result};
use crate::norm::NormModel;
use crate::solve::predicate_boundary;
use crate::vec2::{wrap_angle, Vec2, TAU};
use core::f64::consts::PI;

/// Magnitude below which a defect sample is treated as "exactly zero" when
/// probing for a flat stretch of the defect function. This sits well above
/// rounding noise of gauge evaluations at unit scale (a few 1e-16) and well
/// below any genuine defect slope times the probe distance.
const PLATEAU_BAND: f64 = 1e-13;

/// Orthogonality defect `‖x + y‖ − ‖x − y‖`. Zero exactly when `x` and `y`
/// are isosceles-orthogonal; positive when the long diagonal is `x + y`.
pub fn defect(norm: &NormModel, x: Vec2, y: Vec2) -> f64 {
    norm.gauge(x + y) - norm.gauge(x - y)
}

/// Approximate isosceles orthogonality with tolerance `eps ∈ [0, 1)`:
/// `|‖x+y‖² − ‖x−y‖²| ≤ 4·eps·‖x‖·‖y‖`.
///
/// At `eps = 0` (and nonzero arguments) this is exact isosceles
/// orthogonality. Errors with [`Error::InvalidEpsilon`] outside `[0, 1)`.
pub fn is_approx_orthogonal(norm: &NormModel, x: Vec2, y: Vec2, eps: f64) -> Result<bool> {
    if !(0.0..1.0).contains(&eps) {
        return Err(Error::InvalidEpsilon(eps));
    }
    let sum = norm.gauge(x + y);
    let diff = norm.gauge(x - y);
    Ok((sum * sum - diff * diff).abs() <= 4.0 * eps * norm.gauge(x) * norm.gauge(y))
}

/// Smallest tolerance for which the (normalized) pair satisfies the
/// approximate relation: `|‖x+y‖² − ‖x−y‖²| / 4` for unit `x`, `y`.
///
/// Always lies in `[0, 1)` for a linearly independent pair. Errors with
/// [`Error::DegeneratePair`] when the inputs are parallel, where the
/// infimum degenerates to 1 and no admissible tolerance exists.
pub fn min_feasible_epsilon(norm: &NormModel, x: Vec2, y: Vec2) -> Result<f64> {
    let x = norm.normalize(x)?;
    let y = norm.normalize(y)?;
    if x.cross(y) == 0.0 {
        return Err(Error::DegeneratePair);
    }
    let sum = norm.gauge(x + y);
    let diff = norm.gauge(x - y);
    let eps = (sum * sum - diff * diff).abs() / 4.0;
    if eps >= 1.0 {
        // Numerically parallel pair that slipped past the cross-product test.
        return Err(Error::DegeneratePair);
    }
    Ok(eps)
}

/// Result of [`partner`]: the isosceles-orthogonal partner of `x` on the
/// sphere of radius `radius`, counterclockwise from `x`.
#[derive(Clone, Copy, Debug)]
pub struct PartnerResult {
    /// A point `y` with `‖y‖ = radius` and `defect(x, y) ≈ 0`, chosen with
    /// `cross(x, y) > 0`. When a flat stretch exists this is its midpoint.
    pub primary: Vec2,
    /// Angular interval `(lo, hi)` on which the defect vanishes, when the
    /// solver detected a genuine flat stretch (possible only for polygonal
    /// norms with `radius > ‖x‖`). `None` when the zero is isolated.
    pub plateau: Option<(f64, f64)>,
    /// The radius the partner was solved at.
    pub radius: f64,
}

/// Find `y` with `‖y‖ = r` and `x ⊥ y` in the isosceles sense, on the
/// counterclockwise side of `x` (`cross(x, y) > 0`).
///
/// Works for any nonzero `x` (not just unit vectors) and any `r > 0`. The
/// zero of the defect is bracketed on the half-turn starting at the
/// direction of `x` and located by bisection to `params.angle_tol`.
pub fn partner(norm: &NormModel, x: Vec2, r: f64, params: &Params) -> Result<PartnerResult> {
    if x.is_zero() || !x.is_finite() {
        return Err(Error::ZeroVector);
    }
    if !(r > 0.0) || !r.is_finite() {
        return Err(Error::NonPositiveRadius(r));
    }

    let theta_x = x.angle();
    let f = |theta: f64| defect(norm, x, r * norm.sphere_point(theta));

    let (lo, hi) = (theta_x, theta_x + PI);
    let (flo, fhi) = (f(lo), f(hi));
    if !(flo > 0.0 && fhi < 0.0) {
        return Err(Error::NoBracket { lo: flo, hi: fhi });
    }

    // The defect is nonincreasing on [lo, hi], so "f > 0" flips exactly once
    // (up to a possible flat stretch at zero, handled below).
    let root = predicate_boundary(lo, hi, params.angle_tol, params.max_iter, |t| f(t) > 0.0);

    let mut plateau = None;
    let gx = norm.gauge(x);
    if norm.is_polyhedral() && r > gx * (1.0 + 1e-12) {
        // Probe one minimum-plateau-width to each side; on an isolated zero
        // the defect has regained a magnitude far above the flat-band there.
        let w = params.plateau_min_width;
        if f(root - w).abs() <= PLATEAU_BAND || f(root + w).abs() <= PLATEAU_BAND {
            let a = predicate_boundary(lo, hi, params.angle_tol, params.max_iter, |t| {
                f(t) > PLATEAU_BAND
            });
            let b = predicate_boundary(lo, hi, params.angle_tol, params.max_iter, |t| {
                f(t) >= -PLATEAU_BAND
            });
            if b - a > params.plateau_min_width {
                plateau = Some((a, b));
            }
        }
    }

    let theta = match plateau {
        Some((a, b)) => 0.5 * (a + b),
        None => root,
    };
    Ok(PartnerResult {
        primary: r * norm.sphere_point(theta),
        plateau,
        radius: r,
    })
}

/// The connected arc of unit vectors approximately orthogonal to `x` at
/// tolerance `eps`, together with its mirror image through the origin.
///
/// The set of unit `y` with `x ⊥ y` approximately at tolerance `eps` is the
/// union `D ∪ −D` of an arc `D` containing the exact partner of `x` and its
/// antipode. [`OrthogonalityArc::contains`] tests membership in the union.
#[derive(Clone, Copy, Debug)]
pub struct OrthogonalityArc {
    /// The exact unit partner of `x` (counterclockwise side); always inside.
    pub anchor: Vec2,
    /// Arc endpoint reached moving from the anchor toward `x`.
    pub endpoint_toward_x: Vec2,
    /// Arc endpoint reached moving from the anchor toward `−x`.
    pub endpoint_toward_neg_x: Vec2,
    /// The tolerance the arc was computed for.
    pub epsilon: f64,
    angle_toward_x: f64,
    angle_toward_neg_x: f64,
}

impl OrthogonalityArc {
    /// Counterclockwise angular width of one of the two symmetric arcs.
    /// Always strictly below a half turn for `epsilon < 1`.
    pub fn span(&self) -> f64 {
        wrap_angle(self.angle_toward_neg_x - self.angle_toward_x)
    }

    /// Whether the direction of `z` lies on the arc or on its mirror image.
    /// Returns `false` for the zero vector.
    pub fn contains(&self, z: Vec2) -> bool {
        if z.is_zero() || !z.is_finite() {
            return false;
        }
        let a = z.angle();
        self.one_side_contains(a) || self.one_side_contains(wrap_angle(a + PI))
    }

    fn one_side_contains(&self, angle: f64) -> bool {
        let offset = wrap_angle(angle - self.angle_toward_x);
        offset <= self.span()
    }
}

/// Compute the approximate-orthogonality arc for `x` at tolerance
/// `eps ∈ [0, 1)`.
///
/// Both endpoints are found by bisecting the squared-norm gap
/// `s(u) = |‖x̂+u‖² − ‖x̂−u‖²|` along the sphere between the exact partner
/// (`s ≈ 0`) and `±x̂` (`s = 4`): the chord from `x̂` to the partner is
/// traced through unit vectors `u_t = ((1−t)·x̂ + t·ŷ)/‖·‖`, on which `s`
/// decreases monotonically from 4 to 0, and symmetrically on the `−x̂` side.
pub fn arc(norm: &NormModel, x: Vec2, eps: f64, params: &Params) -> Result<OrthogonalityArc> {
    if !(0.0..1.0).contains(&eps) {
        return Err(Error::InvalidEpsilon(eps));
    }
    let xh = norm.normalize(x)?;
    let yh = partner(norm, xh, 1.0, params)?.primary;

    let gap = |u: Vec2| {
        let sum = norm.gauge(xh + u);
        let diff = norm.gauge(xh - u);
        (sum * sum - diff * diff).abs()
    };
    // Small slack keeps the exact partner itself inside the arc at eps = 0,
    // where rounding would otherwise make the boundary empty.
    let threshold = 4.0 * eps + params.value_tol;

    let endpoint = |from: Vec2| -> Vec2 {
        let chord = |t: f64| norm.normalize((1.0 - t) * from + t * yh).unwrap_or(yh);
        let t = predicate_boundary(0.0, 1.0, params.angle_tol, params.max_iter, |t| {
            gap(chord(t)) > threshold
        });
        chord(t)
    };

    let toward_x = endpoint(xh);
    let toward_neg_x = endpoint(-xh);
    Ok(OrthogonalityArc {
        anchor: yh,
        endpoint_toward_x: toward_x,
        endpoint_toward_neg_x: toward_neg_x,
        epsilon: eps,
        angle_toward_x: toward_x.angle(),
        angle_toward_neg_x: toward_neg_x.angle(),
    })
}

/// Angular distance between two directions on the circle, in `[0, π]`.
pub fn angular_distance(a: f64, b: f64) -> f64 {
    let d = wrap_angle(a - b);
    if d > PI {
        TAU - d
    } else {
        d
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::norm::NormModel;

    const TOL: f64 = 1e-9;

    fn p() -> Params {
        Params::default()
    }

    #[test]
    fn defect_is_antisymmetric_in_second_argument() {
        let norm = NormModel::hexagon();
        let x = Vec2::new(0.3, -1.1);
        let y = Vec2::new(0.9, 0.4);
        assert!((defect(&norm, x, y) + defect(&norm, x, -y)).abs() < 1e-15);
    }

    #[test]
    fn hexagon_partners_match_closed_form() {
        let norm = NormModel::hexagon();
        let cases = [
            (Vec2::new(1.0, -1.0), Vec2::new(9.0 / 13.0, 21.0 / 13.0)),
            (Vec2::new(1.0, 1.0), Vec2::new(-5.0 / 17.0, 25.0 / 17.0)),
            (Vec2::new(0.5, 2.0), Vec2::new(-1.0, 2.0 / 7.0)),
        ];
        for (x, want) in cases {
            let got = partner(&norm, x, 1.0, &p()).unwrap();
            assert!(
                (got.primary - want).hypot() < TOL,
                "partner of {x:?}: got {:?}, want {want:?}",
                got.primary
            );
            assert!(got.plateau.is_none());
            assert!(x.cross(got.primary) > 0.0);
        }
    }

    #[test]
    fn euclidean_partner_is_counterclockwise_perpendicular() {
        let norm = NormModel::euclidean();
        let x = Vec2::new(0.6, -0.8);
        let got = partner(&norm, x, 1.0, &p()).unwrap();
        assert!((got.primary - Vec2::new(0.8, 0.6)).hypot() < TOL);
    }

    #[test]
    fn square_norm_long_radius_has_plateau() {
        let norm = NormModel::square();
        let x = Vec2::new(1.0, 0.0);
        let got = partner(&norm, x, 2.0, &p()).unwrap();
        // Every y = (t, 2) with |t| <= 1 works; the midpoint is (0, 2).
        assert!((got.primary - Vec2::new(0.0, 2.0)).hypot() < 1e-6);
        let (a, b) = got.plateau.expect("flat stretch should be reported");
        assert!((a - (2.0f64).atan2(1.0)).abs() < 1e-6);
        assert!((b - (2.0f64).atan2(-1.0)).abs() < 1e-6);
        assert!(defect(&norm, x, got.primary).abs() < TOL);
    }

    #[test]
    fn short_radius_partner_has_no_plateau() {
        let norm = NormModel::square();
        let x = Vec2::new(1.0, 0.0);
        for r in [0.25, 0.5, 1.0] {
            let got = partner(&norm, x, r, &p()).unwrap();
            assert!(got.plateau.is_none(), "r = {r}");
            assert!(defect(&norm, x, got.primary).abs() < TOL);
        }
    }

    #[test]
    fn partner_rejects_bad_inputs() {
        let norm = NormModel::euclidean();
        assert!(matches!(
            partner(&norm, Vec2::new(0.0, 0.0), 1.0, &p()),
            Err(Error::ZeroVector)
        ));
        assert!(matches!(
            partner(&norm, Vec2::new(1.0, 0.0), 0.0, &p()),
            Err(Error::NonPositiveRadius(_))
        ));
        assert!(matches!(
            partner(&norm, Vec2::new(1.0, 0.0), -2.0, &p()),
            Err(Error::NonPositiveRadius(_))
        ));
    }

    #[test]
    fn hexagon_min_feasible_epsilon_matches_closed_form() {
        // ‖x+y‖ = ‖(2,0)‖ = 2 and ‖x−y‖ = ‖(0,−2)‖ = 6/5 (the ray meets the
        // edge from (−1/2,−2) to (1,−1) at (0,−5/3)), so
        // ε* = |4 − 36/25| / 4 = 16/25.
        let norm = NormModel::hexagon();
        let eps = min_feasible_epsilon(&norm, Vec2::new(1.0, -1.0), Vec2::new(1.0, 1.0)).unwrap();
        assert!((eps - 16.0 / 25.0).abs() < 1e-12, "got {eps}");
    }

    #[test]
    fn min_feasible_epsilon_rejects_parallel_pairs() {
        let norm = NormModel::euclidean();
        let x = Vec2::new(0.3, 0.4);
        assert!(matches!(
            min_feasible_epsilon(&norm, x, 2.0 * x),
            Err(Error::DegeneratePair)
        ));
        assert!(matches!(
            min_feasible_epsilon(&norm, x, -0.5 * x),
            Err(Error::DegeneratePair)
        ));
    }

    #[test]
    fn approx_orthogonality_is_monotone_in_epsilon() {
        let norm = NormModel::hexagon();
        let x = Vec2::new(1.0, -1.0);
        let y = Vec2::new(0.9, 1.2);
        let mut prev = false;
        for i in 0..20 {
            let eps = i as f64 / 20.0;
            let now = is_approx_orthogonal(&norm, x, y, eps).unwrap();
            assert!(!prev || now, "relation lost while growing eps to {eps}");
            prev = now;
        }
    }

    #[test]
    fn approx_orthogonality_rejects_out_of_range_epsilon() {
        let norm = NormModel::euclidean();
        let x = Vec2::new(1.0, 0.0);
        let y = Vec2::new(0.0, 1.0);
        for eps in [-0.1, 1.0, 1.5, f64::NAN] {
            assert!(matches!(
                is_approx_orthogonal(&norm, x, y, eps),
                Err(Error::InvalidEpsilon(_))
            ));
        }
    }

    #[test]
    fn euclidean_arc_endpoints_match_closed_form() {
        // For the Euclidean norm and x = (1, 0), the arc around (0, 1) spans
        // the angles [π/2 − arcsin(eps), π/2 + arcsin(eps)].
        let norm = NormModel::euclidean();
        let x = Vec2::new(1.0, 0.0);
        let eps = 0.5f64;
        let a = arc(&norm, x, eps, &p()).unwrap();
        let half_width = eps.asin();
        assert!(angular_distance(a.endpoint_toward_x.angle(), PI / 2.0 - half_width) < 1e-5);
        assert!(angular_distance(a.endpoint_toward_neg_x.angle(), PI / 2.0 + half_width) < 1e-5);
        assert!((a.span() - PI / 3.0).abs() < 1e-5);
    }

    #[test]
    fn arc_contains_anchor_its_mirror_and_not_x() {
        for norm in [
            NormModel::euclidean(),
            NormModel::square(),
            NormModel::hexagon(),
            NormModel::lp(3.0).unwrap(),
        ] {
            let x = Vec2::new(1.0, -0.3);
            for eps in [0.0, 0.2, 0.8] {
                let a = arc(&norm, x, eps, &p()).unwrap();
                assert!(a.contains(a.anchor), "anchor outside, eps {eps}");
                assert!(a.contains(-a.anchor), "mirror outside, eps {eps}");
                assert!(!a.contains(x), "x inside its own arc, eps {eps}");
                assert!(a.span() < PI);
            }
        }
    }

    #[test]
    fn arc_rejects_out_of_range_epsilon() {
        let norm = NormModel::euclidean();
        for eps in [-0.2, 1.0, 2.0] {
            assert!(matches!(
                arc(&norm, Vec2::new(1.0, 0.0), eps, &p()),
                Err(Error::InvalidEpsilon(_))
            ));
        }
    }
}
