//! Helpers shared by the integration test targets.

use normplane_core::exact::{self, rational, RationalPolygon, RationalVec2};
use normplane_core::norm::NormModel;

/// Ratio of the farthest vertex to the nearest edge of the unit ball; a
/// roundness measure. The grid oracles and float tolerances are calibrated
/// for moderately round balls, so random generators reject ratios above 6.
pub fn eccentricity(norm: &NormModel) -> f64 {
    let vs = norm.extreme_points().expect("polygonal norm");
    let n = vs.len();
    let mut rmax = 0.0f64;
    let mut dmin = f64::INFINITY;
    for k in 0..n {
        let a = vs[k];
        let b = vs[(k + 1) % n];
        rmax = rmax.max(a.hypot());
        dmin = dmin.min(a.cross(b).abs() / (b - a).hypot());
    }
    rmax / dmin
}

/// Symmetric convex polygon from raw `(xn, xd, yn, yd)` coordinate
/// quadruples, in both exact and float form. `None` when the hull
/// degenerates or is too eccentric for the calibrated tolerances.
pub fn build_rational_polygon(
    data: &[(i64, i64, i64, i64)],
) -> Option<(RationalPolygon, NormModel)> {
    let pts: Vec<RationalVec2> = data
        .iter()
        .map(|&(xn, xd, yn, yd)| RationalVec2::new(rational(xn, xd), rational(yn, yd)))
        .collect();
    let poly = exact::convex_hull(&pts).ok()?;
    let float = poly.to_float().ok()?;
    if eccentricity(&float) > 6.0 {
        return None;
    }
    Some((poly, float))
}
