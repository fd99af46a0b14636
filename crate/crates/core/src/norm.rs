//! Norms on the plane: symmetric convex polygons and ℓp balls.
//!
//! A norm is represented by its closed unit ball. Polygonal balls are given
//! by the vertices of one half of the boundary; the other half is the
//! reflection through the origin, so the input never has to repeat itself.
//! Smooth balls are the ℓp family for 1 < p < ∞. The degenerate ends of that
//! family (p = 1 and p = ∞) are polyhedral and are represented as polygons.
//!
//! Directions are parametrized by the angle θ of the ray from the origin, and
//! `sphere_point(θ)` is the unique boundary point on that ray. All boundary
//! walks in the crate are walks in θ.

use alloc::vec::Vec;

#[cfg(not(feature = "std"))]
use num_traits::Float as _;

use crate::error::{Error, Result};
use crate::vec2::{rotate, Vec2, TAU};

/// An origin-symmetric convex polygon, used as a unit ball.
///
/// Invariants (enforced by [`SymmetricPolygon::new`]):
/// * at least 2 half vertices, all finite and nonzero;
/// * the symmetric closure `half ∪ -half` lists the vertex cycle in strictly
///   convex counterclockwise order (no repeats, no collinear triples).
#[derive(Debug, Clone, PartialEq)]
pub struct SymmetricPolygon {
    half: Vec<Vec2>,
    full: Vec<Vec2>,
    /// One functional per edge of the upper half, scaled so the edge lies on
    /// `{v : n·v = 1}`; the lower-half edges are their negations, so
    /// `gauge(v) = max_k |n_k · v|`.
    normals: Vec<Vec2>,
}

impl SymmetricPolygon {
    /// Build a polygon from the vertices of one half of the boundary, in
    /// counterclockwise order.
    pub fn new(half: Vec<Vec2>) -> Result<Self> {
        let m = half.len();
        if m < 2 {
            return Err(Error::TooFewVertices(m));
        }
        for (i, v) in half.iter().enumerate() {
            if !v.is_finite() || v.is_zero() {
                return Err(Error::BadVertex { index: i });
            }
        }

        let mut full = Vec::with_capacity(2 * m);
        full.extend_from_slice(&half);
        full.extend(half.iter().map(|&v| -v));

        // Strict convexity of the whole cycle: every consecutive edge pair
        // must turn left. This single pass also rejects repeated vertices
        // (zero edge) and collinear triples (zero turn).
        let n = full.len();
        for k in 0..n {
            let a = full[k];
            let b = full[(k + 1) % n];
            let c = full[(k + 2) % n];
            let e1 = b - a;
            let e2 = c - b;
            if e1.is_zero() {
                return Err(Error::DuplicateVertex { index: k });
            }
            let turn = e1.cross(e2);
            if turn == 0.0 {
                return Err(Error::CollinearVertices { index: (k + 1) % n });
            }
            if turn < 0.0 {
                return Err(Error::NotConvex { index: (k + 1) % n });
            }
        }

        let mut normals = Vec::with_capacity(m);
        for k in 0..m {
            let a = full[k];
            let b = full[k + 1];
            let d = a.cross(b);
            if d <= 0.0 {
                // Convex + symmetric already implies the origin is interior;
                // this only fires on broken float input (overflow etc.).
                return Err(Error::NotConvex { index: k });
            }
            normals.push(Vec2::new(b.y - a.y, a.x - b.x) / d);
        }

        Ok(SymmetricPolygon {
            half,
            full,
            normals,
        })
    }

    /// The vertices of the constructing half, counterclockwise.
    pub fn half_vertices(&self) -> &[Vec2] {
        &self.half
    }

    /// The full vertex cycle, counterclockwise.
    pub fn vertices(&self) -> &[Vec2] {
        &self.full
    }

    /// Minkowski gauge of `v`: the factor by which the unit ball must be
    /// scaled to put `v` on its boundary. This is the norm.
    #[inline]
    pub fn gauge(&self, v: Vec2) -> f64 {
        // Support-function form: the ball is the intersection of the slabs
        // |n_k · v| ≤ 1, and the gauge is the largest slab coordinate.
        let mut best = 0.0f64;
        for n in &self.normals {
            let d = (n.x * v.x + n.y * v.y).abs();
            if d > best {
                best = d;
            }
        }
        best
    }
}

/// A norm on the plane, as a unit-ball model.
#[derive(Debug, Clone, PartialEq)]
pub enum NormModel {
    /// Polygonal unit ball.
    Polygon(SymmetricPolygon),
    /// ℓp ball with `1 < p < ∞` (strictly convex and smooth).
    Lp(f64),
}

impl NormModel {
    /// Polygonal norm from the counterclockwise half-vertex list.
    pub fn polygon(half: Vec<Vec2>) -> Result<Self> {
        Ok(NormModel::Polygon(SymmetricPolygon::new(half)?))
    }

    /// ℓp norm for `1 ≤ p ≤ ∞`. The polyhedral ends are converted to their
    /// polygons: p = 1 becomes the diamond, p = ∞ the square.
    pub fn lp(p: f64) -> Result<Self> {
        if p.is_nan() || p < 1.0 {
            return Err(Error::InvalidExponent(p));
        }
        if p == 1.0 {
            return NormModel::polygon(alloc::vec![Vec2::new(1.0, 0.0), Vec2::new(0.0, 1.0)]);
        }
        if p.is_infinite() {
            return NormModel::polygon(alloc::vec![Vec2::new(1.0, 1.0), Vec2::new(-1.0, 1.0)]);
        }
        Ok(NormModel::Lp(p))
    }

    /// Regular polygon with an even number of sides, vertices on the
    /// Euclidean unit circle at angles `rotation + 2πk/sides`.
    pub fn regular_polygon(sides: usize, rotation: f64) -> Result<Self> {
        if sides < 4 || sides % 2 != 0 {
            return Err(Error::TooFewVertices(sides / 2));
        }
        if !rotation.is_finite() {
            return Err(Error::InvalidExponent(rotation));
        }
        let half = (0..sides / 2)
            .map(|k| Vec2::from_angle(rotation + TAU * (k as f64) / (sides as f64)))
            .collect();
        NormModel::polygon(half)
    }

    /// The irregular hexagon with half vertices (1, -1), (1, 1), (1/2, 2);
    /// all of its characteristic quantities are rational, which makes it the
    /// reference example for the exact kernel.
    pub fn hexagon() -> Self {
        NormModel::polygon(alloc::vec![
            Vec2::new(1.0, -1.0),
            Vec2::new(1.0, 1.0),
            Vec2::new(0.5, 2.0),
        ])
        .expect("hexagon preset is valid")
    }

    /// The regular octagon `max{|x|, |y|, (|x|+|y|)/√2} ≤ 1`, invariant under
    /// rotation by π/4.
    pub fn octagon() -> Self {
        let a = core::f64::consts::SQRT_2 - 1.0;
        NormModel::polygon(alloc::vec![
            Vec2::new(1.0, a),
            Vec2::new(a, 1.0),
            Vec2::new(-a, 1.0),
            Vec2::new(-1.0, a),
        ])
        .expect("octagon preset is valid")
    }

    /// The ℓ∞ square.
    pub fn square() -> Self {
        NormModel::lp(f64::INFINITY).expect("square preset is valid")
    }

    /// The Euclidean norm (ℓ2).
    pub fn euclidean() -> Self {
        NormModel::Lp(2.0)
    }

    /// The norm of `v` (Minkowski gauge of the unit ball). `gauge(0) = 0`.
    #[inline]
    pub fn gauge(&self, v: Vec2) -> f64 {
        match self {
            NormModel::Polygon(p) => p.gauge(v),
            NormModel::Lp(p) => {
                if *p == 2.0 {
                    (v.x * v.x + v.y * v.y).sqrt()
                } else {
                    (v.x.abs().powf(*p) + v.y.abs().powf(*p)).powf(1.0 / *p)
                }
            }
        }
    }

    /// The unit-sphere point in direction θ.
    #[inline]
    pub fn sphere_point(&self, theta: f64) -> Vec2 {
        let u = Vec2::from_angle(theta);
        u / self.gauge(u)
    }

    /// Scale `v` onto the unit sphere. Errors on the zero vector.
    pub fn normalize(&self, v: Vec2) -> Result<Vec2> {
        if v.is_zero() || !v.is_finite() {
            return Err(Error::ZeroVector);
        }
        Ok(v / self.gauge(v))
    }

    /// Whether the unit ball is a polygon.
    pub fn is_polyhedral(&self) -> bool {
        matches!(self, NormModel::Polygon(_))
    }

    /// Whether the norm is strictly convex (no segments on the sphere). For
    /// the models here this is exactly the non-polyhedral case.
    pub fn is_strictly_convex(&self) -> bool {
        !self.is_polyhedral()
    }

    /// Extreme points of the unit ball (the full vertex cycle). Errors with
    /// [`Error::NotPolyhedral`] for smooth balls, whose extreme-point set is
    /// the whole sphere.
    pub fn extreme_points(&self) -> Result<Vec<Vec2>> {
        match self {
            NormModel::Polygon(p) => Ok(p.vertices().to_vec()),
            NormModel::Lp(_) => Err(Error::NotPolyhedral),
        }
    }

    /// Largest deviation `| ‖R_θ u‖ - 1 |` over `samples` unit-sphere points
    /// u, where `R_θ` is the rotation by θ. Zero (up to rounding) exactly
    /// when the norm is invariant under that rotation.
    pub fn rotation_invariance_check(&self, theta: f64, samples: usize) -> f64 {
        let mut worst = 0.0f64;
        for k in 0..samples.max(1) {
            let u = self.sphere_point(TAU * (k as f64) / (samples.max(1) as f64));
            let d = (self.gauge(rotate(u, theta)) - 1.0).abs();
            if d > worst {
                worst = d;
            }
        }
        worst
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const SQRT_2: f64 = core::f64::consts::SQRT_2;

    #[test]
    fn hexagon_gauge_golden_values() {
        let h = NormModel::hexagon();
        // Boundary points of the scaled ball, chosen so the values are exact
        // small rationals.
        assert!((h.gauge(Vec2::new(22.0 / 13.0, 8.0 / 13.0)) - 22.0 / 13.0).abs() < 1e-14);
        assert!((h.gauge(Vec2::new(12.0 / 17.0, 42.0 / 17.0)) - 22.0 / 17.0).abs() < 1e-14);
        assert!((h.gauge(Vec2::new(1.5, 12.0 / 7.0)) - 11.0 / 7.0).abs() < 1e-14);
        // Vertices are unit.
        for v in NormModel::hexagon().extreme_points().unwrap() {
            assert!((h.gauge(v) - 1.0).abs() < 1e-15);
        }
    }

    #[test]
    fn square_and_diamond_are_polygons() {
        let sq = NormModel::square();
        assert!(sq.is_polyhedral());
        assert_eq!(sq.gauge(Vec2::new(0.3, -0.9)), 0.9);
        assert_eq!(sq.gauge(Vec2::new(-2.5, 1.0)), 2.5);

        let d = NormModel::lp(1.0).unwrap();
        assert!(d.is_polyhedral());
        assert!((d.gauge(Vec2::new(0.3, -0.9)) - 1.2).abs() < 1e-15);
    }

    #[test]
    fn lp_gauge_values() {
        let e = NormModel::euclidean();
        assert!((e.gauge(Vec2::new(3.0, 4.0)) - 5.0).abs() < 1e-15);
        let p3 = NormModel::lp(3.0).unwrap();
        assert!((p3.gauge(Vec2::new(1.0, 1.0)) - 2.0f64.powf(1.0 / 3.0)).abs() < 1e-15);
        assert!(NormModel::lp(0.5).is_err());
        assert!(NormModel::lp(f64::NAN).is_err());
    }

    #[test]
    fn octagon_matches_max_formula() {
        let o = NormModel::octagon();
        let f = |v: Vec2| {
            let m = v.x.abs().max(v.y.abs());
            m.max((v.x.abs() + v.y.abs()) / SQRT_2)
        };
        for k in 0..64 {
            let v = Vec2::from_angle(TAU * k as f64 / 64.0) * 1.7;
            assert!((o.gauge(v) - f(v)).abs() < 1e-14, "direction {k}");
        }
    }

    #[test]
    fn sphere_point_is_unit() {
        for norm in [
            NormModel::hexagon(),
            NormModel::octagon(),
            NormModel::square(),
            NormModel::euclidean(),
            NormModel::lp(1.5).unwrap(),
        ] {
            for k in 0..128 {
                let theta = TAU * k as f64 / 128.0;
                let u = norm.sphere_point(theta);
                assert!((norm.gauge(u) - 1.0).abs() < 1e-14);
                // Direction is preserved.
                assert!(u.cross(Vec2::from_angle(theta)).abs() < 1e-14);
            }
        }
    }

    #[test]
    fn validation_rejects_bad_input() {
        // Too few.
        assert!(matches!(
            NormModel::polygon(alloc::vec![Vec2::new(1.0, 0.0)]),
            Err(Error::TooFewVertices(1))
        ));
        // Clockwise order.
        assert!(NormModel::polygon(alloc::vec![Vec2::new(1.0, 1.0), Vec2::new(1.0, -1.0)]).is_err());
        // Collinear triple once symmetrized.
        assert!(matches!(
            NormModel::polygon(alloc::vec![
                Vec2::new(1.0, -1.0),
                Vec2::new(1.0, 0.0),
                Vec2::new(1.0, 1.0)
            ]),
            Err(Error::CollinearVertices { .. })
        ));
        // Zero vertex.
        assert!(matches!(
            NormModel::polygon(alloc::vec![Vec2::new(0.0, 0.0), Vec2::new(0.0, 1.0)]),
            Err(Error::BadVertex { index: 0 })
        ));
        // Antipodal pair listed in one half.
        assert!(NormModel::polygon(alloc::vec![Vec2::new(1.0, 0.0), Vec2::new(-1.0, 0.0)]).is_err());
    }

    #[test]
    fn octagon_rotation_invariance() {
        let o = NormModel::octagon();
        assert!(o.rotation_invariance_check(core::f64::consts::FRAC_PI_4, 256) < 1e-12);
        // The square is *not* invariant under π/4; the worst deviation is
        // √2 - 1 at the corner directions.
        let sq = NormModel::square();
        let dev = sq.rotation_invariance_check(core::f64::consts::FRAC_PI_4, 256);
        assert!((dev - (SQRT_2 - 1.0)).abs() < 1e-3, "dev = {dev}");
    }

    #[test]
    fn regular_polygon_closes_up() {
        let r = NormModel::regular_polygon(8, 0.3).unwrap();
        let pts = r.extreme_points().unwrap();
        assert_eq!(pts.len(), 8);
        for (k, v) in pts.iter().enumerate() {
            assert!((v.hypot() - 1.0).abs() < 1e-15, "vertex {k}");
        }
        assert!(NormModel::regular_polygon(7, 0.0).is_err());
        assert!(NormModel::regular_polygon(2, 0.0).is_err());
    }
}
