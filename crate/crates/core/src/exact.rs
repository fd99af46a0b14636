//! Exact rational kernel for polygonal norms.
//!
//! For a symmetric polygon with rational vertices, the gauge of a rational
//! point, the isosceles-orthogonal partner of a rational point on the unit
//! sphere, the functional `beta` and the James constant are all rational
//! numbers, and this module computes them in arbitrary-precision rational
//! arithmetic with zero rounding. The floating-point solvers elsewhere in
//! the crate are validated against these values in the test suites; the two
//! code paths share nothing beyond the vertex data.
//!
//! The partner computation works edge by edge. As `y(t) = a + t·(b − a)`
//! traverses an edge, the two points `x ± y(t)` move along straight lines,
//! so each gauge is piecewise affine in `t`; the pieces change exactly where
//! `x + y(t)` or `x − y(t)` crosses a cone boundary `{s·w : s ≥ 0}` spanned
//! by a vertex `w`. Splitting the edge at those breakpoints leaves cells on
//! which `‖x + y(t)‖ = ‖x − y(t)‖` is a linear equation, solved exactly.
//! Collecting the roots over all edges must produce exactly one antipodal
//! pair `{y, −y}`; anything else reports [`Error::ExactStructure`] instead
//! of guessing.

use crate::error::{Error, Result};
use crate::norm::NormModel;
use crate::vec2::Vec2;
use alloc::format;
use alloc::string::ToString;
use alloc::vec::Vec;
use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Arbitrary-precision rational scalar.
pub type Rational = num_rational::BigRational;

/// Small-integer convenience constructor; panics only on `den == 0`.
pub fn rational(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Parse a rational from decimal-integer or `p/q` notation.
pub fn parse_rational(s: &str) -> Result<Rational> {
    s.trim().parse::<Rational>().map_err(|_| Error::NotRational)
}

/// Nearest floating-point value of a rational scalar.
pub fn rational_to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// A plane vector with rational coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalVec2 {
    pub x: Rational,
    pub y: Rational,
}

impl RationalVec2 {
    pub fn new(x: Rational, y: Rational) -> Self {
        RationalVec2 { x, y }
    }

    pub fn from_integers(x: i64, y: i64) -> Self {
        RationalVec2::new(rational(x, 1), rational(y, 1))
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    /// Exact cross product `x₁y₂ − y₁x₂`.
    pub fn cross(&self, other: &RationalVec2) -> Rational {
        &self.x * &other.y - &self.y * &other.x
    }

    pub fn dot(&self, other: &RationalVec2) -> Rational {
        &self.x * &other.x + &self.y * &other.y
    }

    pub fn add(&self, other: &RationalVec2) -> RationalVec2 {
        RationalVec2::new(&self.x + &other.x, &self.y + &other.y)
    }

    pub fn sub(&self, other: &RationalVec2) -> RationalVec2 {
        RationalVec2::new(&self.x - &other.x, &self.y - &other.y)
    }

    pub fn neg(&self) -> RationalVec2 {
        RationalVec2::new(-&self.x, -&self.y)
    }

    pub fn scaled(&self, s: &Rational) -> RationalVec2 {
        RationalVec2::new(&self.x * s, &self.y * s)
    }

    /// Nearest floating-point vector (rounds each coordinate).
    pub fn to_vec2(&self) -> Vec2 {
        Vec2::new(
            self.x.to_f64().unwrap_or(f64::NAN),
            self.y.to_f64().unwrap_or(f64::NAN),
        )
    }
}

/// An origin-symmetric convex polygon with rational vertices, used as a unit
/// ball for exact computations. Mirrors the validation of
/// [`crate::norm::SymmetricPolygon`], but with exact sign tests.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalPolygon {
    half: Vec<RationalVec2>,
    full: Vec<RationalVec2>,
}

impl RationalPolygon {
    /// Build from the vertices of one half of the boundary, counterclockwise.
    pub fn new(half: Vec<RationalVec2>) -> Result<Self> {
        let m = half.len();
        if m < 2 {
            return Err(Error::TooFewVertices(m));
        }
        for (i, v) in half.iter().enumerate() {
            if v.is_zero() {
                return Err(Error::BadVertex { index: i });
            }
        }
        let mut full = half.clone();
        full.extend(half.iter().map(RationalVec2::neg));

        let n = full.len();
        for k in 0..n {
            let a = &full[k];
            let b = &full[(k + 1) % n];
            let c = &full[(k + 2) % n];
            let e1 = b.sub(a);
            let e2 = c.sub(b);
            if e1.is_zero() {
                return Err(Error::DuplicateVertex { index: k });
            }
            let turn = e1.cross(&e2);
            if turn.is_zero() {
                return Err(Error::CollinearVertices { index: (k + 1) % n });
            }
            if turn.is_negative() {
                return Err(Error::NotConvex { index: (k + 1) % n });
            }
        }
        Ok(RationalPolygon { half, full })
    }

    /// The reference hexagon with half vertices (1, −1), (1, 1), (1/2, 2).
    pub fn hexagon() -> Self {
        RationalPolygon::new(alloc::vec![
            RationalVec2::from_integers(1, -1),
            RationalVec2::from_integers(1, 1),
            RationalVec2::new(rational(1, 2), rational(2, 1)),
        ])
        .expect("hexagon preset is valid")
    }

    /// The supremum-norm square with half vertices (1, 1), (−1, 1).
    pub fn square() -> Self {
        RationalPolygon::new(alloc::vec![
            RationalVec2::from_integers(1, 1),
            RationalVec2::from_integers(-1, 1),
        ])
        .expect("square preset is valid")
    }

    pub fn half_vertices(&self) -> &[RationalVec2] {
        &self.half
    }

    pub fn vertices(&self) -> &[RationalVec2] {
        &self.full
    }

    /// Index of the vertex cone `[w_k, w_{k+1})` containing the direction of
    /// `v`, for nonzero `v`.
    fn cone_of(&self, v: &RationalVec2) -> usize {
        let n = self.full.len();
        for k in 0..n {
            let wk = &self.full[k];
            let wn = &self.full[(k + 1) % n];
            if !wk.cross(v).is_negative() && v.cross(wn).is_positive() {
                return k;
            }
        }
        // A validated symmetric polygon's cones tile the plane of directions.
        unreachable!("direction not covered by any vertex cone")
    }

    /// The linear functional equal to the gauge on cone `k`, as the vector
    /// `n` with `gauge(p) = n · p` there (the scaled edge normal).
    fn cone_functional(&self, k: usize) -> RationalVec2 {
        let n = self.full.len();
        let a = &self.full[k];
        let b = &self.full[(k + 1) % n];
        let d = a.cross(b);
        RationalVec2::new((&b.y - &a.y) / &d, (&a.x - &b.x) / &d)
    }

    /// Exact Minkowski gauge of `v` (the norm). `gauge(0) = 0`.
    pub fn gauge(&self, v: &RationalVec2) -> Rational {
        if v.is_zero() {
            return Rational::zero();
        }
        self.cone_functional(self.cone_of(v)).dot(v)
    }

    /// Scale `v` onto the unit sphere. Errors on the zero vector.
    pub fn normalize(&self, v: &RationalVec2) -> Result<RationalVec2> {
        if v.is_zero() {
            return Err(Error::ZeroVector);
        }
        let g = self.gauge(v);
        Ok(v.scaled(&g.recip()))
    }

    /// The unit vector `y` with `‖x + y‖ = ‖x − y‖` and `cross(x, y) > 0`,
    /// computed exactly.
    ///
    /// `x` may be any nonzero rational point with `‖x‖ ≥ 1`; for `‖x‖ < 1`
    /// the partner need not be unique (the defect can vanish along a whole
    /// boundary segment), which is reported as [`Error::ExactStructure`]
    /// rather than resolved arbitrarily.
    pub fn iso_partner(&self, x: &RationalVec2) -> Result<RationalVec2> {
        if x.is_zero() {
            return Err(Error::ZeroVector);
        }
        let n = self.full.len();
        let mut roots: Vec<RationalVec2> = Vec::new();

        for e in 0..n {
            let a = &self.full[e];
            let b = &self.full[(e + 1) % n];
            let dir = b.sub(a);
            let sum_base = x.add(a); // x + y(t) = sum_base + t·dir
            let diff_base = x.sub(a); // x − y(t) = diff_base − t·dir

            // Split [0, 1] where either moving point crosses a vertex ray.
            let mut cuts: Vec<Rational> = alloc::vec![Rational::zero(), Rational::one()];
            for w in &self.full {
                let c1 = dir.cross(w);
                if c1.is_zero() {
                    continue;
                }
                let plus = -sum_base.cross(w) / &c1;
                if plus.is_positive() && plus < Rational::one() {
                    cuts.push(plus);
                }
                let minus = diff_base.cross(w) / &c1;
                if minus.is_positive() && minus < Rational::one() {
                    cuts.push(minus);
                }
            }
            cuts.sort();
            cuts.dedup();

            let half = rational(1, 2);
            for pair in cuts.windows(2) {
                let (t0, t1) = (&pair[0], &pair[1]);
                let tm = (t0 + t1) * &half;

                // On this cell both gauges are affine in t: locate each
                // point's cone at the cell midpoint and read off the
                // functional.
                let np = self.cone_functional(self.cone_of(&sum_base.add(&dir.scaled(&tm))));
                let nm = self.cone_functional(self.cone_of(&diff_base.sub(&dir.scaled(&tm))));
                let a1 = np.dot(&sum_base);
                let b1 = np.dot(&dir);
                let a2 = nm.dot(&diff_base);
                let b2 = -nm.dot(&dir);

                if b1 == b2 {
                    if a1 == a2 {
                        return Err(Error::ExactStructure(
                            "defect vanishes along a boundary segment; the partner is not unique"
                                .to_string(),
                        ));
                    }
                    continue;
                }
                let t = (&a2 - &a1) / (&b1 - &b2);
                if &t >= t0 && &t <= t1 {
                    roots.push(a.add(&dir.scaled(&t)));
                }
            }
        }

        roots.sort_by(|p, q| p.x.cmp(&q.x).then_with(|| p.y.cmp(&q.y)));
        roots.dedup();
        if roots.len() != 2 || roots[1] != roots[0].neg() {
            return Err(Error::ExactStructure(format!(
                "expected one antipodal pair of partner roots, found {} distinct roots",
                roots.len()
            )));
        }
        let y = if x.cross(&roots[0]).is_positive() {
            roots.swap_remove(0)
        } else if x.cross(&roots[1]).is_positive() {
            roots.swap_remove(1)
        } else {
            return Err(Error::ExactStructure(
                "partner roots are collinear with the input".to_string(),
            ));
        };
        Ok(y)
    }

    /// Exact `beta(x) = ‖x + y‖ = ‖x − y‖` at the partner `y` of `x`.
    pub fn beta(&self, x: &RationalVec2) -> Result<Rational> {
        let y = self.iso_partner(x)?;
        let plus = self.gauge(&x.add(&y));
        let minus = self.gauge(&x.sub(&y));
        if plus != minus {
            return Err(Error::ExactStructure(
                "partner does not equalize the two diagonals".to_string(),
            ));
        }
        Ok(plus)
    }

    /// Exact James constant: the largest `beta` over the sphere, attained at
    /// a vertex for polygonal norms.
    pub fn james(&self) -> Result<Rational> {
        let mut best: Option<Rational> = None;
        for v in &self.half {
            let b = self.beta(v)?;
            best = Some(match best {
                Some(cur) if cur >= b => cur,
                _ => b,
            });
        }
        best.ok_or(Error::TooFewVertices(0))
    }

    /// Floating-point model of the same polygon.
    pub fn to_float(&self) -> Result<NormModel> {
        NormModel::polygon(self.half.iter().map(RationalVec2::to_vec2).collect())
    }
}

/// Strict convex hull of the symmetrized point set `points ∪ −points`, as a
/// rational polygon. Collinear and interior points are dropped; fewer than
/// two surviving half vertices is an error.
pub fn convex_hull(points: &[RationalVec2]) -> Result<RationalPolygon> {
    let mut pts: Vec<RationalVec2> = Vec::with_capacity(points.len() * 2);
    pts.extend(points.iter().cloned());
    pts.extend(points.iter().map(RationalVec2::neg));
    pts.sort_by(|p, q| p.x.cmp(&q.x).then_with(|| p.y.cmp(&q.y)));
    pts.dedup();
    if pts.len() < 4 {
        return Err(Error::TooFewVertices(pts.len() / 2));
    }

    fn turns_left(o: &RationalVec2, a: &RationalVec2, b: &RationalVec2) -> bool {
        a.sub(o).cross(&b.sub(o)).is_positive()
    }
    let mut lower: Vec<RationalVec2> = Vec::new();
    for p in &pts {
        while lower.len() >= 2 && !turns_left(&lower[lower.len() - 2], &lower[lower.len() - 1], p)
        {
            lower.pop();
        }
        lower.push(p.clone());
    }
    let mut upper: Vec<RationalVec2> = Vec::new();
    for p in pts.iter().rev() {
        while upper.len() >= 2 && !turns_left(&upper[upper.len() - 2], &upper[upper.len() - 1], p)
        {
            upper.pop();
        }
        upper.push(p.clone());
    }
    lower.pop();
    upper.pop();
    let hull: Vec<RationalVec2> = lower.into_iter().chain(upper).collect();

    let n = hull.len();
    if n < 4 || n % 2 != 0 {
        return Err(Error::TooFewVertices(n / 2));
    }
    let m = n / 2;
    for k in 0..m {
        if hull[k + m] != hull[k].neg() {
            return Err(Error::ExactStructure(
                "hull of a symmetrized set is not antipodally symmetric".to_string(),
            ));
        }
    }
    RationalPolygon::new(hull[..m].to_vec())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rv(x: i64, y: i64) -> RationalVec2 {
        RationalVec2::from_integers(x, y)
    }

    fn rq(xn: i64, xd: i64, yn: i64, yd: i64) -> RationalVec2 {
        RationalVec2::new(rational(xn, xd), rational(yn, yd))
    }

    #[test]
    fn hexagon_gauge_values_are_exact() {
        let hex = RationalPolygon::hexagon();
        assert_eq!(hex.gauge(&rq(22, 13, 8, 13)), rational(22, 13));
        assert_eq!(hex.gauge(&rq(12, 17, 42, 17)), rational(22, 17));
        assert_eq!(hex.gauge(&rq(3, 2, 12, 7)), rational(11, 7));
        for v in hex.vertices() {
            assert_eq!(hex.gauge(v), rational(1, 1));
        }
    }

    #[test]
    fn hexagon_partners_are_exact() {
        let hex = RationalPolygon::hexagon();
        assert_eq!(hex.iso_partner(&rv(1, -1)).unwrap(), rq(9, 13, 21, 13));
        assert_eq!(hex.iso_partner(&rv(1, 1)).unwrap(), rq(-5, 17, 25, 17));
        assert_eq!(
            hex.iso_partner(&rq(1, 2, 2, 1)).unwrap(),
            rq(-1, 1, 2, 7)
        );
    }

    #[test]
    fn hexagon_betas_and_james_are_exact() {
        let hex = RationalPolygon::hexagon();
        assert_eq!(hex.beta(&rv(1, -1)).unwrap(), rational(22, 13));
        assert_eq!(hex.beta(&rv(1, 1)).unwrap(), rational(22, 17));
        assert_eq!(hex.beta(&rq(1, 2, 2, 1)).unwrap(), rational(11, 7));
        assert_eq!(hex.james().unwrap(), rational(22, 13));
    }

    #[test]
    fn square_james_is_two() {
        let sq = RationalPolygon::square();
        assert_eq!(sq.beta(&rv(1, 1)).unwrap(), rational(2, 1));
        assert_eq!(sq.james().unwrap(), rational(2, 1));
    }

    #[test]
    fn interior_point_partner_is_rejected_when_not_unique() {
        // In the supremum norm the defect of x = (1/2, 0) vanishes along a
        // whole stretch of the top edge.
        let sq = RationalPolygon::square();
        assert!(matches!(
            sq.iso_partner(&rq(1, 2, 0, 1)),
            Err(Error::ExactStructure(_))
        ));
    }

    #[test]
    fn partner_orientation_is_counterclockwise() {
        let hex = RationalPolygon::hexagon();
        for v in hex.vertices() {
            let y = hex.iso_partner(v).unwrap();
            assert!(v.cross(&y).is_positive());
            assert_eq!(hex.gauge(&y), rational(1, 1));
        }
    }

    #[test]
    fn hull_recovers_the_hexagon_from_noisy_input() {
        let mut pts = alloc::vec![
            rv(1, -1),
            rv(1, 1),
            rq(1, 2, 2, 1),
            rq(1, 4, 1, 4),  // interior
            rq(0, 1, 1, 1),  // interior
            rq(1, 1, 0, 1),  // on the right edge, collinear: must be dropped
        ];
        // Shuffle deterministically.
        pts.swap(0, 4);
        pts.swap(2, 5);
        let hull = convex_hull(&pts).unwrap();
        let want = RationalPolygon::hexagon();
        assert_eq!(hull.vertices().len(), 6);
        for v in want.vertices() {
            assert!(hull.vertices().contains(v), "missing vertex {v:?}");
            assert_eq!(hull.gauge(v), rational(1, 1));
        }
        assert_eq!(hull.james().unwrap(), rational(22, 13));
    }

    #[test]
    fn hull_rejects_degenerate_sets() {
        assert!(convex_hull(&[rv(1, 0)]).is_err());
        assert!(convex_hull(&[rv(1, 0), rv(2, 0), rv(3, 0)]).is_err());
    }

    #[test]
    fn float_model_round_trip() {
        let hex = RationalPolygon::hexagon();
        let float = hex.to_float().unwrap();
        let v = Vec2::new(22.0 / 13.0, 8.0 / 13.0);
        assert!((float.gauge(v) - 22.0 / 13.0).abs() < 1e-12);
    }

    #[test]
    fn rational_parsing() {
        assert_eq!(parse_rational("22/13").unwrap(), rational(22, 13));
        assert_eq!(parse_rational(" -3 ").unwrap(), rational(-3, 1));
        assert!(parse_rational("0.5").is_err());
        assert!(parse_rational("x").is_err());
        assert!(parse_rational("1/0").is_err());
    }

    #[test]
    fn polygon_validation_mirrors_float_rules() {
        assert!(matches!(
            RationalPolygon::new(alloc::vec![rv(1, 0)]),
            Err(Error::TooFewVertices(1))
        ));
        assert!(matches!(
            RationalPolygon::new(alloc::vec![rv(1, 0), rv(0, 0)]),
            Err(Error::BadVertex { index: 1 })
        ));
        // Antipodal half vertices collapse an edge of the symmetric closure.
        assert!(RationalPolygon::new(alloc::vec![rv(1, 0), rv(-1, 0)]).is_err());
        // Clockwise order is rejected.
        assert!(RationalPolygon::new(alloc::vec![rv(0, 1), rv(1, 0)]).is_err());
    }
}
