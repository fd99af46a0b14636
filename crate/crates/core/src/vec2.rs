//! Plane vectors and orientation.
//!
//! Everything downstream works in a fixed coordinate plane; the only
//! primitives needed are component arithmetic, the cross product (signed
//! parallelogram area) and direction angles in `[0, 2π)`.

use core::ops::{Add, Div, Mul, Neg, Sub};

// With `std` off, the trigonometry/rounding methods on f64 come from the
// `Float` trait (libm-backed) instead of the standard library.
#[cfg(not(feature = "std"))]
use num_traits::Float as _;

/// A vector in the coordinate plane.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Vec2 {
    pub x: f64,
    pub y: f64,
}

pub const TAU: f64 = 2.0 * core::f64::consts::PI;

impl Vec2 {
    #[inline]
    pub const fn new(x: f64, y: f64) -> Self {
        Vec2 { x, y }
    }

    /// Unit direction vector `(cos θ, sin θ)`.
    #[inline]
    pub fn from_angle(theta: f64) -> Self {
        Vec2::new(theta.cos(), theta.sin())
    }

    /// Cross product `self.x * other.y - self.y * other.x`.
    ///
    /// Positive iff `other` lies counterclockwise of `self` (within a half
    /// turn); zero iff the two are collinear.
    #[inline]
    pub fn cross(self, other: Vec2) -> f64 {
        self.x * other.y - self.y * other.x
    }

    #[inline]
    pub fn dot(self, other: Vec2) -> f64 {
        self.x * other.x + self.y * other.y
    }

    /// Direction angle in `[0, 2π)`. The zero vector maps to `0`.
    #[inline]
    pub fn angle(self) -> f64 {
        let a = self.y.atan2(self.x);
        if a < 0.0 {
            a + TAU
        } else {
            a
        }
    }

    /// Euclidean length; only used for degeneracy guards, never as the norm
    /// under study.
    #[inline]
    pub fn hypot(self) -> f64 {
        self.x.hypot(self.y)
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.x == 0.0 && self.y == 0.0
    }

    #[inline]
    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }
}

/// Orientation of the ordered pair `(a, b)`: the sign of `a × b`.
///
/// `orientation(a, b) > 0` means `b` is reached from `a` by a counterclockwise
/// rotation of less than a half turn ("`a` precedes `b`").
#[inline]
pub fn orientation(a: Vec2, b: Vec2) -> f64 {
    a.cross(b)
}

/// Apply the rotation by `theta` (counterclockwise) to `v`.
#[inline]
pub fn rotate(v: Vec2, theta: f64) -> Vec2 {
    let (s, c) = theta.sin_cos();
    Vec2::new(c * v.x - s * v.y, s * v.x + c * v.y)
}

/// Wrap an angle into `[0, 2π)`.
#[inline]
pub fn wrap_angle(theta: f64) -> f64 {
    let t = theta % TAU;
    if t < 0.0 {
        t + TAU
    } else {
        t
    }
}

/// Wrap an angle into `[0, π)`; used where directions are listed modulo a
/// half turn (θ and θ + π name the same unordered axis).
#[inline]
pub fn wrap_half_turn(theta: f64) -> f64 {
    let pi = core::f64::consts::PI;
    let t = theta % pi;
    if t < 0.0 {
        t + pi
    } else {
        t
    }
}

impl Add for Vec2 {
    type Output = Vec2;
    #[inline]
    fn add(self, rhs: Vec2) -> Vec2 {
        Vec2::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl Sub for Vec2 {
    type Output = Vec2;
    #[inline]
    fn sub(self, rhs: Vec2) -> Vec2 {
        Vec2::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl Neg for Vec2 {
    type Output = Vec2;
    #[inline]
    fn neg(self) -> Vec2 {
        Vec2::new(-self.x, -self.y)
    }
}

impl Mul<f64> for Vec2 {
    type Output = Vec2;
    #[inline]
    fn mul(self, t: f64) -> Vec2 {
        Vec2::new(self.x * t, self.y * t)
    }
}

impl Mul<Vec2> for f64 {
    type Output = Vec2;
    #[inline]
    fn mul(self, v: Vec2) -> Vec2 {
        v * self
    }
}

impl Div<f64> for Vec2 {
    type Output = Vec2;
    #[inline]
    fn div(self, t: f64) -> Vec2 {
        Vec2::new(self.x / t, self.y / t)
    }
}
