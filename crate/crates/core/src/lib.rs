//! Geometry of two-dimensional normed spaces built around isosceles
//! orthogonality: `x ⊥ y` when `‖x + y‖ = ‖x − y‖`.
//!
//! The crate models a norm by its unit ball — an origin-symmetric convex
//! polygon or an ℓp ball — and computes, for that norm:
//!
//! * orthogonal partners of a vector at any radius, including detection of
//!   partner non-uniqueness on polygonal spheres ([`iso`]);
//! * the approximate-orthogonality relation, its minimal feasible tolerance
//!   for a pair, and the arc of approximately orthogonal directions ([`iso`]);
//! * the functionals `beta`/`alpha` on the sphere, their convex-weight
//!   variant, and the James and Schäffer constants with attainment
//!   witnesses ([`constants`]);
//! * the moduli of convexity and smoothness and the recovery of both
//!   constants from them ([`modulus`]);
//! * exact rational values of gauges, partners, `beta` and the James
//!   constant for polygons with rational vertices ([`exact`]);
//! * slow, independent brute-force evaluations of every constant for
//!   cross-validation ([`oracle`]), plus a named self-check battery
//!   ([`report`]).
//!
//! The default build targets `std`; disable default features for
//! `no_std` + `alloc` environments.
//!
//! ```
//! use normplane_core::{constants, NormModel, Params};
//!
//! let hexagon = NormModel::hexagon();
//! let j = constants::james(&hexagon, &Params::default()).unwrap();
//! assert!((j - 22.0 / 13.0).abs() < 1e-9);
//! ```
#![cfg_attr(not(feature = "std"), no_std)]
#![deny(unsafe_code)]

extern crate alloc;

pub mod config;
pub mod constants;
pub mod error;
pub mod exact;
pub mod iso;
pub mod modulus;
pub mod norm;
pub mod oracle;
pub mod report;
mod rng;
mod solve;
pub mod vec2;

pub use config::Params;
pub use error::{Error, Result};
pub use norm::{NormModel, SymmetricPolygon};
pub use vec2::Vec2;
