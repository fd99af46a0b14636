//! Error type shared by the whole crate.
//!
//! Numerical failures (lost brackets, no convergence, broken structural
//! assumptions) are reported as errors, never panics, so callers can surface
//! them with context.

use alloc::string::String;
use core::fmt;

/// Everything that can go wrong constructing norms or running solvers.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Fewer than two half vertices were supplied for a polygon.
    TooFewVertices(usize),
    /// A polygon vertex is the zero vector (or not finite).
    BadVertex { index: usize },
    /// Two consecutive polygon vertices coincide.
    DuplicateVertex { index: usize },
    /// Three consecutive vertices of the symmetric closure are collinear.
    CollinearVertices { index: usize },
    /// The symmetric closure of the vertex list is not convex in
    /// counterclockwise order.
    NotConvex { index: usize },
    /// The operation needs a polyhedral norm (extreme-point enumeration on a
    /// smooth ball, exact arithmetic on an ℓp ball, ...).
    NotPolyhedral,
    /// A direction or sample point was the zero vector.
    ZeroVector,
    /// A radius that must be positive was not.
    NonPositiveRadius(f64),
    /// ε outside the domain of the operation.
    InvalidEpsilon(f64),
    /// ℓp exponent outside `[1, ∞]`, or a non-finite parameter where a finite
    /// one is required.
    InvalidExponent(f64),
    /// λ outside the open interval (0, 1).
    InvalidLambda(f64),
    /// The two vectors of a pair are parallel where that is not allowed.
    DegeneratePair,
    /// A bisection solver was asked to run without a sign change to bracket.
    NoBracket { lo: f64, hi: f64 },
    /// An iteration limit was exhausted before reaching tolerance.
    NoConvergence { iterations: usize },
    /// The exact kernel found a partner-root structure other than the
    /// expected antipodal pair; indicates invalid input (e.g. a point off the
    /// unit sphere).
    ExactStructure(String),
    /// Exact arithmetic was requested for data that is not exactly rational.
    NotRational,
}

pub type Result<T> = core::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::TooFewVertices(n) => {
                write!(f, "need at least 2 half vertices, got {n}")
            }
            Error::BadVertex { index } => {
                write!(f, "vertex {index} is zero or not finite")
            }
            Error::DuplicateVertex { index } => {
                write!(f, "vertices {index} and {} coincide", index + 1)
            }
            Error::CollinearVertices { index } => {
                write!(f, "vertices around index {index} are collinear")
            }
            Error::NotConvex { index } => {
                write!(
                    f,
                    "vertex list (with symmetric closure) is not convex counterclockwise at index {index}"
                )
            }
            Error::NotPolyhedral => write!(f, "operation requires a polyhedral norm"),
            Error::ZeroVector => write!(f, "zero vector where a direction is required"),
            Error::NonPositiveRadius(r) => write!(f, "radius must be positive, got {r}"),
            Error::InvalidEpsilon(e) => write!(f, "epsilon {e} outside the valid range"),
            Error::InvalidExponent(p) => write!(f, "invalid exponent or parameter {p}"),
            Error::InvalidLambda(l) => write!(f, "lambda {l} outside the open interval (0, 1)"),
            Error::DegeneratePair => write!(f, "the two vectors are parallel"),
            Error::NoBracket { lo, hi } => {
                write!(f, "no sign change to bracket on [{lo}, {hi}]")
            }
            Error::NoConvergence { iterations } => {
                write!(f, "no convergence after {iterations} iterations")
            }
            Error::ExactStructure(msg) => write!(f, "exact kernel: {msg}"),
            Error::NotRational => write!(f, "input is not exactly rational"),
        }
    }
}

impl core::error::Error for Error {}
