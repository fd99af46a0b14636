//! Serializable report document: every quantity the toolkit computes for
//! one norm, with provenance on each numeric entry — an exact rational
//! string, or a float together with the tolerance it is trusted to.

use serde::{Deserialize, Serialize};

use crate::normspec::NormSpecDocument;

/// A numeric result with provenance.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ReportValue {
    /// Computed by the exact rational kernel; the string is the reduced
    /// fraction.
    Exact { exact: String },
    /// Computed by the float route; `tol` is the calibrated accuracy claim
    /// at the configuration the report was run with.
    Float { value: f64, tol: f64 },
}

/// Echo of the solver configuration the report was produced under.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConfigEcho {
    pub sweep_grid: usize,
    pub modulus_grid: usize,
    pub pair_grid: usize,
    pub attainment_tol: f64,
}

/// One row of the generalized-James table.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LambdaRow {
    pub lambda: f64,
    pub value: ReportValue,
}

/// The scalar constants of the norm, by both routes where available.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConstantsSection {
    pub james: ReportValue,
    pub schaffer: ReportValue,
    pub james_from_delta: ReportValue,
    pub schaffer_from_rho: ReportValue,
    pub generalized_james: Vec<LambdaRow>,
}

/// One sample of the three modulus curves.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CurveRow {
    pub epsilon: f64,
    pub delta: f64,
    pub rho: f64,
    pub rho_prime: f64,
}

/// Modulus curves with the accuracy claimed for every entry.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CurvesSection {
    pub tol: f64,
    pub rows: Vec<CurveRow>,
}

/// A unit pair witnessing an extremal value.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AttainmentRow {
    pub x: [f64; 2],
    pub y: [f64; 2],
    pub value: f64,
    pub defect: f64,
    /// Smallest tolerance at which the pair is approximately orthogonal;
    /// only present for modulus witnesses.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub epsilon0: Option<f64>,
}

/// Attainment witnesses with the band width they were collected at.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AttainmentSection {
    pub tol: f64,
    pub pairs: Vec<AttainmentRow>,
}

/// Outcome of one named invariant check.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckRow {
    pub name: String,
    pub passed: bool,
    /// Worst observed deviation; absent when the computation itself failed.
    pub residual: Option<f64>,
    pub tolerance: f64,
}

/// The full report for one norm.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument {
    /// The norm specification the report was computed for.
    pub norm: NormSpecDocument,
    /// "float", "exact", or "both".
    pub mode: String,
    pub configuration: ConfigEcho,
    pub constants: ConstantsSection,
    pub curves: CurvesSection,
    pub attainment: AttainmentSection,
    pub checks: Vec<CheckRow>,
}
