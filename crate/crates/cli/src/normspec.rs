//! Norm specification documents: the JSON format describing a norm, the
//! shipped presets, and realization into float and (where possible) exact
//! models.
//!
//! A document is exact-capable when every vertex coordinate is an integer or
//! a `"p/q"` rational string; such norms can serve the exact rational kernel
//! in addition to the float solvers. Non-integer decimal coordinates are
//! float-only: a binary floating-point literal is ambiguous as an exact
//! input, so `--exact` rejects it at parse time.

use normplane_core::exact::{self, RationalPolygon, RationalVec2};
use normplane_core::norm::NormModel;
use normplane_core::vec2::Vec2;
use serde::{Deserialize, Serialize};

use crate::{CliError, Outcome};

/// The four norms shipped by name.
pub const PRESET_NAMES: [&str; 4] = ["hexagon-paper", "octagon-max", "square", "euclidean"];

/// A norm described by a JSON document.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum NormSpecDocument {
    /// Symmetric convex polygon given by the counterclockwise vertices of
    /// one half of its boundary.
    Polygon { vertices: Vec<[CoordSpec; 2]> },
    /// The ℓp norm for an exponent in [1, ∞].
    Lp { p: ExponentSpec },
    /// Regular polygon with an even number of sides, optionally rotated.
    RegularPolygon {
        sides: usize,
        #[serde(default)]
        rotation: f64,
    },
    /// A named preset.
    Preset { preset: String },
}

/// One coordinate: a JSON number, or a string holding an integer or a
/// reduced fraction `"p/q"`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CoordSpec {
    Number(f64),
    Fraction(String),
}

/// An ℓp exponent: a number, or the string `"inf"`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ExponentSpec {
    Number(f64),
    Word(String),
}

/// A realized norm: the float model always, the exact polygon when the
/// document was exact-capable, and a label for report echoes.
pub struct LoadedNorm {
    pub float: NormModel,
    pub exact: Option<RationalPolygon>,
    pub document: NormSpecDocument,
}

impl LoadedNorm {
    /// The exact polygon, or an invalid-input error explaining why the
    /// document cannot serve exact arithmetic.
    pub fn require_exact(&self) -> Outcome<&RationalPolygon> {
        self.exact.as_ref().ok_or_else(|| {
            CliError::input(
                "--exact requires a polygon with integer or p/q rational coordinates",
            )
        })
    }
}

/// Resolve `--norm`: a preset name first, then a path to a JSON document.
pub fn load_norm(arg: &str) -> Outcome<LoadedNorm> {
    if PRESET_NAMES.contains(&arg) {
        return realize(&NormSpecDocument::Preset {
            preset: arg.to_string(),
        });
    }
    let text = std::fs::read_to_string(arg).map_err(|e| {
        CliError::input(format!("cannot read norm file '{arg}': {e}"))
    })?;
    let doc: NormSpecDocument = serde_json::from_str(&text).map_err(|e| {
        CliError::input(format!(
            "parse error in '{arg}' at line {}, column {}: {e}",
            e.line(),
            e.column()
        ))
    })?;
    realize(&doc)
}

/// Build the float model and, when possible, the exact polygon.
pub fn realize(doc: &NormSpecDocument) -> Outcome<LoadedNorm> {
    let (float, exact) = match doc {
        NormSpecDocument::Polygon { vertices } => {
            let mut half_float = Vec::with_capacity(vertices.len());
            let mut half_exact = Some(Vec::with_capacity(vertices.len()));
            for pair in vertices {
                let (fx, rx) = parse_coord(&pair[0])?;
                let (fy, ry) = parse_coord(&pair[1])?;
                half_float.push(Vec2::new(fx, fy));
                half_exact = match (half_exact, rx, ry) {
                    (Some(mut acc), Some(x), Some(y)) => {
                        acc.push(RationalVec2::new(x, y));
                        Some(acc)
                    }
                    _ => None,
                };
            }
            let float = NormModel::polygon(half_float)
                .map_err(|e| CliError::input(format!("invalid polygon: {e}")))?;
            let exact = match half_exact {
                Some(half) => Some(
                    RationalPolygon::new(half)
                        .map_err(|e| CliError::input(format!("invalid polygon: {e}")))?,
                ),
                None => None,
            };
            (float, exact)
        }
        NormSpecDocument::Lp { p } => {
            let p = parse_exponent(p)?;
            let float = NormModel::lp(p)
                .map_err(|e| CliError::input(format!("invalid exponent: {e}")))?;
            // The two polygonal ends of the ℓp family have integer vertices.
            let exact = if p == 1.0 {
                Some(
                    RationalPolygon::new(vec![
                        RationalVec2::from_integers(1, 0),
                        RationalVec2::from_integers(0, 1),
                    ])
                    .expect("diamond is valid"),
                )
            } else if p.is_infinite() {
                Some(RationalPolygon::square())
            } else {
                None
            };
            (float, exact)
        }
        NormSpecDocument::RegularPolygon { sides, rotation } => {
            let float = NormModel::regular_polygon(*sides, *rotation)
                .map_err(|e| CliError::input(format!("invalid regular polygon: {e}")))?;
            (float, None)
        }
        NormSpecDocument::Preset { preset } => match preset.as_str() {
            "hexagon-paper" => (NormModel::hexagon(), Some(RationalPolygon::hexagon())),
            "octagon-max" => (NormModel::octagon(), None),
            "square" => (NormModel::square(), Some(RationalPolygon::square())),
            "euclidean" => (NormModel::euclidean(), None),
            other => {
                return Err(CliError::input(format!(
                    "unknown preset '{other}' (available: {})",
                    PRESET_NAMES.join(", ")
                )))
            }
        },
    };
    Ok(LoadedNorm {
        float,
        exact,
        document: doc.clone(),
    })
}

/// Float value of one coordinate, plus its exact value when the coordinate
/// is an integer or a rational string.
fn parse_coord(c: &CoordSpec) -> Outcome<(f64, Option<exact::Rational>)> {
    match c {
        CoordSpec::Number(f) => {
            if !f.is_finite() {
                return Err(CliError::input(format!("non-finite coordinate {f}")));
            }
            let exact_value = if f.fract() == 0.0 && f.abs() <= 9e15 {
                Some(exact::rational(*f as i64, 1))
            } else {
                None
            };
            Ok((*f, exact_value))
        }
        CoordSpec::Fraction(s) => {
            let r = exact::parse_rational(s).map_err(|_| {
                CliError::input(format!(
                    "coordinate '{s}' is not an integer or p/q rational"
                ))
            })?;
            Ok((exact::rational_to_f64(&r), Some(r)))
        }
    }
}

fn parse_exponent(p: &ExponentSpec) -> Outcome<f64> {
    match p {
        ExponentSpec::Number(f) => Ok(*f),
        ExponentSpec::Word(w) if w == "inf" => Ok(f64::INFINITY),
        ExponentSpec::Word(w) => Err(CliError::input(format!(
            "exponent must be a number or \"inf\", got '{w}'"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polygon_document_with_rational_strings_is_exact_capable() {
        let doc: NormSpecDocument = serde_json::from_str(
            r#"{"kind": "polygon", "vertices": [[1, -1], [1, 1], ["1/2", 2]]}"#,
        )
        .unwrap();
        let loaded = realize(&doc).unwrap();
        assert!(loaded.exact.is_some());
        assert!((loaded.float.gauge(Vec2::new(1.0, -1.0)) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn decimal_coordinates_are_float_only() {
        let doc: NormSpecDocument = serde_json::from_str(
            r#"{"kind": "polygon", "vertices": [[1, -1], [1, 1], [0.5, 2]]}"#,
        )
        .unwrap();
        let loaded = realize(&doc).unwrap();
        assert!(loaded.exact.is_none());
        assert!(loaded.require_exact().is_err());
    }

    #[test]
    fn lp_document_accepts_inf_and_integer_ends_are_exact() {
        let doc: NormSpecDocument = serde_json::from_str(r#"{"kind": "lp", "p": "inf"}"#).unwrap();
        let loaded = realize(&doc).unwrap();
        assert!(loaded.exact.is_some());
        let doc: NormSpecDocument = serde_json::from_str(r#"{"kind": "lp", "p": 1.5}"#).unwrap();
        assert!(realize(&doc).unwrap().exact.is_none());
    }

    #[test]
    fn presets_resolve_by_name() {
        for name in PRESET_NAMES {
            let loaded = load_norm(name).unwrap();
            let exact_expected = matches!(name, "hexagon-paper" | "square");
            assert_eq!(loaded.exact.is_some(), exact_expected, "{name}");
        }
    }

    #[test]
    fn unknown_fields_are_rejected() {
        let r = serde_json::from_str::<NormSpecDocument>(
            r#"{"kind": "lp", "p": 2, "stray": true}"#,
        );
        assert!(r.is_err());
    }

    #[test]
    fn documents_round_trip_through_json() {
        let doc = NormSpecDocument::Polygon {
            vertices: vec![
                [CoordSpec::Number(1.0), CoordSpec::Number(-1.0)],
                [CoordSpec::Number(1.0), CoordSpec::Number(1.0)],
                [CoordSpec::Fraction("1/2".into()), CoordSpec::Number(2.0)],
            ],
        };
        let text = serde_json::to_string(&doc).unwrap();
        let back: NormSpecDocument = serde_json::from_str(&text).unwrap();
        assert_eq!(back, doc);
    }
}
