//! JSON curve documents.
//!
//! Schema: `degree`, `interior_knots` (objects with `t` and `mult`),
//! `control_points` (arrays of coordinates), optional `name`. Numbers are
//! written in the shortest form that parses back to the identical float, so
//! serializing and re-parsing a document is lossless and byte-deterministic.

use serde::{Deserialize, Serialize};

use dualspline::{KnotVector64, SplineCurve64};

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct InteriorKnot {
    pub t: f64,
    pub mult: usize,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct CurveDocument {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub degree: usize,
    pub interior_knots: Vec<InteriorKnot>,
    pub control_points: Vec<Vec<f64>>,
}

impl CurveDocument {
    pub fn from_curve(curve: &SplineCurve64, name: Option<String>) -> Self {
        CurveDocument {
            name,
            degree: curve.kv().degree(),
            interior_knots: curve
                .kv()
                .interior()
                .iter()
                .map(|&(t, mult)| InteriorKnot { t, mult })
                .collect(),
            control_points: curve.control_points().to_vec(),
        }
    }

    pub fn knot_vector(&self) -> dualspline::Result<KnotVector64> {
        let interior: Vec<(f64, usize)> =
            self.interior_knots.iter().map(|k| (k.t, k.mult)).collect();
        KnotVector64::new(self.degree, &interior)
    }

    pub fn curve(&self) -> dualspline::Result<SplineCurve64> {
        SplineCurve64::new(self.knot_vector()?, self.control_points.clone())
    }
}

/// Truncated-power coefficient file written by convert-power.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct PowerDocument {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub degree: usize,
    pub knots: Vec<f64>,
    pub components: Vec<Vec<f64>>,
}
