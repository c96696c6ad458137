//! Report documents emitted by the command-line tool.
//!
//! Reports are deterministic: the same input bytes and flags produce
//! byte-identical JSON apart from the `version` field. Field order is fixed
//! by struct declaration, numbers go through the shortest round-trip
//! encoding, and CSV payloads carry 17 significant digits so they parse back
//! to the exact doubles that were computed.

use crate::linalg::Matrix;
use crate::spectral::Signature;
use serde::Serialize;

#[derive(Serialize)]
pub struct Report<T: Serialize> {
    pub command: &'static str,
    pub input_digest: String,
    pub result: T,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<f64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub signature: Option<Signature>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notices: Vec<String>,
    pub tolerances: Tolerances,
    pub version: &'static str,
}

#[derive(Serialize)]
pub struct Tolerances {
    pub tol: f64,
}

impl<T: Serialize> Report<T> {
    pub fn new(command: &'static str, input_digest: String, result: T, tol: f64) -> Self {
        Report {
            command,
            input_digest,
            result,
            witness: None,
            signature: None,
            notices: vec![],
            tolerances: Tolerances { tol },
            version: env!("CARGO_PKG_VERSION"),
        }
    }

    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("report serializes");
        text.push('\n');
        text
    }
}

#[derive(Serialize)]
pub struct DotResult {
    pub mode: &'static str,
    pub scalar_product: f64,
}

#[derive(Serialize)]
pub struct DistResult {
    pub squared_distance: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub distance: Option<f64>,
}

#[derive(Serialize)]
pub struct GramResult {
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub csv_path: Option<String>,
}

#[derive(Serialize)]
pub struct EmbedResult {
    pub n_points: usize,
    pub dimension: usize,
    pub axis_signs: Vec<i8>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub csv_path: Option<String>,
}

#[derive(Serialize)]
pub struct CheckEuclideanResult {
    pub embeddable: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_value: Option<f64>,
}

#[derive(Serialize)]
pub struct CheckSturmResult {
    pub satisfied: bool,
    pub method: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub samples: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub per_vertex: Vec<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_value: Option<f64>,
}

#[derive(Serialize)]
pub struct TriResult {
    pub squared_distance: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub distance: Option<f64>,
}

/// Drops the sign of negative zero so reports never print `-0`.
pub fn unsign_zero(x: f64) -> f64 {
    x + 0.0
}

/// One CSV row per matrix row, entries with 17 significant digits.
pub fn matrix_to_csv(m: &Matrix) -> String {
    let mut out = String::new();
    for i in 0..m.rows() {
        let row: Vec<String> = m
            .row(i)
            .iter()
            .map(|&x| format!("{:.16e}", unsign_zero(x)))
            .collect();
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

/// Same format for a point list (rows of coordinates).
pub fn points_to_csv(points: &[Vec<f64>]) -> String {
    let mut out = String::new();
    for p in points {
        let row: Vec<String> = p.iter().map(|&x| format!("{:.16e}", unsign_zero(x))).collect();
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

pub fn join_numbers(values: &[f64]) -> String {
    values
        .iter()
        .map(|&x| format!("{}", unsign_zero(x)))
        .collect::<Vec<_>>()
        .join(",")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_has_seventeen_significant_digits() {
        let m = Matrix::from_rows(&[vec![1.0 / 3.0]]).unwrap();
        let csv = matrix_to_csv(&m);
        assert_eq!(csv, "3.3333333333333331e-1\n");
        let parsed: f64 = csv.trim().parse().unwrap();
        assert_eq!(parsed, 1.0 / 3.0);
    }

    #[test]
    fn report_fields_keep_declaration_order() {
        let report = Report::new(
            "dot",
            "sha256:x".to_string(),
            DotResult {
                mode: "displacement",
                scalar_product: 0.5,
            },
            1e-10,
        );
        let json = report.to_json();
        let command_at = json.find("\"command\"").unwrap();
        let digest_at = json.find("\"input_digest\"").unwrap();
        let version_at = json.find("\"version\"").unwrap();
        assert!(command_at < digest_at && digest_at < version_at);
        assert!(!json.contains("witness"));
    }
}
