use affsim_core::classes::{brute_force_affine_classes, predicted_affine_classes, ClassTable};
use affsim_core::{
    build_conjugator, decide_similar, fitting_split, invariant_factors, minimal_invariant_flat, tau, AffineMap,
    FieldSpec, Matrix,
};
use serde::Serialize;
use serde_json::Value;

use crate::document::{encode_field, encode_matrix, encode_poly, encode_vector};
use crate::error::CliError;

/// A report to print and the process exit code to finish with.
pub struct Outcome {
    pub report: Value,
    pub code: u8,
}

impl Outcome {
    fn success(report: impl Serialize) -> Self {
        Outcome { report: serde_json::to_value(report).expect("reports serialize"), code: 0 }
    }
}

#[derive(Serialize)]
struct TauReport {
    tau: usize,
    n1: usize,
    fixed_point_exists: bool,
}

pub fn tau_cmd(f: &AffineMap) -> Result<Outcome, CliError> {
    let t = tau(f)?;
    let n1 = fitting_split(f.linear())?.n1;
    Ok(Outcome::success(TauReport { tau: t, n1, fixed_point_exists: t == 0 }))
}

#[derive(Serialize)]
struct SimilarReport {
    similar: bool,
    reason: String,
    #[serde(rename = "T", skip_serializing_if = "Option::is_none")]
    linear: Option<Vec<Vec<Value>>>,
    #[serde(rename = "t", skip_serializing_if = "Option::is_none")]
    translation: Option<Vec<Value>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    verified: Option<bool>,
}

pub fn similar_cmd(f: &AffineMap, g: &AffineMap, witness: bool) -> Result<Outcome, CliError> {
    let verdict = decide_similar(f, g)?;
    let mut report = SimilarReport {
        similar: verdict.is_similar(),
        reason: verdict.to_string(),
        linear: None,
        translation: None,
        verified: None,
    };
    if witness && verdict.is_similar() {
        let w = build_conjugator(f, g)?;
        report.verified = Some(w.verify(f, g));
        report.linear = Some(encode_matrix(&w.linear));
        report.translation = Some(encode_vector(&w.translation));
    }
    let code = if verdict.is_similar() { 0 } else { 1 };
    Ok(Outcome { code, ..Outcome::success(report) })
}

#[derive(Serialize)]
struct FlatReport {
    point: Vec<Value>,
    direction: Vec<Vec<Value>>,
    dim: usize,
}

pub fn flat_cmd(f: &AffineMap) -> Result<Outcome, CliError> {
    let flat = minimal_invariant_flat(f)?;
    Ok(Outcome::success(FlatReport {
        point: encode_vector(&flat.point),
        direction: flat.direction_basis().iter().map(encode_vector).collect(),
        dim: flat.dim(),
    }))
}

#[derive(Serialize)]
struct CanonReport {
    invariant_factors: Vec<Vec<Value>>,
}

pub fn canon_cmd(m: &Matrix) -> Result<Outcome, CliError> {
    let inv = invariant_factors(m)?;
    Ok(Outcome::success(CanonReport { invariant_factors: inv.factors().iter().map(encode_poly).collect() }))
}

#[derive(Serialize)]
struct ClassRow {
    matrix: Vec<Vec<Value>>,
    vector: Vec<Value>,
    invariant_factors: Vec<Vec<Value>>,
    tau: usize,
}

#[derive(Serialize)]
struct ClassesReport {
    field: Value,
    n: usize,
    invertible_only: bool,
    count: usize,
    classes: Vec<ClassRow>,
    #[serde(skip_serializing_if = "Option::is_none")]
    oracle_count: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    agreement: Option<bool>,
}

fn rows(table: &ClassTable) -> Vec<ClassRow> {
    table
        .classes
        .iter()
        .map(|c| ClassRow {
            matrix: encode_matrix(c.representative.linear()),
            vector: encode_vector(c.representative.translation()),
            invariant_factors: c.linear_invariant.factors().iter().map(encode_poly).collect(),
            tau: c.tau,
        })
        .collect()
}

/// Predicted classes; with `oracle`, also the exhaustive orbit partition for comparison.
pub fn classes_cmd(n: usize, p: u64, invertible_only: bool, oracle: bool) -> Result<Outcome, CliError> {
    let field = FieldSpec::prime(p)?;
    let predicted = predicted_affine_classes(n, p, invertible_only)?;
    let brute = if oracle { Some(brute_force_affine_classes(n, p, invertible_only)?) } else { None };
    let agreement = brute.as_ref().map(|b| predicted.agrees_with(b));
    let report = ClassesReport {
        field: encode_field(field),
        n,
        invertible_only,
        count: predicted.len(),
        classes: rows(&predicted),
        oracle_count: brute.as_ref().map(ClassTable::len),
        agreement,
    };
    let code = if agreement == Some(false) { CliError::Disagreement(String::new()).exit_code() } else { 0 };
    Ok(Outcome { code, ..Outcome::success(report) })
}
